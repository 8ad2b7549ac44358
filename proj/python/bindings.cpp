#include "pgst/certifier.hpp"
#include "pgst/dynamics.hpp"
#include "pgst/export.hpp"
#include "pgst/graph.hpp"
#include "pgst/involution.hpp"
#include "pgst/paths.hpp"
#include "pgst/polynomial.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace pgst;

namespace {

// Graph documents cross the boundary as JSON text; the Python wrapper
// handles dict conversion.
GraphDocument load(const std::string& text, std::optional<std::vector<int>> sigma, std::optional<int> u,
                   std::optional<std::string> q_value) {
    GraphDocument doc = parse_graph(text);
    if (sigma) {
        std::vector<int> zero;
        for (int s : *sigma) zero.push_back(s - 1);
        doc.sigma = zero;
    }
    if (u) {
        if (*u < 1 || *u > doc.graph.vertex_count()) throw Error("u out of range");
        doc.u = *u - 1;
    }
    if (q_value) doc.q_value = parse_rational(*q_value);
    return doc;
}

InvolutionInfo involution_for(const GraphDocument& doc) {
    if (doc.sigma) return verify_involution(doc.graph, *doc.sigma);
    std::vector<InvolutionInfo> candidates;
    for (const auto& inv : enumerate_involutions(doc.graph))
        if (!doc.u || inv.moves(*doc.u)) candidates.push_back(inv);
    if (candidates.size() != 1)
        throw Error(std::to_string(candidates.size()) + " involutions qualify; pass sigma explicitly");
    return candidates.front();
}

SpectralData spectrum_of(const GraphDocument& doc, int digits) {
    Potential q = doc.potential;
    if (!q.is_concrete()) {
        if (!doc.q_value) throw Error("the potential is symbolic; pass q_value");
        q = q.substitute(*doc.q_value);
    }
    return eigendecompose(build_hamiltonian(doc.graph, q), digits);
}

int vertex(const GraphDocument& doc, int one_based) {
    if (one_based < 1 || one_based > doc.graph.vertex_count()) throw Error("vertex out of range");
    return one_based - 1;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<Error>(m, "PgstError", PyExc_ValueError);

    m.def("certify",
          [](const std::string& text, std::optional<int> u, std::optional<std::vector<int>> sigma,
             std::optional<std::string> q_value, int precision, int height_bound) {
              const GraphDocument doc = load(text, sigma, u, q_value);
              if (!doc.u) throw Error("a vertex u is required");
              CertifyOptions opts;
              opts.precision_digits = precision;
              opts.height_bound = height_bound;
              opts.q_value = doc.q_value;
              return verdict_json(certify(doc.graph, involution_for(doc), doc.potential, *doc.u, opts));
          },
          py::arg("graph_json"), py::arg("u") = py::none(), py::arg("sigma") = py::none(),
          py::arg("q_value") = py::none(), py::arg("precision") = 60, py::arg("height_bound") = 50);

    m.def("involutions",
          [](const std::string& text) { return involutions_json(enumerate_involutions(parse_graph(text).graph)); },
          py::arg("graph_json"));

    m.def("decompose",
          [](const std::string& text, std::optional<std::vector<int>> sigma, std::optional<int> u) {
              const GraphDocument doc = load(text, sigma, u, std::nullopt);
              const InvolutionInfo inv = involution_for(doc);
              return decomposition_json(decompose(build_hamiltonian(doc.graph, doc.potential), inv), inv);
          },
          py::arg("graph_json"), py::arg("sigma") = py::none(), py::arg("u") = py::none());

    m.def("fidelity",
          [](const std::string& text, int u, int v, const std::vector<double>& times,
             std::optional<std::string> q_value, int precision) {
              const GraphDocument doc = load(text, std::nullopt, std::nullopt, q_value);
              return fidelity_trace(spectrum_of(doc, precision), vertex(doc, u), vertex(doc, v), times).fidelities;
          },
          py::arg("graph_json"), py::arg("u"), py::arg("v"), py::arg("times"), py::arg("q_value") = py::none(),
          py::arg("precision") = 60);

    m.def("search_transfer_time",
          [](const std::string& text, int u, int v, double epsilon, double t_max, std::optional<std::string> q_value,
             int precision) {
              const GraphDocument doc = load(text, std::nullopt, std::nullopt, q_value);
              const auto r =
                  search_transfer_time(spectrum_of(doc, precision), vertex(doc, u), vertex(doc, v), epsilon, t_max);
              return std::make_tuple(r.t, r.fidelity, r.reached);
          },
          py::arg("graph_json"), py::arg("u"), py::arg("v"), py::arg("epsilon") = 0.01, py::arg("t_max") = 1000.0,
          py::arg("q_value") = py::none(), py::arg("precision") = 60);

    m.def("path_plus_minus",
          [](int n) {
              const auto [plus, minus] = path_plus_minus(n);
              return std::make_pair(qlinear_json(plus), qlinear_json(minus));
          },
          py::arg("n"));

    m.def("path_coprimality", [](int n) { return coprimality_json(path_coprimality_check(n)); }, py::arg("n"));
}
