#include "pgst/certifier.hpp"
#include "pgst/dynamics.hpp"
#include "pgst/export.hpp"
#include "pgst/graph.hpp"
#include "pgst/involution.hpp"
#include "pgst/paths.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace pgst;

constexpr int exit_decided = 0;
constexpr int exit_input_error = 1;
constexpr int exit_inconclusive = 2;

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_path;
    std::optional<int> u;  // 1-indexed
    std::optional<int> v;  // 1-indexed
    std::string sigma;
    std::string q_value;
    int precision_digits = 60;
    int height_bound = 50;
    double epsilon = 0.01;
    double t_max = 1000;
    double dt = 0.05;
    int path_n = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output_path);
    if (!out) throw Error("cannot write output file '" + cfg.output_path + "'");
    out << text;
}

GraphDocument load(const RunConfig& cfg) {
    if (cfg.input_path.empty()) throw Error("--input is required for this command");
    GraphDocument doc = parse_graph(read_file(cfg.input_path));
    if (cfg.u) {
        if (*cfg.u < 1 || *cfg.u > doc.graph.vertex_count()) throw Error("--u: vertex out of range");
        doc.u = *cfg.u - 1;
    }
    if (!cfg.q_value.empty()) doc.q_value = parse_rational(cfg.q_value);
    if (!cfg.sigma.empty()) {
        doc.sigma.reset();
        doc.sigma_auto = cfg.sigma == "auto";
        if (!doc.sigma_auto) {
            std::vector<int> sigma;
            std::stringstream ss(cfg.sigma);
            std::string item;
            while (std::getline(ss, item, ',')) sigma.push_back(std::stoi(item) - 1);
            doc.sigma = sigma;
        }
    }
    return doc;
}

int required_u(const GraphDocument& doc) {
    if (!doc.u) throw Error("a vertex u is required (--u or \"u\" in the input)");
    return *doc.u;
}

// Explicit sigma when given; otherwise the unique involution moving u.
InvolutionInfo resolve_involution(const GraphDocument& doc) {
    if (doc.sigma) return verify_involution(doc.graph, *doc.sigma);
    const auto all = enumerate_involutions(doc.graph);
    std::vector<InvolutionInfo> candidates;
    for (const auto& inv : all)
        if (!doc.u || inv.moves(*doc.u)) candidates.push_back(inv);
    if (candidates.empty()) throw Error("no non-trivial involution moves the requested vertex");
    if (candidates.size() > 1)
        throw Error(std::to_string(candidates.size()) + " involutions qualify; choose one with --sigma");
    return candidates.front();
}

Potential concrete_potential(const GraphDocument& doc) {
    if (doc.potential.is_concrete()) return doc.potential;
    if (!doc.q_value) throw Error("the potential is symbolic; supply --q-value");
    return doc.potential.substitute(*doc.q_value);
}

int cmd_certify(const RunConfig& cfg) {
    const GraphDocument doc = load(cfg);
    const int u = required_u(doc);
    const InvolutionInfo inv = resolve_involution(doc);
    CertifyOptions opts;
    opts.precision_digits = cfg.precision_digits;
    opts.height_bound = cfg.height_bound;
    opts.q_value = doc.q_value;
    const PGSTVerdict verdict = certify(doc.graph, inv, doc.potential, u, opts);
    emit(cfg, verdict_json(verdict) + "\n");
    return verdict.conclusion == Conclusion::Inconclusive ? exit_inconclusive : exit_decided;
}

int cmd_simulate(const RunConfig& cfg) {
    const GraphDocument doc = load(cfg);
    const int u = required_u(doc);
    int v = 0;
    if (cfg.v) {
        if (*cfg.v < 1 || *cfg.v > doc.graph.vertex_count()) throw Error("--v: vertex out of range");
        v = *cfg.v - 1;
    } else if (doc.sigma) {
        v = verify_involution(doc.graph, *doc.sigma).sigma[static_cast<std::size_t>(u)];
    } else {
        throw Error("a target vertex is required (--v, or sigma in the input)");
    }
    if (u == v) throw Error("source and target coincide");
    const SpectralData s = eigendecompose(build_hamiltonian(doc.graph, concrete_potential(doc)), cfg.precision_digits);
    const FidelityTrace trace = fidelity_trace(s, u, v, uniform_grid(cfg.t_max, cfg.dt));
    const TransferTime first = search_transfer_time(s, u, v, cfg.epsilon, cfg.t_max);

    std::ostringstream csv;
    write_fidelity_csv(csv, trace);
    emit(cfg, csv.str());
    std::ostream& summary = cfg.output_path.empty() ? std::cerr : std::cout;
    const bool refined_better = first.fidelity > trace.best_fidelity;
    char line[160];
    std::snprintf(line, sizeof line, "best t=%.17g fidelity=%.17g\n", refined_better ? first.t : trace.best_t,
                  refined_better ? first.fidelity : trace.best_fidelity);
    summary << line;
    std::snprintf(line, sizeof line, "first t=%.17g fidelity=%.17g reached=%s\n", first.t, first.fidelity,
                  first.reached ? "true" : "false");
    summary << line;
    // Not reaching 1 - epsilon within t_max says nothing about larger times.
    return first.reached ? exit_decided : exit_inconclusive;
}

int cmd_involutions(const RunConfig& cfg) {
    const GraphDocument doc = load(cfg);
    emit(cfg, involutions_json(enumerate_involutions(doc.graph)) + "\n");
    return exit_decided;
}

int cmd_decompose(const RunConfig& cfg) {
    const GraphDocument doc = load(cfg);
    const InvolutionInfo inv = resolve_involution(doc);
    const auto bd = decompose(build_hamiltonian(doc.graph, doc.potential), inv);
    emit(cfg, decomposition_json(bd, inv) + "\n");
    return exit_decided;
}

int cmd_path_demo(const RunConfig& cfg) {
    const int n = cfg.path_n;
    if (n < 2) throw Error("--n must be at least 2");
    nlohmann::ordered_json doc;
    doc["N"] = n;
    const auto [plus, minus] = path_plus_minus(n);
    doc["P_plus"] = nlohmann::ordered_json::parse(qlinear_json(plus));
    doc["P_minus"] = nlohmann::ordered_json::parse(qlinear_json(minus));
    doc["spectrum"] = nlohmann::ordered_json::array();
    for (const auto& e : path_spectrum(n, cfg.precision_digits))
        doc["spectrum"].push_back(
            {{"k", e.k}, {"denominator", e.denominator}, {"value", e.value.to_string(cfg.precision_digits)}});
    doc["coprimality"] = n >= 4 ? nlohmann::ordered_json::parse(coprimality_json(path_coprimality_check(n)))
                                : nlohmann::ordered_json(nullptr);
    emit(cfg, doc.dump(2) + "\n");
    return exit_decided;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Pretty good state transfer: decide, certify and simulate on graphs with an involution"};
    app.add_option("--command", cfg.command, "certify | simulate | involutions | path-demo | decompose")
        ->required()
        ->check(CLI::IsMember({"certify", "simulate", "involutions", "path-demo", "decompose"}));
    app.add_option("--input", cfg.input_path, "graph JSON file");
    app.add_option("--out", cfg.output_path, "output file (default: standard output)");
    app.add_option("--u", cfg.u, "source vertex, 1-indexed");
    app.add_option("--v", cfg.v, "target vertex for simulate, 1-indexed (default: sigma(u))");
    app.add_option("--sigma", cfg.sigma, "\"auto\" or comma-separated 1-indexed images");
    app.add_option("--q-value", cfg.q_value, "rational value substituted for Q");
    app.add_option("--precision", cfg.precision_digits, "working precision in decimal digits")
        ->check(CLI::Range(30, 200));
    app.add_option("--height-bound", cfg.height_bound, "max-norm bound for integer relations")
        ->check(CLI::Range(1, 1000000));
    app.add_option("--epsilon", cfg.epsilon, "target is fidelity >= 1 - epsilon")->check(CLI::Range(1e-15, 0.999999));
    app.add_option("--t-max", cfg.t_max, "end of the simulated time window")->check(CLI::PositiveNumber);
    app.add_option("--dt", cfg.dt, "trace sampling step")->check(CLI::PositiveNumber);
    app.add_option("--n", cfg.path_n, "path length for path-demo");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    try {
        if (cfg.command == "certify") return cmd_certify(cfg);
        if (cfg.command == "simulate") return cmd_simulate(cfg);
        if (cfg.command == "involutions") return cmd_involutions(cfg);
        if (cfg.command == "decompose") return cmd_decompose(cfg);
        return cmd_path_demo(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
