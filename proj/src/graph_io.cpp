#include "pgst/graph.hpp"

#include <json.hpp>

namespace pgst {

namespace {

using nlohmann::json;

int as_int(const json& v, const std::string& field) {
    if (!v.is_number_integer()) throw ParseError(field + ": expected an integer");
    return v.get<int>();
}

Affine as_affine(const json& v, const std::string& field) {
    try {
        if (v.is_number_integer()) return Affine(Rational(v.get<long>()));
        if (v.is_string()) return parse_affine(v.get<std::string>());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(field + ": " + e.what());
    }
    throw ParseError(field + ": expected a rational string such as \"1/3\"");
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("document: not valid JSON (") + e.what() + ")");
    }
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    if (!doc.contains("n")) throw ParseError("n: missing");
    const int n = as_int(doc["n"], "n");
    if (n < 1) throw ParseError("n: must be at least 1");

    if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("edges: missing or not an array");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const json& e = doc["edges"][i];
        const std::string field = "edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2) throw ParseError(field + ": expected a pair [i, j]");
        const int a = as_int(e[0], field);
        const int b = as_int(e[1], field);
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError(field + ": endpoint out of range 1.." + std::to_string(n));
        if (a == b) throw ParseError(field + ": self-loop at vertex " + std::to_string(a));
        edges.emplace_back(a - 1, b - 1);
    }

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array() || doc["labels"].size() != static_cast<std::size_t>(n))
            throw ParseError("labels: expected an array of " + std::to_string(n) + " strings");
        for (const json& l : doc["labels"]) {
            if (!l.is_string()) throw ParseError("labels: expected strings");
            labels.push_back(l.get<std::string>());
        }
    }

    std::vector<Affine> values(static_cast<std::size_t>(n));
    if (doc.contains("potential")) {
        const json& pot = doc["potential"];
        if (!pot.is_object()) throw ParseError("potential: expected an object keyed by vertex");
        for (const auto& [key, value] : pot.items()) {
            const std::string field = "potential[" + key + "]";
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::logic_error&) {
                throw ParseError(field + ": vertex key is not an integer");
            }
            if (v < 1 || v > n) throw ParseError(field + ": vertex out of range 1.." + std::to_string(n));
            values[static_cast<std::size_t>(v - 1)] = as_affine(value, field);
        }
    }

    GraphDocument out{Graph(n, std::move(edges), std::move(labels)), Potential(std::move(values)), {}, false, {}, {}};

    if (doc.contains("sigma")) {
        const json& s = doc["sigma"];
        if (s.is_string() && s.get<std::string>() == "auto") {
            out.sigma_auto = true;
        } else if (s.is_array() && s.size() == static_cast<std::size_t>(n)) {
            std::vector<int> sigma;
            for (std::size_t i = 0; i < s.size(); ++i) {
                const int img = as_int(s[i], "sigma[" + std::to_string(i) + "]");
                if (img < 1 || img > n) throw ParseError("sigma[" + std::to_string(i) + "]: image out of range");
                sigma.push_back(img - 1);
            }
            out.sigma = std::move(sigma);
        } else {
            throw ParseError("sigma: expected \"auto\" or an array of " + std::to_string(n) + " vertex images");
        }
    }
    if (doc.contains("u")) {
        const int u = as_int(doc["u"], "u");
        if (u < 1 || u > n) throw ParseError("u: vertex out of range");
        out.u = u - 1;
    }
    if (doc.contains("q_value")) {
        const Affine q = as_affine(doc["q_value"], "q_value");
        if (!q.is_concrete()) throw ParseError("q_value: must be a rational");
        out.q_value = q.constant;
    }
    return out;
}

std::string serialize_graph(const Graph& g, const Potential& q) {
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges()) doc["edges"].push_back({a + 1, b + 1});
    if (!g.labels().empty()) doc["labels"] = g.labels();
    nlohmann::ordered_json pot = nlohmann::ordered_json::object();
    for (int v = 0; v < q.size(); ++v)
        if (!q[v].is_zero()) pot[std::to_string(v + 1)] = to_string(q[v]);
    if (!pot.empty()) doc["potential"] = pot;
    return doc.dump();
}

}  // namespace pgst
