#include "pgst/graph.hpp"

#include <algorithm>

namespace pgst {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
    if (vertex_count < 1) throw Error("graph must have at least one vertex");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count)
        throw Error("graph has " + std::to_string(labels_.size()) + " labels for " + std::to_string(vertex_count) +
                    " vertices");
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw Error("edge endpoint out of range: {" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}");
        if (a == b) throw Error("self-loop at vertex " + std::to_string(a + 1));
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.assign(static_cast<std::size_t>(vertex_count) * vertex_count, 0);
    for (const auto& [a, b] : edges_) adjacency_[index(a, b)] = adjacency_[index(b, a)] = 1;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int w = 0; w < vertex_count_; ++w) d += has_edge(v, w) ? 1 : 0;
    return d;
}

bool Graph::is_connected() const {
    std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < vertex_count_; ++w)
            if (has_edge(v, w) && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == vertex_count_;
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

bool Potential::is_concrete() const {
    return std::all_of(values_.begin(), values_.end(), [](const Affine& a) { return a.is_concrete(); });
}

Potential Potential::substitute(const Rational& q) const {
    std::vector<Affine> out;
    out.reserve(values_.size());
    for (const Affine& a : values_) out.emplace_back(a.at(q));
    return Potential(std::move(out));
}

bool Hamiltonian::is_concrete() const {
    for (std::size_t i = 0; i < entries.rows(); ++i)
        for (std::size_t j = 0; j < entries.cols(); ++j)
            if (!entries(i, j).is_concrete()) return false;
    return true;
}

Matrix<Rational> Hamiltonian::concrete() const {
    if (!is_concrete()) throw Error("Hamiltonian still contains the symbol Q; substitute a value first");
    return entries.map([](const Affine& a) { return a.constant; });
}

Hamiltonian build_hamiltonian(const Graph& g, const Potential& q) {
    const int n = g.vertex_count();
    if (q.size() != n)
        throw Error("potential covers " + std::to_string(q.size()) + " vertices, graph has " + std::to_string(n));
    Matrix<Affine> h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (const auto& [a, b] : g.edges()) {
        h(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = Affine(1L);
        h(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = Affine(1L);
    }
    for (int v = 0; v < n; ++v) h(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) = q[v];
    return {std::move(h)};
}

bool check_symmetric_potential(const Potential& q, std::span<const int> sigma) {
    if (static_cast<int>(sigma.size()) != q.size()) return false;
    for (int v = 0; v < q.size(); ++v)
        if (q[v] != q[sigma[static_cast<std::size_t>(v)]]) return false;
    return true;
}

}  // namespace pgst
