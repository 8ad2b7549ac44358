#pragma once

#include "pgst/affine.hpp"
#include "pgst/numeric.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pgst {

/// Unordered vertex pair, 0-indexed, stored with first < second.
using Edge = std::pair<int, int>;

/// Undirected simple graph. Vertices are 0-indexed here; all text I/O is
/// 1-indexed and converts at the boundary.
class Graph {
  public:
    /// Validates and normalizes: endpoints ordered, duplicates dropped, edges
    /// sorted. Throws Error on self-loops or endpoints out of range.
    Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_edge(int a, int b) const { return adjacency_[index(a, b)] != 0; }
    int degree(int v) const;
    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

  private:
    std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * vertex_count_ + b; }

    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<char> adjacency_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);

/// Vertex potential; each value is a rational or affine in the indeterminate Q.
class Potential {
  public:
    Potential() = default;
    explicit Potential(std::vector<Affine> values) : values_(std::move(values)) {}
    static Potential zero(int n) { return Potential(std::vector<Affine>(static_cast<std::size_t>(n))); }

    int size() const { return static_cast<int>(values_.size()); }
    const Affine& operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }
    const std::vector<Affine>& values() const { return values_; }
    bool is_concrete() const;
    Potential substitute(const Rational& q) const;

    friend bool operator==(const Potential& a, const Potential& b) { return a.values_ == b.values_; }

  private:
    std::vector<Affine> values_;
};

/// H = A + diag(potential).
struct Hamiltonian {
    Matrix<Affine> entries;

    int dimension() const { return static_cast<int>(entries.rows()); }
    bool is_concrete() const;
    /// Exact rational matrix; throws Error if Q is still free.
    Matrix<Rational> concrete() const;
};

/// Throws Error if the potential does not cover every vertex.
Hamiltonian build_hamiltonian(const Graph& g, const Potential& q);

/// True iff q(x) == q(sigma x) for every vertex, comparing symbolic parts too.
bool check_symmetric_potential(const Potential& q, std::span<const int> sigma);

/// Graph JSON document: the graph plus any optional run inputs it carries.
struct GraphDocument {
    Graph graph;
    Potential potential;
    std::optional<std::vector<int>> sigma;  // 0-indexed images
    bool sigma_auto = false;
    std::optional<int> u;  // 0-indexed
    std::optional<Rational> q_value;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

/// Parses {"n": .., "edges": [[i,j],..], "potential": {"v": "p/q"}, ...}.
/// Optional keys: "labels", "sigma" (array or "auto"), "u", "q_value".
/// Throws ParseError naming the offending field.
GraphDocument parse_graph(const std::string& text);

/// Normalized JSON form of a graph and potential (1-indexed).
std::string serialize_graph(const Graph& g, const Potential& q);

}  // namespace pgst
