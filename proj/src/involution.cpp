#include "pgst/involution.hpp"

#include <algorithm>
#include <functional>

namespace pgst {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

InvolutionInfo describe(const Graph& g, std::vector<int> sigma) {
    InvolutionInfo inv;
    const int n = g.vertex_count();
    inv.side.assign(at(n), Side::Fixed);
    for (int v = 0; v < n; ++v) {
        const int w = sigma[at(v)];
        if (w == v) {
            inv.fixed_vertices.push_back(v);
        } else if (v < w) {
            inv.left.push_back(v);
            inv.right.push_back(w);
            inv.side[at(v)] = Side::Left;
            inv.side[at(w)] = Side::Right;
            if (g.has_edge(v, w)) ++inv.fixed_edge_count;
        }
    }
    inv.side_size = static_cast<int>(inv.left.size());
    inv.sigma = std::move(sigma);
    return inv;
}

bool is_automorphism(const Graph& g, const std::vector<int>& sigma) {
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return g.has_edge(sigma[at(e.first)], sigma[at(e.second)]); });
}

bool is_identity(const std::vector<int>& sigma) {
    for (std::size_t v = 0; v < sigma.size(); ++v)
        if (sigma[v] != static_cast<int>(v)) return false;
    return true;
}

}  // namespace

InvolutionInfo verify_involution(const Graph& g, std::vector<int> perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw InvolutionError(InvolutionErrorKind::NotPermutation,
                              "sigma has " + std::to_string(perm.size()) + " entries, graph has " + std::to_string(n));
    std::vector<char> hit(at(n), 0);
    for (int img : perm) {
        if (img < 0 || img >= n || hit[at(img)])
            throw InvolutionError(InvolutionErrorKind::NotPermutation, "sigma is not a bijection on the vertices");
        hit[at(img)] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (perm[at(perm[at(v)])] != v)
            throw InvolutionError(InvolutionErrorKind::NotInvolution,
                                  "sigma is not an involution: sigma(sigma(" + std::to_string(v + 1) + ")) != " +
                                      std::to_string(v + 1));
    for (const auto& [a, b] : g.edges())
        if (!g.has_edge(perm[at(a)], perm[at(b)]))
            throw InvolutionError(InvolutionErrorKind::NotAutomorphism,
                                  "sigma is not an automorphism: edge {" + std::to_string(a + 1) + "," +
                                      std::to_string(b + 1) + "} is not preserved");
    if (is_identity(perm)) throw InvolutionError(InvolutionErrorKind::Identity, "sigma is the identity");
    return describe(g, std::move(perm));
}

InvolutionInfo flip_sides(const InvolutionInfo& inv, std::span<const int> orbits) {
    InvolutionInfo out = inv;
    for (int i : orbits) {
        if (i < 0 || i >= out.side_size) throw Error("flip_sides: orbit index out of range");
        std::swap(out.left[at(i)], out.right[at(i)]);
        out.side[at(out.left[at(i)])] = Side::Left;
        out.side[at(out.right[at(i)])] = Side::Right;
    }
    return out;
}

std::vector<InvolutionInfo> enumerate_involutions(const Graph& g, int vertex_limit) {
    const int n = g.vertex_count();
    if (n > vertex_limit)
        throw InvolutionError(InvolutionErrorKind::TooLarge,
                              "graph has " + std::to_string(n) + " vertices; involution search is limited to " +
                                  std::to_string(vertex_limit) + ", pass sigma explicitly");

    // Every involution is a partial matching; choosing, for the smallest open
    // vertex, "fixed" before any partner visits sigma arrays in lexicographic order.
    std::vector<InvolutionInfo> out;
    std::vector<int> sigma(at(n), -1);
    std::function<void(int)> extend = [&](int v) {
        while (v < n && sigma[at(v)] != -1) ++v;
        if (v == n) {
            if (!is_identity(sigma) && is_automorphism(g, sigma)) out.push_back(describe(g, sigma));
            return;
        }
        sigma[at(v)] = v;
        extend(v + 1);
        for (int w = v + 1; w < n; ++w) {
            if (sigma[at(w)] != -1) continue;
            sigma[at(v)] = w;
            sigma[at(w)] = v;
            extend(v + 1);
            sigma[at(w)] = -1;
        }
        sigma[at(v)] = -1;
    };
    extend(0);
    return out;
}

bool check_symmetric_potential(const Potential& q, const InvolutionInfo& inv) {
    return check_symmetric_potential(q, std::span<const int>(inv.sigma));
}

BlockDecomposition<Affine> decompose(const Hamiltonian& h, const InvolutionInfo& inv) {
    const auto& m = h.entries;
    if (static_cast<std::size_t>(h.dimension()) != inv.sigma.size())
        throw Error("decompose: Hamiltonian and involution sizes differ");
    for (std::size_t v = 0; v < inv.sigma.size(); ++v) {
        const auto w = at(inv.sigma[v]);
        if (m(v, v) != m(w, w))
            throw Error("decompose: potential is not symmetric under sigma at vertex " + std::to_string(v + 1));
    }

    const std::size_t n = inv.left.size();
    const std::size_t s = inv.fixed_vertices.size();
    BlockDecomposition<Affine> bd{Matrix<Affine>(n, n), Matrix<Affine>(n, n), Matrix<Affine>(n, s),
                                  Matrix<Affine>(s, s), Matrix<Affine>(n + s, n + s), Matrix<Affine>(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            bd.h_prime(i, j) = m(at(inv.left[i]), at(inv.left[j]));
            bd.a_sigma(i, j) = m(at(inv.left[i]), at(inv.right[j]));
        }
        for (std::size_t t = 0; t < s; ++t) bd.a_s(i, t) = m(at(inv.left[i]), at(inv.fixed_vertices[t]));
    }
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) bd.h_s(a, b) = m(at(inv.fixed_vertices[a]), at(inv.fixed_vertices[b]));

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            bd.h_plus(i, j) = bd.h_prime(i, j) + bd.a_sigma(i, j);
            bd.h_minus(i, j) = bd.h_prime(i, j) - bd.a_sigma(i, j);
        }
        for (std::size_t t = 0; t < s; ++t) {
            bd.h_plus(i, n + t) = bd.a_s(i, t);
            bd.h_plus(n + t, i) = Rational(2) * bd.a_s(i, t);
        }
    }
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) bd.h_plus(n + a, n + b) = bd.h_s(a, b);
    return bd;
}

Matrix<Affine> reassemble(const BlockDecomposition<Affine>& bd, const InvolutionInfo& inv) {
    const std::size_t n = inv.left.size();
    const std::size_t s = inv.fixed_vertices.size();
    Matrix<Affine> m(inv.sigma.size(), inv.sigma.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(at(inv.left[i]), at(inv.left[j])) = bd.h_prime(i, j);
            m(at(inv.right[i]), at(inv.right[j])) = bd.h_prime(i, j);
            m(at(inv.left[i]), at(inv.right[j])) = bd.a_sigma(i, j);
            m(at(inv.right[i]), at(inv.left[j])) = bd.a_sigma(i, j);
        }
        for (std::size_t t = 0; t < s; ++t) {
            const auto f = at(inv.fixed_vertices[t]);
            m(at(inv.left[i]), f) = m(at(inv.right[i]), f) = bd.a_s(i, t);
            m(f, at(inv.left[i])) = m(f, at(inv.right[i])) = bd.a_s(i, t);
        }
    }
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) m(at(inv.fixed_vertices[a]), at(inv.fixed_vertices[b])) = bd.h_s(a, b);
    return m;
}

Matrix<Real> symmetrized_plus(const BlockDecomposition<Affine>& bd, int digits) {
    const std::size_t n = bd.h_prime.rows();
    const std::size_t dim = bd.h_plus.rows();
    const Real root2 = sqrt(Real(2L, digits));
    Matrix<Real> out(dim, dim, Real(0L, digits));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const Affine& e = bd.h_plus(i, j);
            if (!e.is_concrete()) throw Error("symmetrized_plus: H+ still contains the symbol Q");
            if (i < n && j >= n)
                out(i, j) = Real(e.constant, digits) * root2;
            else if (i >= n && j < n)
                out(i, j) = Real(e.constant, digits) * root2 / 2L;
            else
                out(i, j) = Real(e.constant, digits);
        }
    return out;
}

}  // namespace pgst
