#pragma once

#include "pgst/graph.hpp"
#include "pgst/numeric.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pgst {

enum class Side : std::uint8_t { Left, Right, Fixed };

/// A verified non-trivial involutive automorphism with its fixed structure.
///
/// The 2-orbits {x, sigma x} are listed by their smaller vertex. left[i] and
/// right[i] = sigma(left[i]) are the two halves of orbit i; by default the
/// smaller vertex goes left.
struct InvolutionInfo {
    std::vector<int> sigma;
    std::vector<int> fixed_vertices;  // S, ascending
    int fixed_edge_count = 0;         // k: edges {x, sigma x}
    int side_size = 0;                // n, with N = 2n + |S|
    std::vector<int> left;
    std::vector<int> right;
    std::vector<Side> side;

    bool moves(int v) const { return sigma[static_cast<std::size_t>(v)] != v; }
};

enum class InvolutionErrorKind { NotPermutation, NotInvolution, NotAutomorphism, Identity, TooLarge };

class InvolutionError : public Error {
  public:
    InvolutionError(InvolutionErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
    InvolutionErrorKind kind() const { return kind_; }

  private:
    InvolutionErrorKind kind_;
};

/// Checks that perm (0-indexed images) is a non-identity involutive automorphism.
InvolutionInfo verify_involution(const Graph& g, std::vector<int> perm);

/// Same involution with the two halves of the listed orbits exchanged.
InvolutionInfo flip_sides(const InvolutionInfo& inv, std::span<const int> orbits);

/// All non-identity involutive automorphisms, sigma arrays in lexicographic order.
/// Refuses graphs with more than `vertex_limit` vertices.
std::vector<InvolutionInfo> enumerate_involutions(const Graph& g, int vertex_limit = 10);

bool check_symmetric_potential(const Potential& q, const InvolutionInfo& inv);

/// The block matrices of H under the (left, right, S) labeling:
///   H = [[H', Asigma, AS], [Asigma, H', AS], [AS^T, AS^T, HS]]
///   H+ = [[H' + Asigma, AS], [2 AS^T, HS]],  H- = H' - Asigma.
template <class T>
struct BlockDecomposition {
    Matrix<T> h_prime;
    Matrix<T> a_sigma;
    Matrix<T> a_s;
    Matrix<T> h_s;
    Matrix<T> h_plus;
    Matrix<T> h_minus;
};

/// Throws Error if the potential on the diagonal is not sigma-symmetric.
BlockDecomposition<Affine> decompose(const Hamiltonian& h, const InvolutionInfo& inv);

/// Reassembles the full N x N matrix from the blocks (inverse of decompose).
Matrix<Affine> reassemble(const BlockDecomposition<Affine>& bd, const InvolutionInfo& inv);

/// H+ made symmetric by the similarity diag(I, sqrt 2 I): the AS blocks
/// become sqrt(2) AS. Requires concrete entries.
Matrix<Real> symmetrized_plus(const BlockDecomposition<Affine>& bd, int digits);

/// [a; b] -> [a; a; b] in original vertex order.
template <class T>
std::vector<T> lift_plus(const InvolutionInfo& inv, std::span<const T> vec) {
    const std::size_t n = inv.left.size();
    if (vec.size() != n + inv.fixed_vertices.size())
        throw Error("lift_plus: expected length " + std::to_string(n + inv.fixed_vertices.size()) + ", got " +
                    std::to_string(vec.size()));
    std::vector<T> out(inv.sigma.size(), T());
    for (std::size_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(inv.left[i])] = vec[i];
        out[static_cast<std::size_t>(inv.right[i])] = vec[i];
    }
    for (std::size_t s = 0; s < inv.fixed_vertices.size(); ++s)
        out[static_cast<std::size_t>(inv.fixed_vertices[s])] = vec[n + s];
    return out;
}

/// c -> [c; -c; 0] in original vertex order.
template <class T>
std::vector<T> lift_minus(const InvolutionInfo& inv, std::span<const T> vec) {
    const std::size_t n = inv.left.size();
    if (vec.size() != n)
        throw Error("lift_minus: expected length " + std::to_string(n) + ", got " + std::to_string(vec.size()));
    std::vector<T> out(inv.sigma.size(), T());
    for (std::size_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(inv.left[i])] = vec[i];
        out[static_cast<std::size_t>(inv.right[i])] = -vec[i];
    }
    return out;
}

}  // namespace pgst
