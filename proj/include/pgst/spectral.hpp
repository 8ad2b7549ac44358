#pragma once

#include "pgst/graph.hpp"
#include "pgst/involution.hpp"
#include "pgst/numeric.hpp"
#include "pgst/quadratic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pgst {

/// Orthonormal eigendecomposition of a real symmetric matrix.
struct SpectralData {
    std::vector<Real> eigenvalues;                // ascending
    std::vector<std::vector<Real>> eigenvectors;  // eigenvectors[i] belongs to eigenvalues[i]
    int precision_digits = 0;
    Real residual_bound;  // max_i ||H x_i - lambda_i x_i||_2

    int dimension() const { return static_cast<int>(eigenvalues.size()); }
};

/// Cyclic Jacobi in extended precision. Eigenvalues ascending; each vector's
/// first entry above 10^(-digits/2) in magnitude is made positive.
/// Throws Error if the matrix is not square or not symmetric.
SpectralData eigendecompose(const Matrix<Real>& m, int digits);

/// Requires concrete entries and digits in [30, 200].
SpectralData eigendecompose(const Hamiltonian& h, int digits);

/// Groups of indices whose eigenvalues agree to within `tolerance`
/// (default 10^(-digits/2)).
std::vector<std::vector<int>> eigenvalue_clusters(const SpectralData& s, std::optional<Real> tolerance = {});

enum class PairClass : std::uint8_t { Plus, Minus, Vanishing, Failure };

const char* to_string(PairClass c);

struct PairClassification {
    int u = 0;
    int v = 0;
    std::vector<int> plus_indices;
    std::vector<int> minus_indices;
    std::vector<int> vanishing_indices;
    std::vector<int> cospectral_failures;
    std::vector<PairClass> classes;  // per eigenpair index
    /// The decomposition after rotating each degenerate eigenspace so at most
    /// one basis vector is nonzero at u.
    SpectralData rotated;
    /// Eigenpair indices whose class was decided exactly over Q(sqrt d).
    std::vector<int> exact_indices;
    /// Indices where the exact decision overrode the numeric one.
    std::vector<int> exact_overrides;

    bool strongly_cospectral() const { return cospectral_failures.empty(); }
};

/// Classifies eigenpairs relative to (u, v) using `zero_threshold`
/// (default 10^(-digits/2)). When `exact` is given (the same matrix over Q),
/// eigenvalues that are roots of exact factors of degree <= 2 are classified
/// exactly from the eigenspace projector, which overrides the numeric call.
PairClassification classify_pair(const SpectralData& s, int u, int v, std::optional<Real> zero_threshold = {},
                                 const Matrix<Rational>* exact = nullptr);

bool strong_cospectral(const SpectralData& s, int u, int v);

/// Exact class of the eigenspace of `lambda` at (u, v): from P e_u where P is
/// the orthogonal projector onto ker(H - lambda I) over Q(sqrt d).
PairClass exact_eigenspace_class(const Matrix<Rational>& h, const QuadNumber& lambda, int u, int v);

/// Unit eigenvector of H from a unit eigenvector y of symmetrized_plus:
/// [y_a; y_a; sqrt(2) y_b] / sqrt(2).
std::vector<Real> lift_plus_eigenvector(const InvolutionInfo& inv, const std::vector<Real>& y);
/// Unit eigenvector of H from a unit eigenvector c of H-: [c; -c; 0] / sqrt(2).
std::vector<Real> lift_minus_eigenvector(const InvolutionInfo& inv, const std::vector<Real>& c);

/// {"precision_digits":..,"residual_bound":"..","eigenvalues":[..],"eigenvectors":[[..],..]}.
std::string spectral_json(const SpectralData& s);

}  // namespace pgst
