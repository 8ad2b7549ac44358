#pragma once

#include "pgst/graph.hpp"
#include "pgst/involution.hpp"
#include "pgst/numeric.hpp"
#include "pgst/quadratic.hpp"
#include "pgst/spectral.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pgst {

/// Integer vector (ell, m) with sum(ell*lambda) + sum(m*mu) ~ 0 and
/// sum(ell) + sum(m) = 0. ell runs over plus eigenvalues, m over minus ones.
struct IntegerRelation {
    std::vector<Integer> ell;
    std::vector<Integer> m;
    Real residual;
    /// The vanishing of the sum was proved in exact arithmetic.
    bool exact = false;

    Integer ell_sum() const;
    Integer m_sum() const;
    bool m_sum_odd() const;
    /// ell followed by m.
    std::vector<Integer> coefficients() const;
};

/// Tr(H+) = sum over one side + sum over S + k and Tr(H-) = sum over one side - k,
/// checked exactly (symbolic parts included).
bool trace_check(const BlockDecomposition<Affine>& bd, const Potential& q, const InvolutionInfo& inv);

struct RelationSearch {
    std::vector<IntegerRelation> relations;
    /// Reduced vectors that satisfy both constraints but exceed the height bound.
    int dropped_over_height = 0;
    /// Reduced vectors whose residual is too small to reject and too large to accept.
    int ambiguous = 0;
    /// A relation is accepted when its residual is below this.
    Real accept_threshold;
};

/// LLL on the rows [e_i | round(C x_i) | C] with C = 10^(precision_digits - 10),
/// where x runs over lambdas then mus. Reduced rows with a zero sum column are
/// re-evaluated at the inputs' own precision, which must be at least
/// 2 * precision_digits; they are accepted when the residual is below
/// 10^(-precision_digits - 10) and the max-norm is at most height_bound.
/// Throws Error when height_bound^2 * dimension exceeds 10^(precision_digits/2)
/// or the inputs are not precise enough.
RelationSearch search_integer_relations(const std::vector<Real>& lambdas, const std::vector<Real>& mus,
                                        int height_bound, int precision_digits);

std::vector<IntegerRelation> find_integer_relations(const std::vector<Real>& lambdas, const std::vector<Real>& mus,
                                                    int height_bound, int precision_digits);

/// Exact relation lattice for values in quadratic fields: the integer kernel of
/// the rational parts, each sqrt(d) part and the coefficient sum.
std::vector<IntegerRelation> exact_integer_relations(const std::vector<QuadNumber>& lambdas,
                                                     const std::vector<QuadNumber>& mus);

/// (every basis vector has even sum(m), first basis vector with odd sum(m)).
std::pair<bool, std::optional<IntegerRelation>> parity_verdict(const std::vector<IntegerRelation>& basis);

/// For S empty, k = 0, n odd and no eigenvector vanishing at (u, v): the
/// relation with ell all 1 and m all -1, whose sum is Tr(H+) - Tr(H-) = 2k = 0.
std::optional<IntegerRelation> odd_obstruction(const InvolutionInfo& inv, const PairClassification& cls);

enum class Conclusion : std::uint8_t { PgstConsistent, NoPgst, NotCospectral, Inconclusive };
enum class CertificateKind : std::uint8_t { Exact, Heuristic };

const char* to_string(Conclusion c);
const char* to_string(CertificateKind k);

struct StructuralSummary {
    int s_size = 0;
    int fixed_edges = 0;
    /// Null unless the input potential is Q on the orbit of u and concrete elsewhere.
    std::optional<bool> q_linear_irreducible_plus;
    std::optional<bool> q_linear_irreducible_minus;
};

struct PGSTVerdict {
    int u = 0;
    int v = 0;
    bool strongly_cospectral = false;
    std::vector<IntegerRelation> relation_basis;
    bool parity_ok = true;
    std::optional<IntegerRelation> obstruction;
    CertificateKind certificate_kind = CertificateKind::Heuristic;
    int height_bound = 0;
    int precision_digits = 0;
    Conclusion conclusion = Conclusion::Inconclusive;
    StructuralSummary structural;
    bool trace_identities = false;
    std::vector<Real> lambdas;
    std::vector<Real> mus;
    int vanishing_count = 0;
    int dropped_over_height = 0;
    int ambiguous = 0;
};

struct CertifyOptions {
    int precision_digits = 60;
    int height_bound = 50;
    /// Value substituted for Q when the potential is symbolic.
    std::optional<Rational> q_value;
};

/// decompose, eigendecompose at twice the precision, classify (u, sigma u),
/// odd obstruction, relation lattice (exact when every eigenvalue lies in a
/// factor of degree <= 2, LLL otherwise) and the parity test.
/// Throws Error for an asymmetric potential, a vertex fixed by sigma, or a
/// symbolic potential without q_value.
PGSTVerdict certify(const Graph& g, const InvolutionInfo& inv, const Potential& q, int u,
                    const CertifyOptions& opts = {});

std::string relation_json(const IntegerRelation& r);
std::string verdict_json(const PGSTVerdict& v);

}  // namespace pgst
