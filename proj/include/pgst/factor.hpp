#pragma once

#include "pgst/polynomial.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace pgst {

/// a = unit * prod(factor^multiplicity), factors monic and irreducible over Q,
/// sorted by (degree, coefficients).
struct Factorization {
    Rational unit;
    std::vector<std::pair<RatPoly, int>> factors;
};

/// Complete factorization over the rationals: square-free decomposition,
/// factoring modulo a good prime, Hensel lifting, and subset recombination.
/// Throws Error for the zero polynomial or degree above `degree_limit`.
Factorization factor_over_rationals(const RatPoly& a, int degree_limit = 32);

/// Yun's algorithm: monic square-free parts with their multiplicities.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& a);

/// Multiplies a factorization back out.
RatPoly expand(const Factorization& f);

/// True iff f (with p-integral coefficients and a unit leading coefficient
/// mod p) stays irreducible modulo p, which certifies irreducibility over Q.
bool irreducible_mod_prime(const RatPoly& f, std::uint32_t p);

}  // namespace pgst
