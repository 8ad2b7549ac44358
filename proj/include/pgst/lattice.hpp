#pragma once

#include "pgst/numeric.hpp"

#include <vector>

namespace pgst {

using IntVector = std::vector<Integer>;

/// LLL reduction (integral variant, exact Gram-Schmidt data) of linearly
/// independent row vectors with delta = 99/100. Throws Error on dependence.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis);

/// Basis of {m in Z^n : a m = 0} for a rational r x n matrix, computed by
/// unimodular column reduction and then LLL-reduced. Rows of the result.
std::vector<IntVector> integer_kernel(const Matrix<Rational>& a);

/// True iff v is an integer combination of the (independent) basis rows.
bool in_lattice(const IntVector& v, const std::vector<IntVector>& basis);

/// True iff both row sets generate the same lattice.
bool same_lattice(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

}  // namespace pgst
