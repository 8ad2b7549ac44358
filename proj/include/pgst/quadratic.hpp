#pragma once

#include "pgst/polynomial.hpp"

#include <optional>
#include <vector>

namespace pgst {

/// n = root^2 * core with core square-free (sign carried by core).
struct SquarefreeSplit {
    Integer root;
    Integer core;
};

/// Trial division up to the cube root of |n| plus a perfect-square test.
/// Returns nullopt when the cube root exceeds `trial_limit`.
std::optional<SquarefreeSplit> squarefree_split(const Integer& n, unsigned long trial_limit = 2'000'000);

/// a + b*sqrt(d) with d square-free; d = 1 (and b = 0) for rationals.
struct QuadNumber {
    Rational a;
    Rational b;
    Integer d{1};

    QuadNumber() = default;
    QuadNumber(Rational a_) : a(std::move(a_)) {}
    QuadNumber(long a_) : a(a_) {}
    QuadNumber(Rational a_, Rational b_, Integer d_);

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    /// Exact sign; requires d > 0.
    int sign() const;
    Real to_real(int digits) const;

    friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator/(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator-(const QuadNumber& x);
    friend bool operator==(const QuadNumber& x, const QuadNumber& y);
};

std::string to_string(const QuadNumber& x);

/// Real roots of a degree 1 or 2 rational polynomial in ascending order, with
/// square-free radicands. nullopt when a radicand cannot be split or the
/// roots are not real; throws Error for other degrees.
std::optional<std::vector<QuadNumber>> quadratic_roots(const RatPoly& f);

/// Basis of the right null space of m over Q(sqrt d) (reduced echelon form).
std::vector<std::vector<QuadNumber>> null_space(Matrix<QuadNumber> m);

}  // namespace pgst
