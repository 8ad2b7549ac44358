#pragma once

#include "pgst/numeric.hpp"

#include <string>
#include <string_view>

namespace pgst {

/// A value a + b*Q in the single symbolic indeterminate Q.
struct Affine {
    Rational constant;
    Rational q_coeff;

    Affine() = default;
    Affine(Rational c) : constant(std::move(c)) {}  // NOLINT: implicit on purpose
    Affine(long c) : constant(c) {}                  // NOLINT
    Affine(Rational c, Rational q) : constant(std::move(c)), q_coeff(std::move(q)) {}

    static Affine symbol() { return Affine(Rational(0), Rational(1)); }

    bool is_concrete() const { return q_coeff == 0; }
    bool is_zero() const { return constant == 0 && q_coeff == 0; }
    Rational at(const Rational& q) const { return constant + q_coeff * q; }

    friend Affine operator+(const Affine& a, const Affine& b) {
        return {a.constant + b.constant, a.q_coeff + b.q_coeff};
    }
    friend Affine operator-(const Affine& a, const Affine& b) {
        return {a.constant - b.constant, a.q_coeff - b.q_coeff};
    }
    friend Affine operator-(const Affine& a) { return {-a.constant, -a.q_coeff}; }
    friend Affine operator*(const Rational& s, const Affine& a) { return {s * a.constant, s * a.q_coeff}; }
    friend bool operator==(const Affine& a, const Affine& b) {
        return a.constant == b.constant && a.q_coeff == b.q_coeff;
    }
    friend bool operator!=(const Affine& a, const Affine& b) { return !(a == b); }
};

/// Accepts "p/q", "p", "Q", "-Q" and "aff:a/b+c/d*Q".
Affine parse_affine(std::string_view text);

/// "p/q" for concrete values, "aff:a/b+c/d*Q" otherwise.
std::string to_string(const Affine& a);

}  // namespace pgst
