#pragma once

#include "pgst/affine.hpp"
#include "pgst/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pgst {

template <class C>
class Polynomial;

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
template <class C>
bool coeff_is_zero(const Polynomial<C>& c) {
    return c.is_zero();
}

/// Univariate polynomial, coefficients stored low degree first with no
/// trailing zeros (the zero polynomial has no coefficients).
template <class C>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(C c) { return Polynomial(std::vector<C>{std::move(c)}); }
    static Polynomial monomial(C c, int degree) {
        std::vector<C> v(static_cast<std::size_t>(degree) + 1, C());
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<C>& coeffs() const { return coeffs_; }
    C coeff(int k) const { return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : C(); }
    const C& leading() const { return coeffs_.back(); }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), C());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), C());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<C> v;
        v.reserve(a.coeffs_.size());
        for (const C& c : a.coeffs_) v.push_back(-c);
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, C());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const C& s, const Polynomial& a) {
        std::vector<C> v;
        v.reserve(a.coeffs_.size());
        for (const C& c : a.coeffs_) v.push_back(s * c);
        return Polynomial(std::move(v));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    void trim() {
        while (!coeffs_.empty() && coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

using RatPoly = Polynomial<Rational>;
/// Polynomial in x whose coefficients are polynomials in the indeterminate Q.
using BiPoly = Polynomial<RatPoly>;

inline RatPoly x_poly() { return RatPoly::monomial(Rational(1), 1); }
/// x - r.
inline RatPoly linear(const Rational& root) { return RatPoly(std::vector<Rational>{-root, Rational(1)}); }

Rational evaluate(const RatPoly& p, const Rational& x);
Real evaluate(const RatPoly& p, const Real& x);
/// Substitutes a value for Q in every coefficient.
RatPoly substitute(const BiPoly& p, const Rational& q);

RatPoly derivative(const RatPoly& p);
/// Scales to leading coefficient 1 (zero stays zero).
RatPoly monic(const RatPoly& p);
/// Euclidean division over the rationals; throws on division by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
bool divides(const RatPoly& d, const RatPoly& a);

/// Monic gcd by the Euclidean algorithm. Throws Error when both inputs are zero.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/// Human-readable form, e.g. "x^2 - 1/2*x + 3".
std::string to_string(const RatPoly& p);
/// Rational strings, ascending degree.
std::vector<std::string> to_strings(const RatPoly& p);
RatPoly poly_from_strings(const std::vector<std::string>& coeffs);

/// det(xI - m) by Faddeev-LeVerrier; exact. Throws Error if m is not square.
RatPoly char_poly(const Matrix<Rational>& m);
/// Characteristic polynomial of a matrix affine in Q, exact in both x and Q.
BiPoly char_poly_symbolic(const Matrix<Affine>& m);

/// p(x) - Q*q(x).
struct QLinearPoly {
    RatPoly p;
    RatPoly q;
    friend bool operator==(const QLinearPoly& a, const QLinearPoly& b) { return a.p == b.p && a.q == b.q; }
};

/// Splits det(xI - m) as p - Q*q, where Q sits on at most one diagonal entry
/// with coefficient 1. p is the char poly at Q = 0 and q the char poly of the
/// principal minor without the marked row and column (q = 0 when Q is absent).
QLinearPoly char_poly_q_linear(const Matrix<Affine>& m);

/// True iff gcd(p, q) = 1, i.e. p - Q*q is irreducible over Q(Q).
/// Throws Error when q is zero.
bool q_linear_irreducible(const QLinearPoly& f);

/// Matrix with Q replaced by a rational value.
Matrix<Rational> substitute(const Matrix<Affine>& m, const Rational& q);
bool is_concrete(const Matrix<Affine>& m);

}  // namespace pgst
