#include "pgst/polynomial.hpp"

#include <optional>
#include <random>

namespace pgst {

namespace {

Rational divide_by(const Rational& c, long k) { return c / Rational(k); }
RatPoly divide_by(const RatPoly& c, long k) { return Rational(1, k) * c; }

template <class C>
C identity_coeff();
template <>
Rational identity_coeff<Rational>() {
    return Rational(1);
}
template <>
RatPoly identity_coeff<RatPoly>() {
    return RatPoly::constant(Rational(1));
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
template <class C>
Polynomial<C> faddeev_leverrier(const Matrix<C>& a) {
    if (!a.is_square()) throw Error("char_poly: matrix is not square");
    const std::size_t n = a.rows();
    std::vector<C> c(n + 1, C());
    c[n] = identity_coeff<C>();
    Matrix<C> m(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix<C> next(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                C s = C();
                for (std::size_t l = 0; l < n; ++l) {
                    if (coeff_is_zero(a(i, l)) || coeff_is_zero(m(l, j))) continue;
                    s = s + a(i, l) * m(l, j);
                }
                if (i == j) s = s + c[n - k + 1];
                next(i, j) = std::move(s);
            }
        m = std::move(next);
        C trace = C();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (coeff_is_zero(a(i, l)) || coeff_is_zero(m(l, i))) continue;
                trace = trace + a(i, l) * m(l, i);
            }
        c[n - k] = -divide_by(trace, static_cast<long>(k));
    }
    return Polynomial<C>(std::move(c));
}

RatPoly affine_as_poly(const Affine& a) { return RatPoly(std::vector<Rational>{a.constant, a.q_coeff}); }

Matrix<Rational> delete_row_col(const Matrix<Rational>& m, std::size_t k) {
    Matrix<Rational> out(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == k) continue;
        for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == k) continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

}  // namespace

Rational evaluate(const RatPoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

Real evaluate(const RatPoly& p, const Real& x) {
    const int digits = x.digits();
    Real acc(0L, digits);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + Real(*it, digits);
    return acc;
}

RatPoly substitute(const BiPoly& p, const Rational& q) {
    std::vector<Rational> v;
    v.reserve(p.coeffs().size());
    for (const RatPoly& c : p.coeffs()) v.push_back(evaluate(c, q));
    return RatPoly(std::move(v));
}

RatPoly derivative(const RatPoly& p) {
    std::vector<Rational> v;
    for (int k = 1; k <= p.degree(); ++k) v.push_back(Rational(k) * p.coeffs()[static_cast<std::size_t>(k)]);
    return RatPoly(std::move(v));
}

RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    const Rational inv = 1 / p.leading();
    return inv * p;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lead_inv = 1 / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Rational f = rem[static_cast<std::size_t>(k)] * lead_inv;
        quo[static_cast<std::size_t>(k - db)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

bool divides(const RatPoly& d, const RatPoly& a) { return divmod(a, d).second.is_zero(); }

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw Error("poly_gcd: both polynomials are zero");
    RatPoly x = monic(a);
    RatPoly y = monic(b);
    while (!y.is_zero()) {
        RatPoly r = monic(divmod(x, y).second);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::string to_string(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = mag == 1;
        if (k == 0 || !unit) {
            out += mag.get_den() == 1 ? mag.get_num().get_str() : mag.get_str();
            if (k > 0) out += "*";
        }
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

std::vector<std::string> to_strings(const RatPoly& p) {
    std::vector<std::string> out;
    for (const Rational& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

RatPoly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> v;
    for (const auto& s : coeffs) v.push_back(parse_rational(s));
    return RatPoly(std::move(v));
}

RatPoly char_poly(const Matrix<Rational>& m) { return faddeev_leverrier(m); }

BiPoly char_poly_symbolic(const Matrix<Affine>& m) { return faddeev_leverrier(m.map(affine_as_poly)); }

Matrix<Rational> substitute(const Matrix<Affine>& m, const Rational& q) {
    return m.map([&](const Affine& a) { return a.at(q); });
}

bool is_concrete(const Matrix<Affine>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_concrete()) return false;
    return true;
}

QLinearPoly char_poly_q_linear(const Matrix<Affine>& m) {
    if (!m.is_square()) throw Error("char_poly_q_linear: matrix is not square");
    std::optional<std::size_t> marked;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& b = m(i, j).q_coeff;
            if (b == 0) continue;
            if (i != j) throw Error("char_poly_q_linear: Q appears off the diagonal");
            if (b != 1) throw Error("char_poly_q_linear: Q appears with coefficient " + to_string(b) + ", expected 1");
            if (marked) throw Error("char_poly_q_linear: Q appears on more than one diagonal entry");
            marked = i;
        }

    const Matrix<Rational> base = substitute(m, Rational(0));
    QLinearPoly out{char_poly(base), RatPoly()};
    if (marked) out.q = char_poly(delete_row_col(base, *marked));

    // Independent check of p - Q*q against the substituted char poly.
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long> num(-97, 97);
    std::uniform_int_distribution<long> den(1, 31);
    for (int trial = 0; trial < 3; ++trial) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (char_poly(substitute(m, q)) != out.p - q * out.q)
            throw Error("char_poly_q_linear: p - Q*q identity failed at Q = " + to_string(q));
    }
    return out;
}

bool q_linear_irreducible(const QLinearPoly& f) {
    if (f.q.is_zero()) throw Error("q_linear_irreducible: Q does not appear (q = 0), the test is vacuous");
    return poly_gcd(f.p, f.q).degree() == 0;
}

}  // namespace pgst
