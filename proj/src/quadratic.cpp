#include "pgst/quadratic.hpp"

namespace pgst {

namespace {

Integer common_field(const QuadNumber& x, const QuadNumber& y) {
    if (x.is_rational()) return y.d;
    if (y.is_rational()) return x.d;
    if (x.d != y.d) throw Error("quadratic arithmetic across different fields Q(sqrt " + x.d.get_str() +
                                ") and Q(sqrt " + y.d.get_str() + ")");
    return x.d;
}

}  // namespace

std::optional<SquarefreeSplit> squarefree_split(const Integer& n, unsigned long trial_limit) {
    if (n == 0) return SquarefreeSplit{Integer(0), Integer(0)};
    Integer m = abs(n);
    Integer cube_root;
    mpz_root(cube_root.get_mpz_t(), m.get_mpz_t(), 3);
    if (cube_root > trial_limit) return std::nullopt;

    Integer root(1), core(n < 0 ? -1 : 1);
    const unsigned long limit = cube_root.get_ui();
    for (unsigned long p = 2; p <= limit; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) root *= p;
        if (e % 2) core *= p;
    }
    // m now has at most two prime factors, each above the cube root.
    if (m > 1 && mpz_perfect_square_p(m.get_mpz_t())) {
        root *= sqrt(m);
    } else {
        core *= m;
    }
    return SquarefreeSplit{root, core};
}

QuadNumber::QuadNumber(Rational a_, Rational b_, Integer d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
    if (b == 0 || d == 1) {
        if (d == 1) a += b;
        b = 0;
        d = 1;
    }
}

int QuadNumber::sign() const {
    const int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (d < 0) throw Error("QuadNumber::sign: imaginary field");
    if (sa == 0 || sa == sb) return sb;
    const Rational lhs = a * a, rhs = b * b * d;
    if (lhs == rhs) return 0;  // impossible for square-free d > 1
    return lhs > rhs ? sa : sb;
}

Real QuadNumber::to_real(int digits) const {
    Real out(a, digits);
    if (b != 0) out += Real(b, digits) * sqrt(Real(Rational(d), digits));
    return out;
}

QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
    return QuadNumber(x.a + y.a, x.b + y.b, common_field(x, y));
}

QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) {
    return QuadNumber(x.a - y.a, x.b - y.b, common_field(x, y));
}

QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
    const Integer d = common_field(x, y);
    return QuadNumber(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
}

QuadNumber operator/(const QuadNumber& x, const QuadNumber& y) {
    if (y.is_zero()) throw Error("QuadNumber: division by zero");
    const Integer d = common_field(x, y);
    const Rational norm = y.a * y.a - y.b * y.b * d;
    const QuadNumber conj(y.a / norm, -y.b / norm, d);
    return x * conj;
}

QuadNumber operator-(const QuadNumber& x) { return QuadNumber(-x.a, -x.b, x.d); }

bool operator==(const QuadNumber& x, const QuadNumber& y) {
    if (x.is_rational() && y.is_rational()) return x.a == y.a;
    return x.a == y.a && x.b == y.b && x.d == y.d;
}

std::string to_string(const QuadNumber& x) {
    if (x.is_rational()) return to_string(x.a);
    return to_string(x.a) + (x.b < 0 ? "-" : "+") + to_string(Rational(abs(x.b))) + "*sqrt(" + x.d.get_str() + ")";
}

std::optional<std::vector<QuadNumber>> quadratic_roots(const RatPoly& f) {
    if (f.degree() == 1) return std::vector<QuadNumber>{QuadNumber(-f.coeff(0) / f.coeff(1))};
    if (f.degree() != 2) throw Error("quadratic_roots: degree must be 1 or 2");
    const Rational p = f.coeff(1) / f.coeff(2), q = f.coeff(0) / f.coeff(2);
    const Rational disc = p * p - 4 * q;
    if (disc < 0) return std::nullopt;
    // sqrt(N/D) = sqrt(N*D)/D
    const Integer nd = disc.get_num() * disc.get_den();
    const auto split = squarefree_split(nd);
    if (!split) return std::nullopt;
    Rational half_root(split->root, disc.get_den() * 2);
    half_root.canonicalize();
    const Rational centre = -p / 2;
    return std::vector<QuadNumber>{QuadNumber(centre, -half_root, split->core),
                                   QuadNumber(centre, half_root, split->core)};
}

std::vector<std::vector<QuadNumber>> null_space(Matrix<QuadNumber> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
        const QuadNumber inv = QuadNumber(1L) / m(r, c);
        for (std::size_t j = 0; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const QuadNumber f = m(i, c);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<QuadNumber>> basis;
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivot_cols) is_pivot[c] = 1;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<QuadNumber> v(cols, QuadNumber(0L));
        v[free] = QuadNumber(1L);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace pgst
