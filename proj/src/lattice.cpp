#include "pgst/lattice.hpp"

#include <algorithm>
#include <optional>

namespace pgst {

namespace {

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Nearest integer to a/b for b > 0.
Integer round_div(const Integer& a, const Integer& b) {
    Integer num = 2 * a + b, den = 2 * b, q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Cohen's integral LLL with 1-based indices; b[0] is unused.
class IntegralLll {
  public:
    explicit IntegralLll(std::vector<IntVector> basis) : n_(basis.size()), b_(n_ + 1), d_(n_ + 1), lam_(n_ + 1) {
        for (std::size_t i = 0; i < n_; ++i) b_[i + 1] = std::move(basis[i]);
        for (auto& row : lam_) row.assign(n_ + 1, Integer(0));
    }

    std::vector<IntVector> run() {
        if (n_ == 0) return {};
        d_[0] = 1;
        d_[1] = dot(b_[1], b_[1]);
        if (d_[1] == 0) throw Error("lll_reduce: zero vector in basis");
        std::size_t k = 2, kmax = 1;
        while (k <= n_) {
            if (k > kmax) {
                kmax = k;
                gram_schmidt_row(k);
            }
            for (;;) {
                reduce(k, k - 1);
                const Integer& lam = lam_[k][k - 1];
                if (100 * d_[k] * d_[k - 2] < 99 * d_[k - 1] * d_[k - 1] - 100 * lam * lam) {
                    swap(k, kmax);
                    k = std::max<std::size_t>(2, k - 1);
                } else {
                    break;
                }
            }
            for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
            ++k;
        }
        return {b_.begin() + 1, b_.end()};
    }

  private:
    void gram_schmidt_row(std::size_t k) {
        for (std::size_t j = 1; j <= k; ++j) {
            Integer u = dot(b_[k], b_[j]);
            for (std::size_t i = 1; i < j; ++i) u = (d_[i] * u - lam_[k][i] * lam_[j][i]) / d_[i - 1];
            if (j < k) {
                lam_[k][j] = u;
            } else {
                if (u == 0) throw Error("lll_reduce: basis vectors are linearly dependent");
                d_[k] = u;
            }
        }
    }

    void reduce(std::size_t k, std::size_t l) {
        if (abs(2 * lam_[k][l]) <= d_[l]) return;
        const Integer q = round_div(lam_[k][l], d_[l]);
        for (std::size_t i = 0; i < b_[k].size(); ++i) b_[k][i] -= q * b_[l][i];
        lam_[k][l] -= q * d_[l];
        for (std::size_t i = 1; i < l; ++i) lam_[k][i] -= q * lam_[l][i];
    }

    void swap(std::size_t k, std::size_t kmax) {
        std::swap(b_[k], b_[k - 1]);
        for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
        const Integer lam = lam_[k][k - 1];
        const Integer big_b = (d_[k - 2] * d_[k] + lam * lam) / d_[k - 1];
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            const Integer t = lam_[i][k];
            lam_[i][k] = (d_[k] * lam_[i][k - 1] - lam * t) / d_[k - 1];
            lam_[i][k - 1] = (big_b * t + lam * lam_[i][k]) / d_[k];
        }
        d_[k - 1] = big_b;
    }

    std::size_t n_;
    std::vector<IntVector> b_;
    std::vector<Integer> d_;
    std::vector<std::vector<Integer>> lam_;
};

// Solves sum c_i basis_i = v over Q; nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_combination(const IntVector& v, const std::vector<IntVector>& basis) {
    const std::size_t k = basis.size(), dim = v.size();
    // Augmented system: dim equations, k unknowns.
    Matrix<Rational> m(dim, k + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = Rational(basis[j][i]);
        m(i, k) = Rational(v[i]);
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < dim; ++c) {
        std::size_t p = r;
        while (p < dim && m(p, c) == 0) ++p;
        if (p == dim) continue;
        for (std::size_t j = 0; j <= k; ++j) std::swap(m(r, j), m(p, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j <= k; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = 0; j <= k; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < dim; ++i)
        if (m(i, k) != 0) return std::nullopt;
    std::vector<Rational> c(k, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = m(i, k);
    return c;
}

}  // namespace

std::vector<IntVector> lll_reduce(std::vector<IntVector> basis) { return IntegralLll(std::move(basis)).run(); }

std::vector<IntVector> integer_kernel(const Matrix<Rational>& a) {
    const std::size_t rows = a.rows(), n = a.cols();
    // Clear denominators row by row.
    Matrix<Integer> m(rows, n, Integer(0));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer den(1);
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j).get_num() * (den / a(i, j).get_den());
    }
    // u tracks the unimodular column transform: m_original * u = m.
    Matrix<Integer> u(n, n, Integer(0));
    for (std::size_t j = 0; j < n; ++j) u(j, j) = 1;
    const auto combine = [&](std::size_t c1, std::size_t c2, const Integer& s, const Integer& t, const Integer& x,
                             const Integer& y) {
        // (col c1, col c2) <- (s*c1 + t*c2, x*c1 + y*c2), determinant +-1
        for (std::size_t i = 0; i < rows; ++i) {
            const Integer p = m(i, c1), q = m(i, c2);
            m(i, c1) = s * p + t * q;
            m(i, c2) = x * p + y * q;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Integer p = u(i, c1), q = u(i, c2);
            u(i, c1) = s * p + t * q;
            u(i, c2) = x * p + y * q;
        }
    };

    std::size_t pivot_col = 0;
    for (std::size_t i = 0; i < rows && pivot_col < n; ++i) {
        for (std::size_t j = pivot_col + 1; j < n; ++j) {
            if (m(i, j) == 0) continue;
            const Integer p = m(i, pivot_col), q = m(i, j);
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            // [s t; -q/g p/g] has determinant (s p + t q)/g = 1.
            combine(pivot_col, j, s, t, -q / g, p / g);
        }
        if (m(i, pivot_col) != 0) ++pivot_col;
    }
    std::vector<IntVector> kernel;
    for (std::size_t j = pivot_col; j < n; ++j) {
        IntVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = u(i, j);
        kernel.push_back(std::move(v));
    }
    return lll_reduce(std::move(kernel));
}

bool in_lattice(const IntVector& v, const std::vector<IntVector>& basis) {
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) return true;
    if (basis.empty()) return false;
    const auto c = solve_combination(v, basis);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool same_lattice(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
    return std::all_of(a.begin(), a.end(), [&](const IntVector& v) { return in_lattice(v, b); }) &&
           std::all_of(b.begin(), b.end(), [&](const IntVector& v) { return in_lattice(v, a); });
}

}  // namespace pgst
