#include "pgst/spectral.hpp"

#include "pgst/factor.hpp"
#include "pgst/polynomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>

namespace pgst {

namespace {

constexpr int guard_digits = 12;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void apply_sign_convention(std::vector<Real>& x, const Real& threshold) {
    for (const Real& c : x) {
        if (abs(c) > threshold) {
            if (c.sign() < 0)
                for (Real& y : x) y = -y;
            return;
        }
    }
}

Real norm2(const std::vector<Real>& x, int digits) {
    Real s(0L, digits);
    for (const Real& c : x) s += c * c;
    return sqrt(s);
}

Real residual(const Matrix<Real>& m, const Real& lambda, const std::vector<Real>& x, int digits) {
    Real s(0L, digits);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Real r = -(lambda * x[i]);
        for (std::size_t j = 0; j < m.cols(); ++j) r += m(i, j) * x[j];
        s += r * r;
    }
    return sqrt(s);
}

PairClass numeric_class(const Real& xu, const Real& xv, const Real& thr) {
    const bool u_zero = abs(xu) < thr, v_zero = abs(xv) < thr;
    if (u_zero && v_zero) return PairClass::Vanishing;
    if (abs(xu - xv) < thr) return PairClass::Plus;
    if (abs(xu + xv) < thr) return PairClass::Minus;
    return PairClass::Failure;
}

// Rotates the eigenspace spanned by `idx` so that only the first vector is
// nonzero at u; the others are an orthonormal basis of the complement.
void rotate_cluster(SpectralData& s, const std::vector<int>& idx, int u, const Real& thr) {
    const std::size_t m = idx.size();
    if (m < 2) return;
    const int digits = s.precision_digits + guard_digits;
    std::vector<Real> a;
    for (int i : idx) a.push_back(s.eigenvectors[at(i)][at(u)].with_digits(digits));
    const Real norm_a = norm2(a, digits);
    if (norm_a < thr) return;

    // Orthonormal basis of R^m whose first member is a/|a|.
    std::vector<std::vector<Real>> w;
    std::vector<Real> first;
    for (const Real& c : a) first.push_back(c / norm_a);
    w.push_back(first);
    std::size_t skip = 0;
    for (std::size_t k = 1; k < m; ++k)
        if (abs(a[k]) > abs(a[skip])) skip = k;
    for (std::size_t e = 0; e < m && w.size() < m; ++e) {
        if (e == skip) continue;
        std::vector<Real> y(m, Real(0L, digits));
        y[e] = Real(1L, digits);
        for (const auto& b : w) {
            Real proj(0L, digits);
            for (std::size_t k = 0; k < m; ++k) proj += b[k] * y[k];
            for (std::size_t k = 0; k < m; ++k) y[k] -= proj * b[k];
        }
        const Real n = norm2(y, digits);
        for (Real& c : y) c /= n;
        w.push_back(std::move(y));
    }

    const std::size_t dim = s.eigenvectors[at(idx[0])].size();
    std::vector<std::vector<Real>> rotated;
    for (const auto& coeffs : w) {
        std::vector<Real> x(dim, Real(0L, digits));
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t r = 0; r < dim; ++r) x[r] += coeffs[k] * s.eigenvectors[at(idx[k])][r];
        for (Real& c : x) c = c.with_digits(s.precision_digits);
        rotated.push_back(std::move(x));
    }
    // Only the first vector should be nonzero at u; make that component positive.
    if (rotated[0][at(u)].sign() < 0)
        for (Real& c : rotated[0]) c = -c;
    for (std::size_t k = 1; k < m; ++k) apply_sign_convention(rotated[k], thr);
    for (std::size_t k = 0; k < m; ++k) s.eigenvectors[at(idx[k])] = std::move(rotated[k]);
}

// Solves g c = r for invertible g over Q(sqrt d).
std::vector<QuadNumber> solve(const Matrix<QuadNumber>& g, const std::vector<QuadNumber>& r) {
    const std::size_t k = g.rows();
    Matrix<QuadNumber> aug(k, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = g(i, j);
        aug(i, k) = -r[i];
    }
    const auto ns = null_space(aug);
    if (ns.size() != 1 || ns[0][k].is_zero()) throw Error("exact eigenspace: singular Gram matrix");
    std::vector<QuadNumber> c;
    for (std::size_t i = 0; i < k; ++i) c.push_back(ns[0][i] / ns[0][k]);
    return c;
}

}  // namespace

const char* to_string(PairClass c) {
    switch (c) {
        case PairClass::Plus: return "plus";
        case PairClass::Minus: return "minus";
        case PairClass::Vanishing: return "vanishing";
        case PairClass::Failure: return "failure";
    }
    return "?";
}

SpectralData eigendecompose(const Matrix<Real>& input, int digits) {
    if (!input.is_square()) throw Error("eigendecompose: matrix is not square");
    const std::size_t n = input.rows();
    const int work = digits + guard_digits;
    Matrix<Real> a = input.map([&](const Real& x) { return x.with_digits(work); });
    const Real sym_tol = pow10(-digits, work);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (abs(a(i, j) - a(j, i)) > sym_tol) throw Error("eigendecompose: matrix is not symmetric");

    Matrix<Real> v(n, n, Real(0L, work));
    for (std::size_t i = 0; i < n; ++i) v(i, i) = Real(1L, work);

    Real scale(0L, work);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale += a(i, j) * a(i, j);
    const Real stop = pow10(-2 * (work - 2), work) * max(scale, Real(1L, work));

    for (int sweep = 0; sweep < 100; ++sweep) {
        Real off(0L, work);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off <= stop) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q).is_zero()) continue;
                const Real apq = a(p, q);
                const Real theta = (a(q, q) - a(p, p)) / (apq * 2L);
                Real t = Real(1L, work) / (abs(theta) + sqrt(theta * theta + Real(1L, work)));
                if (theta.sign() < 0) t = -t;
                const Real c = Real(1L, work) / sqrt(t * t + Real(1L, work));
                const Real s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Real akp = a(k, p), akq = a(k, q);
                    a(k, p) = a(p, k) = c * akp - s * akq;
                    a(k, q) = a(q, k) = s * akp + c * akq;
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = Real(0L, work);
                for (std::size_t k = 0; k < n; ++k) {
                    const Real vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

    SpectralData out;
    out.precision_digits = digits;
    const Real thr = pow10(-digits / 2, digits);
    const Matrix<Real> original = input.map([&](const Real& x) { return x.with_digits(work); });
    Real worst(0L, work);
    for (std::size_t idx : order) {
        std::vector<Real> x(n);
        for (std::size_t r = 0; r < n; ++r) x[r] = v(r, idx);
        apply_sign_convention(x, thr);
        worst = max(worst, residual(original, a(idx, idx), x, work));
        out.eigenvalues.push_back(a(idx, idx).with_digits(digits));
        for (Real& c : x) c = c.with_digits(digits);
        out.eigenvectors.push_back(std::move(x));
    }
    out.residual_bound = worst.with_digits(digits);
    return out;
}

SpectralData eigendecompose(const Hamiltonian& h, int digits) {
    if (digits < 30 || digits > 200) throw Error("eigendecompose: precision must be in [30, 200] digits");
    if (!h.is_concrete()) throw Error("eigendecompose: Hamiltonian still contains Q; substitute a value first");
    const Matrix<Rational> m = h.concrete();
    return eigendecompose(m.map([&](const Rational& x) { return Real(x, digits + guard_digits); }), digits);
}

std::vector<std::vector<int>> eigenvalue_clusters(const SpectralData& s, std::optional<Real> tolerance) {
    const Real tol = tolerance ? *tolerance : pow10(-s.precision_digits / 2, s.precision_digits);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < s.dimension(); ++i) {
        if (!out.empty() && abs(s.eigenvalues[at(i)] - s.eigenvalues[at(out.back().back())]) < tol)
            out.back().push_back(i);
        else
            out.push_back({i});
    }
    return out;
}

PairClass exact_eigenspace_class(const Matrix<Rational>& h, const QuadNumber& lambda, int u, int v) {
    const std::size_t n = h.rows();
    Matrix<QuadNumber> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = QuadNumber(h(i, j)) - (i == j ? lambda : QuadNumber(0L));
    const auto basis = null_space(m);
    if (basis.empty()) throw Error("exact_eigenspace_class: " + to_string(lambda) + " is not an eigenvalue");
    const std::size_t k = basis.size();
    Matrix<QuadNumber> g(k, k);
    std::vector<QuadNumber> r;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            QuadNumber s(0L);
            for (std::size_t t = 0; t < n; ++t) s = s + basis[i][t] * basis[j][t];
            g(i, j) = s;
        }
        r.push_back(basis[i][at(u)]);
    }
    const auto c = solve(g, r);
    QuadNumber puu(0L), pvu(0L);
    for (std::size_t i = 0; i < k; ++i) {
        puu = puu + basis[i][at(u)] * c[i];
        pvu = pvu + basis[i][at(v)] * c[i];
    }
    if (puu.is_zero()) {
        // P e_u = 0; strong cospectrality then needs P e_v = 0 as well.
        std::vector<QuadNumber> rv;
        for (std::size_t i = 0; i < k; ++i) rv.push_back(basis[i][at(v)]);
        const auto cv = solve(g, rv);
        QuadNumber pvv(0L);
        for (std::size_t i = 0; i < k; ++i) pvv = pvv + basis[i][at(v)] * cv[i];
        return pvv.is_zero() ? PairClass::Vanishing : PairClass::Failure;
    }
    if (pvu == puu) return PairClass::Plus;
    if (pvu == -puu) return PairClass::Minus;
    return PairClass::Failure;
}

PairClassification classify_pair(const SpectralData& s, int u, int v, std::optional<Real> zero_threshold,
                                 const Matrix<Rational>* exact) {
    const int n = s.dimension();
    if (u < 0 || u >= n || v < 0 || v >= n) throw Error("classify_pair: vertex out of range");
    if (u == v) throw Error("classify_pair: u and v must differ");
    const Real thr = zero_threshold ? *zero_threshold : pow10(-s.precision_digits / 2, s.precision_digits);

    PairClassification out;
    out.u = u;
    out.v = v;
    out.rotated = s;
    const auto clusters = eigenvalue_clusters(s);
    for (const auto& c : clusters) rotate_cluster(out.rotated, c, u, thr);

    out.classes.resize(at(n));
    for (int i = 0; i < n; ++i) {
        const auto& x = out.rotated.eigenvectors[at(i)];
        out.classes[at(i)] = numeric_class(x[at(u)], x[at(v)], thr);
    }

    if (exact != nullptr && static_cast<int>(exact->rows()) == n && n <= 32) {
        std::vector<QuadNumber> roots;
        for (const auto& [f, mult] : factor_over_rationals(char_poly(*exact)).factors) {
            if (f.degree() > 2) continue;
            if (const auto r = quadratic_roots(f)) roots.insert(roots.end(), r->begin(), r->end());
        }
        const Real match = pow10(-s.precision_digits / 2, s.precision_digits);
        for (const auto& c : clusters) {
            const Real& lambda = s.eigenvalues[at(c.front())];
            const auto root = std::find_if(roots.begin(), roots.end(), [&](const QuadNumber& q) {
                return abs(q.to_real(s.precision_digits) - lambda) < match;
            });
            if (root == roots.end()) continue;
            const PairClass cls = exact_eigenspace_class(*exact, *root, u, v);
            for (std::size_t k = 0; k < c.size(); ++k) {
                const int i = c[k];
                PairClass want = cls;
                if (k > 0 && cls != PairClass::Failure) want = PairClass::Vanishing;
                if (k > 0 && cls == PairClass::Failure) want = out.classes[at(i)];
                if (want != out.classes[at(i)]) out.exact_overrides.push_back(i);
                out.classes[at(i)] = want;
                out.exact_indices.push_back(i);
            }
        }
        std::sort(out.exact_indices.begin(), out.exact_indices.end());
    }

    for (int i = 0; i < n; ++i) {
        switch (out.classes[at(i)]) {
            case PairClass::Plus: out.plus_indices.push_back(i); break;
            case PairClass::Minus: out.minus_indices.push_back(i); break;
            case PairClass::Vanishing: out.vanishing_indices.push_back(i); break;
            case PairClass::Failure: out.cospectral_failures.push_back(i); break;
        }
    }
    return out;
}

bool strong_cospectral(const SpectralData& s, int u, int v) { return classify_pair(s, u, v).strongly_cospectral(); }

std::vector<Real> lift_plus_eigenvector(const InvolutionInfo& inv, const std::vector<Real>& y) {
    if (y.empty()) throw Error("lift_plus_eigenvector: empty vector");
    const int digits = y.front().digits();
    const Real root2 = sqrt(Real(2L, digits));
    std::vector<Real> scaled = y;
    for (std::size_t i = inv.left.size(); i < scaled.size(); ++i) scaled[i] *= root2;
    std::vector<Real> out = lift_plus<Real>(inv, scaled);
    for (Real& c : out) c /= root2;
    return out;
}

std::vector<Real> lift_minus_eigenvector(const InvolutionInfo& inv, const std::vector<Real>& c) {
    if (c.empty()) throw Error("lift_minus_eigenvector: empty vector");
    const Real root2 = sqrt(Real(2L, c.front().digits()));
    std::vector<Real> out = lift_minus<Real>(inv, c);
    for (Real& x : out) x /= root2;
    return out;
}

std::string spectral_json(const SpectralData& s) {
    nlohmann::ordered_json doc;
    doc["precision_digits"] = s.precision_digits;
    doc["residual_bound"] = s.residual_bound.to_string(6);
    doc["eigenvalues"] = nlohmann::ordered_json::array();
    for (const Real& l : s.eigenvalues) doc["eigenvalues"].push_back(l.to_string());
    doc["eigenvectors"] = nlohmann::ordered_json::array();
    for (const auto& x : s.eigenvectors) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const Real& c : x) row.push_back(c.to_string());
        doc["eigenvectors"].push_back(row);
    }
    return doc.dump();
}

}  // namespace pgst
