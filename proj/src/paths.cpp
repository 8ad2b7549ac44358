#include "pgst/paths.hpp"

#include "pgst/factor.hpp"

#include <json.hpp>

namespace pgst {

PathFamily::PathFamily(int n_max) {
    if (n_max < 0) throw Error("PathFamily: n_max must be non-negative");
    polys_.reserve(static_cast<std::size_t>(n_max) + 2);
    polys_.emplace_back();
    polys_.push_back(RatPoly::constant(Rational(1)));
    for (int n = 1; n <= n_max; ++n) {
        const std::size_t i = polys_.size();
        polys_.push_back(x_poly() * polys_[i - 1] - polys_[i - 2]);
    }
}

const RatPoly& PathFamily::operator[](int n) const {
    if (n < -1 || n > n_max()) throw Error("PathFamily: index " + std::to_string(n) + " out of range");
    return polys_[static_cast<std::size_t>(n + 1)];
}

RatPoly path_poly(int n) {
    if (n < 0) throw Error("path_poly: N must be non-negative");
    return PathFamily(n)[n];
}

std::pair<QLinearPoly, QLinearPoly> path_plus_minus(int n_vertices) {
    if (n_vertices < 2) throw Error("path_plus_minus: N must be at least 2");
    const int n = n_vertices / 2;
    const PathFamily p(n + 1);
    if (n_vertices % 2 == 0)
        return {{p[n] - p[n - 1], p[n - 1] - p[n - 2]}, {p[n] + p[n - 1], p[n - 1] + p[n - 2]}};
    return {{p[n + 1] - p[n - 1], p[n] - p[n - 2]}, {p[n], p[n - 1]}};
}

std::vector<PathEigenvalue> path_spectrum(int n, int digits) {
    if (n < 1) throw Error("path_spectrum: N must be positive");
    const Real pi = Real::pi(digits + 10);
    std::vector<PathEigenvalue> out;
    for (int k = 1; k <= n; ++k) {
        const Real angle = pi * static_cast<long>(k) / static_cast<long>(n + 1);
        out.push_back({(2L * cos(angle)).with_digits(digits), k, n + 1});
    }
    return out;
}

bool CoprimalityReport::all_coprime() const {
    const RatPoly one = RatPoly::constant(Rational(1));
    return plus_even == one && minus_even == one && plus_odd == one && minus_odd == one;
}

CoprimalityReport path_coprimality_check(int n_vertices) {
    if (n_vertices < 4) throw Error("path_coprimality_check: N must be at least 4");
    const int n = n_vertices / 2;
    const PathFamily p(2 * n + 1);
    CoprimalityReport r;
    r.n_vertices = n_vertices;
    r.plus_even = poly_gcd(p[n] - p[n - 1], p[n - 1] - p[n - 2]);
    r.minus_even = poly_gcd(p[n] + p[n - 1], p[n - 1] + p[n - 2]);
    r.plus_odd = poly_gcd(p[n + 1] - p[n - 1], p[n] - p[n - 2]);
    r.minus_odd = poly_gcd(p[n], p[n - 1]);
    r.shared = poly_gcd(p[2 * n + 1], p[2 * n - 1]);
    for (const auto& [f, mult] : factor_over_rationals(r.shared).factors)
        if (f.degree() == 1) r.shared_roots.push_back(-f.coeff(0));
    return r;
}

std::string coprimality_json(const CoprimalityReport& r) {
    nlohmann::ordered_json doc;
    doc["N"] = r.n_vertices;
    doc["gcds"] = {{"plus_even", to_string(r.plus_even)},
                   {"minus_even", to_string(r.minus_even)},
                   {"plus_odd", to_string(r.plus_odd)},
                   {"minus_odd", to_string(r.minus_odd)}};
    doc["shared_roots"] = nlohmann::ordered_json::array();
    for (const auto& x : r.shared_roots) doc["shared_roots"].push_back(x.get_str());
    return doc.dump();
}

}  // namespace pgst
