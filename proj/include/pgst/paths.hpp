#pragma once

#include "pgst/numeric.hpp"
#include "pgst/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pgst {

/// p_{-1} = 0, p_0 = 1, p_N = x p_{N-1} - p_{N-2}: the characteristic
/// polynomials of the path adjacency matrices, built once up to n_max.
class PathFamily {
  public:
    explicit PathFamily(int n_max);

    int n_max() const { return static_cast<int>(polys_.size()) - 2; }
    /// Valid for -1 <= N <= n_max.
    const RatPoly& operator[](int n) const;

  private:
    std::vector<RatPoly> polys_;  // polys_[N + 1] = p_N
};

/// Throws Error for negative N.
RatPoly path_poly(int n);

/// (P+, P-) for the path on N >= 2 vertices with Q on both endpoints and the
/// reflection, each written as p - Q q. With N = 2n:
///   P+ = (p_n - p_{n-1}) - Q (p_{n-1} - p_{n-2}),  P- = (p_n + p_{n-1}) - Q (p_{n-1} + p_{n-2});
/// with N = 2n + 1:
///   P+ = (p_{n+1} - p_{n-1}) - Q (p_n - p_{n-2}),  P- = p_n - Q p_{n-1}.
std::pair<QLinearPoly, QLinearPoly> path_plus_minus(int n);

struct PathEigenvalue {
    Real value;  // 2 cos(k pi / denominator)
    int k = 0;
    int denominator = 0;  // N + 1
};

/// 2 cos(k pi / (N + 1)) for k = 1..N. Throws Error for N < 1.
std::vector<PathEigenvalue> path_spectrum(int n, int digits = 60);

/// The four gcds behind the path coprimality argument at n = floor(N / 2),
/// and the roots shared by p_{2n+1} and p_{2n-1}.
struct CoprimalityReport {
    int n_vertices = 0;
    RatPoly plus_even;   // gcd(p_n - p_{n-1}, p_{n-1} - p_{n-2})
    RatPoly minus_even;  // gcd(p_n + p_{n-1}, p_{n-1} + p_{n-2})
    RatPoly plus_odd;    // gcd(p_{n+1} - p_{n-1}, p_n - p_{n-2})
    RatPoly minus_odd;   // gcd(p_n, p_{n-1})
    RatPoly shared;      // gcd(p_{2n+1}, p_{2n-1})
    /// Rational roots of `shared`; all of its roots when it splits over Q.
    std::vector<Rational> shared_roots;

    bool all_coprime() const;
};

/// Throws Error for N < 4.
CoprimalityReport path_coprimality_check(int n);

/// {"N":..,"gcds":{"plus_even":"1",...},"shared_roots":["0"]}.
std::string coprimality_json(const CoprimalityReport& r);

}  // namespace pgst
