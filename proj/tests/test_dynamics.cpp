#include "fixtures.hpp"
#include "pgst/dynamics.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

using namespace pgst;

namespace {

constexpr int digits = 60;
using cd = std::complex<double>;
using CMat = std::vector<std::vector<cd>>;

CMat multiply(const CMat& a, const CMat& b) {
    const std::size_t n = a.size();
    CMat c(n, std::vector<cd>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// exp(i t H) by scaling and squaring with a Taylor series.
CMat expm_oracle(const Matrix<Rational>& h, double t) {
    const std::size_t n = h.rows();
    double norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(h(i, j).get_d());
        norm = std::max(norm, row);
    }
    int squarings = 0;
    while (norm * std::abs(t) / std::ldexp(1.0, squarings) > 0.25) ++squarings;
    const double scale = t / std::ldexp(1.0, squarings);
    CMat a(n, std::vector<cd>(n)), result(n, std::vector<cd>(n)), term(n, std::vector<cd>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = cd(0, scale * h(i, j).get_d());
        result[i][i] = term[i][i] = 1;
    }
    for (int k = 1; k <= 30; ++k) {
        term = multiply(term, a);
        for (auto& row : term)
            for (auto& z : row) z /= k;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
    }
    for (int s = 0; s < squarings; ++s) result = multiply(result, result);
    return result;
}

Graph random_connected(std::mt19937& rng, int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng() % 4 == 0) edges.emplace_back(a, b);
    return Graph(n, edges);
}

Potential random_potential(std::mt19937& rng, int n) {
    std::vector<Rational> q;
    for (int i = 0; i < n; ++i) q.push_back(fixtures::frac(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4)));
    return fixtures::potential_from(q);
}

SpectralData spectrum(const Graph& g, const Potential& q) { return eigendecompose(build_hamiltonian(g, q), digits); }

}  // namespace

TEST_CASE("U(0) is the identity") {
    const auto s = spectrum(fixtures::seven_vertex(), Potential::zero(7));
    const auto u = unitary_at(s, Real(0L, digits));
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            CHECK(std::abs(u(i, j).re.to_double() - (i == j ? 1.0 : 0.0)) < 1e-40);
            CHECK(std::abs(u(i, j).im.to_double()) < 1e-40);
        }
    // Fidelity is summed in double.
    CHECK(fidelity(s, 0, 3, 0.0) < 1e-15);
}

TEST_CASE("K2 and P3 perfect transfer") {
    const auto k2 = spectrum(path_graph(2), Potential::zero(2));
    const double half_pi = std::numbers::pi / 2;
    CHECK(fidelity(k2, 0, 1, half_pi) >= 1 - 1e-12);
    const auto u = unitary_at(k2, Real::pi(digits) / 2L);
    CHECK(std::abs(u(0, 1).im.to_double() - 1) < 1e-40);
    for (double d : {-1e-6, 1e-6}) CHECK(fidelity(k2, 0, 1, half_pi + d) >= 1 - 1e-9);

    const auto p3 = spectrum(path_graph(3), Potential::zero(3));
    const double t3 = std::numbers::pi / std::sqrt(2.0);
    CHECK(fidelity(p3, 0, 2, t3) >= 1 - 1e-12);
    for (double d : {-1e-6, 1e-6}) CHECK(fidelity(p3, 0, 2, t3 + d) >= 1 - 1e-9);
}

TEST_CASE("unitarity, conservation and symmetry on random graphs") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> times(0, 1000);
    for (int trial = 0; trial < 4; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const auto g = random_connected(rng, n);
        const auto s = spectrum(g, random_potential(rng, n));
        const Real tol = pow10(-digits / 3, digits);
        for (int k = 0; k < 3; ++k) {
            const Real t(times(rng), digits);
            const auto u = unitary_at(s, t);
            for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
                for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
                    Real re(0L, digits), im(0L, digits);
                    for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) {
                        // (U U^H)_{ij} = sum_c U_ic conj(U_jc)
                        re += u(i, c).re * u(j, c).re + u(i, c).im * u(j, c).im;
                        im += u(i, c).im * u(j, c).re - u(i, c).re * u(j, c).im;
                    }
                    if (i == j) re -= Real(1L, digits);
                    CHECK(abs(re) < tol);
                    CHECK(abs(im) < tol);
                }
            }
            const double td = t.to_double();
            CHECK(fidelity(s, 0, n - 1, td) == fidelity(s, n - 1, 0, td));
        }
    }
}

TEST_CASE("spectral fidelity matches a matrix exponential") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> times(0, 30);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const auto g = random_connected(rng, n);
        const auto q = random_potential(rng, n);
        const auto s = spectrum(g, q);
        const auto h = build_hamiltonian(g, q).concrete();
        for (int k = 0; k < 5; ++k) {
            const double t = times(rng);
            const auto e = expm_oracle(h, t);
            for (int a = 0; a < n; ++a)
                CHECK(std::abs(fidelity(s, 0, a, t) - std::abs(e[0][static_cast<std::size_t>(a)])) < 1e-10);
        }
    }
}

TEST_CASE("search_transfer_time") {
    const auto k2 = spectrum(path_graph(2), Potential::zero(2));
    auto r = search_transfer_time(k2, 0, 1, 1e-6, 10);
    CHECK(r.reached);
    CHECK(std::abs(r.t - std::numbers::pi / 2) < 1e-6);
    CHECK(r.fidelity > 1 - 1e-12);

    const auto p3 = spectrum(path_graph(3), Potential::zero(3));
    r = search_transfer_time(p3, 0, 2, 1e-6, 10);
    CHECK(r.reached);
    CHECK(std::abs(r.t - std::numbers::pi / std::sqrt(2.0)) < 1e-6);

    // P3 endpoint to middle never exceeds 1/sqrt2.
    r = search_transfer_time(p3, 0, 1, 1e-3, 50);
    CHECK_FALSE(r.reached);
    CHECK(r.fidelity <= std::sqrt(0.5) + 1e-12);
    CHECK(r.fidelity > 0.7);

    CHECK_THROWS_AS(search_transfer_time(k2, 0, 1, 0, 10), Error);
    CHECK_THROWS_AS(search_transfer_time(k2, 0, 1, 0.1, -1), Error);
}

TEST_CASE("search returns the first crossing") {
    // K2 reaches 1 at pi/2, 3pi/2, ...; the first bump must win.
    const auto k2 = spectrum(path_graph(2), Potential::zero(2));
    const auto r = search_transfer_time(k2, 0, 1, 0.5, 100);
    CHECK(r.t < 2.5);
}

TEST_CASE("fidelity_trace") {
    const auto k2 = spectrum(path_graph(2), Potential::zero(2));
    std::vector<double> grid;
    for (int k = 0; k <= 100; ++k) grid.push_back(k * std::numbers::pi / 100);
    const auto tr = fidelity_trace(k2, 0, 1, grid);
    CHECK(tr.times.size() == tr.fidelities.size());
    CHECK(std::abs(tr.best_t - std::numbers::pi / 2) < 1e-12);
    for (double f : tr.fidelities) CHECK(f <= 1 + 1e-12);

    const auto single = fidelity_trace(k2, 0, 1, {0.0});
    CHECK(single.fidelities == std::vector<double>{0.0});
    CHECK_THROWS_AS(fidelity_trace(k2, 0, 1, {}), Error);
    CHECK_THROWS_AS(fidelity_trace(k2, 0, 1, {1.0, 0.5}), Error);

    std::ostringstream csv;
    write_fidelity_csv(csv, fidelity_trace(k2, 0, 1, {0.0, 0.5}));
    CHECK(csv.str() == "t,fidelity\n0,0\n0.5,0.47942553860420301\n");
}

TEST_CASE("a potential on C6 improves the best fidelity over a long window") {
    std::vector<Affine> v(6);
    v[1] = v[4] = Affine(Rational(1, 3));
    const auto grid = uniform_grid(500, 0.01);
    const auto with_q = fidelity_trace(spectrum(cycle_graph(6), Potential(v)), 1, 4, grid);
    const auto without = fidelity_trace(spectrum(cycle_graph(6), Potential::zero(6)), 1, 4, grid);
    CHECK(with_q.best_fidelity > without.best_fidelity);
}

TEST_CASE("uniform_grid") {
    CHECK(uniform_grid(1, 0.25) == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
    CHECK_THROWS_AS(uniform_grid(1, 0), Error);
}
