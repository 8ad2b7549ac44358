#include "fixtures.hpp"
#include "pgst/involution.hpp"
#include "pgst/paths.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace pgst;

namespace {

RatPoly poly(std::initializer_list<long> low_first) {
    std::vector<Rational> v;
    for (long c : low_first) v.emplace_back(c);
    return RatPoly(std::move(v));
}

Matrix<Affine> path_block(int n_vertices, bool plus) {
    std::vector<Affine> q(static_cast<std::size_t>(n_vertices));
    q.front() = q.back() = Affine::symbol();
    std::vector<int> sigma;
    for (int i = 0; i < n_vertices; ++i) sigma.push_back(n_vertices - 1 - i);
    const auto g = path_graph(n_vertices);
    const auto bd = decompose(build_hamiltonian(g, Potential(q)), verify_involution(g, sigma));
    return plus ? bd.h_plus : bd.h_minus;
}

}  // namespace

TEST_CASE("path_poly") {
    CHECK(path_poly(0) == poly({1}));
    CHECK(path_poly(2) == poly({-1, 0, 1}));
    CHECK(path_poly(3) == poly({0, -2, 0, 1}));
    for (int n = 1; n <= 12; ++n) CHECK(path_poly(n) == char_poly(build_hamiltonian(path_graph(n), Potential::zero(n)).concrete()));
    CHECK_THROWS_AS(path_poly(-1), Error);
    const PathFamily fam(5);
    CHECK(fam[-1].is_zero());
    CHECK(fam[5].degree() == 5);
    CHECK_THROWS_AS(fam[6], Error);
}

TEST_CASE("path_plus_minus examples") {
    const RatPoly one = poly({1});
    auto [plus, minus] = path_plus_minus(4);
    CHECK(plus == QLinearPoly{poly({-1, -1, 1}), poly({-1, 1})});
    CHECK(minus == QLinearPoly{poly({-1, 1, 1}), poly({1, 1})});
    std::tie(plus, minus) = path_plus_minus(5);
    CHECK(minus == QLinearPoly{poly({-1, 0, 1}), poly({0, 1})});
    std::tie(plus, minus) = path_plus_minus(2);
    CHECK(plus == QLinearPoly{poly({-1, 1}), one});
    CHECK(minus == QLinearPoly{poly({1, 1}), one});
    CHECK_THROWS_AS(path_plus_minus(1), Error);
}

TEST_CASE("path_plus_minus matches the block decomposition") {
    for (int n = 2; n <= 12; ++n) {
        const auto [plus, minus] = path_plus_minus(n);
        CHECK(plus == char_poly_q_linear(path_block(n, true)));
        CHECK(minus == char_poly_q_linear(path_block(n, false)));
    }
}

TEST_CASE("P+ P- is the path char poly at random Q") {
    std::mt19937 rng(3);
    for (int n = 2; n <= 12; ++n) {
        const auto [plus, minus] = path_plus_minus(n);
        for (int trial = 0; trial < 5; ++trial) {
            const Rational q = fixtures::frac(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6));
            std::vector<Affine> pot(static_cast<std::size_t>(n));
            pot.front() = pot.back() = Affine(q);
            const auto h = build_hamiltonian(path_graph(n), Potential(pot)).concrete();
            const RatPoly qp = RatPoly::constant(q);
            CHECK((plus.p - qp * plus.q) * (minus.p - qp * minus.q) == char_poly(h));
        }
    }
}

TEST_CASE("path_spectrum") {
    const auto two = path_spectrum(2);
    REQUIRE(two.size() == 2);
    CHECK(abs(two[0].value - Real(1L, 60)).to_double() < 1e-55);
    CHECK(abs(two[1].value + Real(1L, 60)).to_double() < 1e-55);
    CHECK(two[1].k == 2);
    CHECK(two[1].denominator == 3);

    const Real golden = (Real(1L, 60) + sqrt(Real(5L, 60))) / 2L;
    CHECK(abs(path_spectrum(4)[0].value - golden).to_double() < 1e-55);
    for (const auto& e : path_spectrum(4)) CHECK(abs(evaluate(poly({1, 0, -3, 0, 1}), e.value)).to_double() < 1e-30);

    for (int n = 1; n <= 50; ++n) {
        const RatPoly p = path_poly(n);
        for (const auto& e : path_spectrum(n)) CHECK(abs(evaluate(p, e.value)).to_double() < 1e-40);
    }
    CHECK_THROWS_AS(path_spectrum(0), Error);
}

TEST_CASE("even paths: p_2n splits into p_n - p_{n-1} and p_n + p_{n-1} on disjoint grids") {
    for (int n = 1; n <= 25; ++n) {
        const PathFamily p(2 * n);
        const RatPoly minus_part = p[n] - p[n - 1], plus_part = p[n] + p[n - 1];
        CHECK(minus_part * plus_part == p[2 * n]);
        for (const auto& e : path_spectrum(2 * n)) {
            const bool a = abs(evaluate(minus_part, e.value)).to_double() < 1e-40;
            const bool b = abs(evaluate(plus_part, e.value)).to_double() < 1e-40;
            CHECK(a != b);
            // k odd lands on p_n - p_{n-1}.
            CHECK(a == (e.k % 2 == 1));
        }
    }
}

TEST_CASE("path_coprimality_check") {
    for (int n = 4; n <= 40; ++n) {
        const auto r = path_coprimality_check(n);
        CHECK(r.all_coprime());
        CHECK(r.shared == poly({0, 1}));
        CHECK(r.shared_roots == std::vector<Rational>{Rational(0)});
    }
    const auto five = path_coprimality_check(5);
    CHECK(poly_gcd(poly({-1, 0, 1}), poly({0, 1})) == poly({1}));
    CHECK(five.minus_odd == poly({1}));
    const auto doc = nlohmann::json::parse(coprimality_json(path_coprimality_check(101)));
    CHECK(doc["N"] == 101);
    CHECK(doc["gcds"]["plus_even"] == "1");
    CHECK(doc["gcds"]["minus_odd"] == "1");
    CHECK(doc["shared_roots"] == nlohmann::json::array({"0"}));
    CHECK_THROWS_AS(path_coprimality_check(3), Error);
}
