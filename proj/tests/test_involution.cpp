#include "fixtures.hpp"
#include "pgst/involution.hpp"
#include "pgst/polynomial.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace pgst;

namespace {

InvolutionErrorKind error_kind(const Graph& g, std::vector<int> perm) {
    try {
        verify_involution(g, std::move(perm));
    } catch (const InvolutionError& e) {
        return e.kind();
    }
    FAIL("expected an InvolutionError");
    return InvolutionErrorKind::TooLarge;
}

// Brute force over all permutations: count non-identity involutive automorphisms.
int brute_force_involutions(const Graph& g) {
    std::vector<int> p(static_cast<std::size_t>(g.vertex_count()));
    std::iota(p.begin(), p.end(), 0);
    int count = 0;
    do {
        bool involution = true, identity = true, automorphism = true;
        for (std::size_t v = 0; v < p.size(); ++v) {
            involution &= p[static_cast<std::size_t>(p[v])] == static_cast<int>(v);
            identity &= p[v] == static_cast<int>(v);
        }
        for (const auto& [a, b] : g.edges())
            automorphism &= g.has_edge(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
        count += involution && !identity && automorphism;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

Matrix<Rational> mat_vec(const Matrix<Rational>& m, const std::vector<Rational>& v) {
    Matrix<Rational> out(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, 0) += m(i, j) * v[j];
    return out;
}

std::vector<Rational> column(const Matrix<Rational>& m) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, 0));
    return v;
}

}  // namespace

TEST_CASE("verify_involution on the seven-vertex example") {
    const auto inv = verify_involution(fixtures::seven_vertex(), fixtures::seven_vertex_sigma());
    CHECK(inv.fixed_vertices == std::vector<int>{6});
    CHECK(inv.fixed_edge_count == 1);
    CHECK(inv.side_size == 3);
    CHECK(inv.left == std::vector<int>{0, 1, 2});
    CHECK(inv.right == std::vector<int>{3, 4, 5});
}

TEST_CASE("verify_involution on C6 antipodal") {
    const auto inv = verify_involution(cycle_graph(6), fixtures::c6_antipodal());
    CHECK(inv.fixed_vertices.empty());
    CHECK(inv.fixed_edge_count == 0);
    CHECK(inv.side_size == 3);
}

TEST_CASE("verify_involution error kinds") {
    CHECK(error_kind(cycle_graph(6), {1, 0, 2, 3, 4, 5}) == InvolutionErrorKind::NotAutomorphism);
    CHECK(error_kind(cycle_graph(6), {1, 2, 3, 4, 5, 0}) == InvolutionErrorKind::NotInvolution);
    CHECK(error_kind(cycle_graph(6), {0, 1, 2, 3, 4, 5}) == InvolutionErrorKind::Identity);
    CHECK(error_kind(cycle_graph(6), {0, 0, 2, 3, 4, 5}) == InvolutionErrorKind::NotPermutation);
    CHECK(error_kind(cycle_graph(6), {0, 1}) == InvolutionErrorKind::NotPermutation);
}

TEST_CASE("enumerate_involutions") {
    CHECK(enumerate_involutions(path_graph(4)).size() == 1);
    CHECK(enumerate_involutions(path_graph(2)).size() == 1);
    const auto c6 = enumerate_involutions(cycle_graph(6));
    CHECK(c6.size() == 7);
    CHECK(static_cast<int>(c6.size()) == brute_force_involutions(cycle_graph(6)));
    CHECK(static_cast<int>(enumerate_involutions(fixtures::seven_vertex()).size()) ==
          brute_force_involutions(fixtures::seven_vertex()));
    CHECK(std::is_sorted(c6.begin(), c6.end(), [](const auto& a, const auto& b) { return a.sigma < b.sigma; }));
    int vertex_axis = 0, edge_axis = 0, antipodal = 0;
    for (const auto& inv : c6) {
        if (inv.fixed_vertices.size() == 2) ++vertex_axis;
        else if (inv.fixed_edge_count == 2) ++edge_axis;
        else ++antipodal;
    }
    CHECK(vertex_axis == 3);
    CHECK(edge_axis == 3);
    CHECK(antipodal == 1);
    CHECK_THROWS_AS(enumerate_involutions(path_graph(11)), InvolutionError);
}

TEST_CASE("decompose the seven-vertex example") {
    using R = Rational;
    const R q1(1, 2), q2(1, 3), q3(1, 5), q4(1, 7);
    const auto pot = fixtures::potential_from({q1, q2, q3, q1, q2, q3, q4});
    const auto inv = verify_involution(fixtures::seven_vertex(), fixtures::seven_vertex_sigma());
    const auto bd = decompose(build_hamiltonian(fixtures::seven_vertex(), pot), inv);
    const std::vector<std::vector<R>> plus = {
        {q1, 2, 0, 0}, {2, q2, 1, 0}, {0, 1, q3 + 1, 1}, {0, 0, 2, q4}};
    const std::vector<std::vector<R>> minus = {{q1, 0, 0}, {0, q2, 1}, {0, 1, q3 - 1}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(bd.h_plus(i, j) == Affine(plus[i][j]));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(bd.h_minus(i, j) == Affine(minus[i][j]));
    // Fixed edge v3v6 sits on the diagonal of Asigma.
    CHECK(bd.a_sigma(2, 2) == Affine(1L));
    CHECK(bd.a_sigma.transposed() == bd.a_sigma);
    CHECK(reassemble(bd, inv) == build_hamiltonian(fixtures::seven_vertex(), pot).entries);
}

TEST_CASE("decompose K2") {
    std::vector<Affine> v{Affine::symbol(), Affine::symbol()};
    const auto inv = verify_involution(path_graph(2), {1, 0});
    const auto bd = decompose(build_hamiltonian(path_graph(2), Potential(v)), inv);
    REQUIRE(bd.h_plus.rows() == 1);
    CHECK(bd.h_plus(0, 0) == Affine(Rational(1), Rational(1)));
    CHECK(bd.h_minus(0, 0) == Affine(Rational(-1), Rational(1)));
}

TEST_CASE("decompose rejects asymmetric potential") {
    const auto inv = verify_involution(cycle_graph(6), fixtures::c6_antipodal());
    const auto pot = fixtures::potential_from({1, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(decompose(build_hamiltonian(cycle_graph(6), pot), inv), Error);
}

TEST_CASE("side choice leaves the H- spectrum unchanged") {
    const auto inv = verify_involution(cycle_graph(6), fixtures::c6_antipodal());
    const auto h = build_hamiltonian(cycle_graph(6), Potential::zero(6));
    const RatPoly reference = char_poly(decompose(h, inv).h_minus.map([](const Affine& a) { return a.constant; }));
    for (int mask = 1; mask < 8; ++mask) {
        std::vector<int> orbits;
        for (int i = 0; i < 3; ++i)
            if (mask >> i & 1) orbits.push_back(i);
        const auto flipped = flip_sides(inv, orbits);
        const auto bd = decompose(h, flipped);
        CHECK(char_poly(bd.h_minus.map([](const Affine& a) { return a.constant; })) == reference);
        CHECK(reassemble(bd, flipped) == h.entries);
    }
    // The sign pattern itself depends on the choice.
    CHECK_FALSE(decompose(h, flip_sides(inv, std::vector<int>{0})).h_minus == decompose(h, inv).h_minus);
}

TEST_CASE("lifts") {
    const auto k2 = verify_involution(path_graph(2), {1, 0});
    const std::vector<int> one{1};
    CHECK(lift_minus<int>(k2, one) == std::vector<int>{1, -1});
    CHECK(lift_plus<int>(k2, one) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(lift_minus<int>(k2, std::vector<int>{1, 2}), Error);

    const auto inv = verify_involution(fixtures::seven_vertex(), fixtures::seven_vertex_sigma());
    CHECK(lift_plus<int>(inv, std::vector<int>{1, 1, 1, 1}) == std::vector<int>(7, 1));
    CHECK_THROWS_AS(lift_plus<int>(inv, std::vector<int>{1, 1, 1}), Error);
}

TEST_CASE("lifts intertwine H with H+ and H- on random inputs") {
    std::mt19937 rng(11);
    const auto g = fixtures::seven_vertex();
    const auto inv = verify_involution(g, fixtures::seven_vertex_sigma());
    const auto pot = fixtures::potential_from({Rational(2, 3), 0, 5, Rational(2, 3), 0, 5, -1});
    const auto h = build_hamiltonian(g, pot);
    const auto bd = decompose(h, inv);
    const auto hc = h.concrete();
    const auto hp = bd.h_plus.map([](const Affine& a) { return a.constant; });
    const auto hm = bd.h_minus.map([](const Affine& a) { return a.constant; });
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> a(4), c(3);
        for (auto& x : a) x = fixtures::frac(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
        for (auto& x : c) x = fixtures::frac(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
        const auto lp = lift_plus<Rational>(inv, a);
        CHECK(column(mat_vec(hc, lp)) == lift_plus<Rational>(inv, column(mat_vec(hp, a))));
        const auto lm = lift_minus<Rational>(inv, c);
        CHECK(column(mat_vec(hc, lm)) == lift_minus<Rational>(inv, column(mat_vec(hm, c))));
        Rational ip(0);
        for (std::size_t i = 0; i < 7; ++i) ip += lp[i] * lm[i];
        CHECK(ip == 0);
    }
    // P(H) = P+(x) P-(x) exactly.
    CHECK(char_poly(hc) == char_poly(hp) * char_poly(hm));
}

TEST_CASE("symmetrized H+ is symmetric and similar to H+") {
    const auto inv = verify_involution(fixtures::seven_vertex(), fixtures::seven_vertex_sigma());
    const auto bd = decompose(build_hamiltonian(fixtures::seven_vertex(), Potential::zero(7)), inv);
    const auto s = symmetrized_plus(bd, 40);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(abs(s(i, j) - s(j, i)).to_double() < 1e-35);
    CHECK(abs(s(2, 3) - sqrt(Real(2L, 40))).to_double() < 1e-35);
}
