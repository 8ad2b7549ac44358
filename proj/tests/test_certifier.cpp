#include "fixtures.hpp"
#include "pgst/certifier.hpp"
#include "pgst/lattice.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace pgst;

namespace {

constexpr int p = 60;

std::vector<IntVector> coefficient_rows(const std::vector<IntegerRelation>& rels) {
    std::vector<IntVector> rows;
    for (const auto& r : rels) rows.push_back(r.coefficients());
    return rows;
}

IntVector ints(std::initializer_list<long> v) {
    IntVector out;
    for (long x : v) out.emplace_back(x);
    return out;
}

IntegerRelation relation(std::initializer_list<long> ell, std::initializer_list<long> m) {
    IntegerRelation r;
    r.ell = ints(ell);
    r.m = ints(m);
    return r;
}

Potential c6_middle(const Rational& q) {
    std::vector<Affine> v(6);
    v[1] = v[4] = Affine(q);
    return Potential(v);
}

Potential p4_endpoints(const Affine& q) {
    std::vector<Affine> v(4);
    v[0] = v[3] = q;
    return Potential(v);
}

const Potential c6_generic = fixtures::potential_from({1, Rational(1, 2), Rational(1, 3), 1, Rational(1, 2),
                                                       Rational(1, 3)});

void check_invariants(const PGSTVerdict& v) {
    for (const auto& r : v.relation_basis) {
        CHECK(r.ell_sum() + r.m_sum() == 0);
        CHECK(r.residual < pow10(-v.precision_digits / 2, v.precision_digits));
        CHECK(r.ell.size() == v.lambdas.size());
        CHECK(r.m.size() == v.mus.size());
    }
    if (v.conclusion == Conclusion::NoPgst) {
        REQUIRE(v.obstruction.has_value());
        CHECK(v.obstruction->m_sum_odd());
        CHECK(v.obstruction->exact);
    }
    if (v.conclusion == Conclusion::PgstConsistent) {
        CHECK(v.parity_ok);
        CHECK(v.strongly_cospectral);
    }
}

}  // namespace

TEST_CASE("trace_check") {
    const auto g = fixtures::seven_vertex();
    const auto inv = verify_involution(g, fixtures::seven_vertex_sigma());
    const auto pot = fixtures::potential_from({Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 2),
                                               Rational(1, 3), Rational(1, 5), Rational(1, 7)});
    auto bd = decompose(build_hamiltonian(g, pot), inv);
    CHECK(trace_check(bd, pot, inv));
    // Independent evaluation of both traces.
    Affine tp, tm;
    for (std::size_t i = 0; i < 4; ++i) tp = tp + bd.h_plus(i, i);
    for (std::size_t i = 0; i < 3; ++i) tm = tm + bd.h_minus(i, i);
    CHECK(tp == Affine(Rational(1, 2) + Rational(1, 3) + Rational(1, 5) + Rational(1, 7) + 1));
    CHECK(tm == Affine(Rational(1, 2) + Rational(1, 3) + Rational(1, 5) - 1));

    // Symbolic potential on P5 with the middle vertex fixed.
    const std::vector<Affine> sym{Affine::symbol(), Affine(Rational(2, 3)), Affine(Rational(0), Rational(2)),
                                  Affine(Rational(2, 3)), Affine::symbol()};
    const auto inv5 = verify_involution(path_graph(5), {4, 3, 2, 1, 0});
    const auto bd5 = decompose(build_hamiltonian(path_graph(5), Potential(sym)), inv5);
    CHECK(inv5.fixed_edge_count == 0);
    CHECK(trace_check(bd5, Potential(sym), inv5));

    bd.h_plus(1, 1) = bd.h_plus(1, 1) + Affine(Rational(1, 1000));
    CHECK_FALSE(trace_check(bd, pot, inv));
}

TEST_CASE("find_integer_relations: K2 has none") {
    const std::vector<Real> l{Real(1L, 2 * p)}, m{Real(-1L, 2 * p)};
    CHECK(find_integer_relations(l, m, 50, p).empty());
}

TEST_CASE("find_integer_relations: P4 golden relations") {
    const Real r5 = sqrt(Real(5L, 2 * p));
    const Real one(1L, 2 * p);
    const std::vector<Real> l{(one + r5) / 2L, (one - r5) / 2L};
    const std::vector<Real> m{(r5 - one) / 2L, (-one - r5) / 2L};
    const auto rels = find_integer_relations(l, m, 50, p);
    REQUIRE(rels.size() == 1);
    CHECK(same_lattice(coefficient_rows(rels), {ints({1, -1, -1, 1})}));
    CHECK_FALSE(rels[0].m_sum_odd());
    CHECK(rels[0].residual < pow10(-2 * p + 5, 2 * p));
}

TEST_CASE("find_integer_relations: errors and height bound") {
    const std::vector<Real> l{Real(1L, 2 * p)}, m{Real(-1L, 2 * p)};
    CHECK_THROWS_WITH_AS(find_integer_relations(l, m, 1'000'000, 20), doctest::Contains("precision"), Error);
    const std::vector<Real> coarse{Real(1L, p)};
    CHECK_THROWS_AS(find_integer_relations(coarse, m, 50, p), Error);
    // Values 1, 100/3, 0: every relation is a multiple of (100, -3, -97).
    const Real third = Real(100L, 2 * p) / 3L;
    const std::vector<Real> a{Real(1L, 2 * p), third}, b{Real(0L, 2 * p)};
    const auto wide = search_integer_relations(a, b, 200, p);
    const auto narrow = search_integer_relations(a, b, 50, p);
    REQUIRE(wide.relations.size() == 1);
    CHECK(same_lattice(coefficient_rows(wide.relations), {ints({100, -3, -97})}));
    CHECK(narrow.relations.empty());
    CHECK(narrow.dropped_over_height == 1);
}

TEST_CASE("exact_integer_relations") {
    const QuadNumber l1(Rational(1, 2), Rational(1, 2), 5), l2(Rational(1, 2), Rational(-1, 2), 5);
    const QuadNumber m1(Rational(-1, 2), Rational(1, 2), 5), m2(Rational(-1, 2), Rational(-1, 2), 5);
    const auto rels = exact_integer_relations({l1, l2}, {m1, m2});
    REQUIRE(rels.size() == 1);
    CHECK(same_lattice(coefficient_rows(rels), {ints({1, -1, -1, 1})}));
    CHECK(rels[0].exact);
    // Mixed radicals: sqrt2 and sqrt3 never cancel each other.
    const auto mixed = exact_integer_relations({QuadNumber(0, 1, 2), QuadNumber(0, 1, 3)}, {QuadNumber(1L)});
    CHECK(mixed.empty());
    CHECK(exact_integer_relations({}, {}).empty());
}

TEST_CASE("parity_verdict") {
    CHECK(parity_verdict({relation({1, -1}, {-1, 1})}).first);
    const auto odd = parity_verdict({relation({1, 1, 1}, {-1, -1, -1})});
    CHECK_FALSE(odd.first);
    REQUIRE(odd.second.has_value());
    CHECK(odd.second->m_sum() == -3);
    CHECK(parity_verdict({}).first);
}

TEST_CASE("parity_verdict is invariant under unimodular re-mixing") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<IntVector> basis;
        const int rank = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < rank; ++i) {
            IntVector v(6);
            for (int j = 0; j < 5; ++j) v[static_cast<std::size_t>(j)] = static_cast<long>(rng() % 7) - 3;
            Integer s(0);
            for (int j = 0; j < 5; ++j) s += v[static_cast<std::size_t>(j)];
            v[5] = -s;
            basis.push_back(v);
        }
        const auto to_rel = [](const std::vector<IntVector>& rows) {
            std::vector<IntegerRelation> out;
            for (const auto& r : rows) {
                IntegerRelation rel;
                rel.ell.assign(r.begin(), r.begin() + 3);
                rel.m.assign(r.begin() + 3, r.end());
                out.push_back(rel);
            }
            return out;
        };
        const bool before = parity_verdict(to_rel(basis)).first;
        for (int step = 0; step < 10; ++step) {
            const auto i = rng() % basis.size(), j = rng() % basis.size();
            if (i == j) {
                for (auto& z : basis[i]) z = -z;
                continue;
            }
            const long k = static_cast<long>(rng() % 5) - 2;
            for (std::size_t c = 0; c < 6; ++c) basis[i][c] += k * basis[j][c];
        }
        CHECK(parity_verdict(to_rel(basis)).first == before);
    }
}

TEST_CASE("odd_obstruction") {
    const auto c6 = cycle_graph(6);
    const auto antipodal = verify_involution(c6, fixtures::c6_antipodal());
    const auto classify = [&](const Potential& pot, const InvolutionInfo& inv, int u) {
        const auto h = build_hamiltonian(inv.sigma.size() == 6 ? c6 : fixtures::seven_vertex(), pot);
        const auto s = eigendecompose(h, p);
        const auto exact = h.concrete();
        return classify_pair(s, u, inv.sigma[static_cast<std::size_t>(u)], std::nullopt, &exact);
    };
    const auto obs = odd_obstruction(antipodal, classify(c6_generic, antipodal, 1));
    REQUIRE(obs.has_value());
    CHECK(obs->m_sum() == -3);
    CHECK(obs->ell_sum() == 3);
    CHECK(obs->residual.to_double() < 1e-40);

    CHECK_FALSE(odd_obstruction(antipodal, classify(Potential::zero(6), antipodal, 1)).has_value());

    const auto inv7 = verify_involution(fixtures::seven_vertex(), fixtures::seven_vertex_sigma());
    CHECK_FALSE(odd_obstruction(inv7, classify(Potential::zero(7), inv7, 0)).has_value());
}

TEST_CASE("certify: C6 with Q = 1/3 on the fixed-edge reflection") {
    const auto inv = verify_involution(cycle_graph(6), fixtures::c6_edge_reflection());
    const auto v = certify(cycle_graph(6), inv, c6_middle(Rational(1, 3)), 1);
    check_invariants(v);
    CHECK(v.v == 4);
    CHECK(v.conclusion == Conclusion::PgstConsistent);
    CHECK(v.certificate_kind == CertificateKind::Exact);
    CHECK(v.relation_basis.empty());
    CHECK(v.vanishing_count == 2);
    CHECK(v.lambdas.size() == 2);
    CHECK(v.mus.size() == 2);
    CHECK(v.trace_identities);
}

TEST_CASE("certify: C6 antipodal with a generic potential has no PGST") {
    const auto inv = verify_involution(cycle_graph(6), fixtures::c6_antipodal());
    const auto v = certify(cycle_graph(6), inv, c6_generic, 1);
    check_invariants(v);
    CHECK(v.conclusion == Conclusion::NoPgst);
    REQUIRE(v.obstruction.has_value());
    CHECK(v.obstruction->m_sum() == -3);
    CHECK_FALSE(v.parity_ok);
    // The search also finds the all-ones relation in its lattice.
    CHECK(in_lattice(ints({1, 1, 1, -1, -1, -1}), coefficient_rows(v.relation_basis)));
}

TEST_CASE("certify: P4 without potential") {
    const auto inv = verify_involution(path_graph(4), {3, 2, 1, 0});
    const auto v = certify(path_graph(4), inv, Potential::zero(4), 0);
    check_invariants(v);
    CHECK(v.conclusion == Conclusion::PgstConsistent);
    CHECK(v.certificate_kind == CertificateKind::Exact);
    REQUIRE(v.relation_basis.size() == 1);
    CHECK(v.relation_basis[0].m_sum() == 0);
}

TEST_CASE("certify: leaves of a star are not strongly cospectral") {
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto inv = verify_involution(star, {0, 2, 1, 3});
    const auto v = certify(star, inv, Potential::zero(4), 1);
    CHECK(v.conclusion == Conclusion::NotCospectral);
    CHECK(v.certificate_kind == CertificateKind::Exact);
    CHECK_FALSE(v.strongly_cospectral);
}

TEST_CASE("certify: heuristic path on the seven-vertex example") {
    const auto inv = verify_involution(fixtures::seven_vertex(), fixtures::seven_vertex_sigma());
    const auto v = certify(fixtures::seven_vertex(), inv, Potential::zero(7), 0);
    check_invariants(v);
    CHECK(v.strongly_cospectral);
    CHECK(v.certificate_kind == CertificateKind::Heuristic);
    CHECK(v.structural.s_size == 1);
    CHECK(v.structural.fixed_edges == 1);
    CHECK_FALSE(v.structural.q_linear_irreducible_plus.has_value());
    // Every reported relation holds exactly: P(H) splits as x (x^2+x-1) (quartic).
    for (const auto& r : v.relation_basis) CHECK(r.exact);
}

TEST_CASE("certify: symbolic potential and structural fields") {
    const auto inv = verify_involution(path_graph(4), {3, 2, 1, 0});
    const Potential sym = p4_endpoints(Affine::symbol());
    CHECK_THROWS_AS(certify(path_graph(4), inv, sym, 0), Error);
    CertifyOptions opts;
    opts.q_value = Rational(1, 2);
    const auto v = certify(path_graph(4), inv, sym, 0, opts);
    check_invariants(v);
    CHECK(v.structural.q_linear_irreducible_plus == std::optional<bool>(true));
    CHECK(v.structural.q_linear_irreducible_minus == std::optional<bool>(true));
    CHECK(v.conclusion != Conclusion::NotCospectral);
}

TEST_CASE("certify input errors") {
    const auto inv = verify_involution(cycle_graph(6), fixtures::c6_antipodal());
    const auto asym = fixtures::potential_from({1, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(certify(cycle_graph(6), inv, asym, 0), Error);
    const auto p5 = verify_involution(path_graph(5), {4, 3, 2, 1, 0});
    CHECK_THROWS_AS(certify(path_graph(5), p5, Potential::zero(5), 2), Error);
    CertifyOptions low;
    low.precision_digits = 10;
    CHECK_THROWS_AS(certify(cycle_graph(6), inv, Potential::zero(6), 0, low), Error);
}

TEST_CASE("exact and LLL relation lattices agree on quadratic examples") {
    struct Case {
        Graph g;
        std::vector<int> sigma;
        Potential q;
        int u;
    };
    const std::vector<Case> cases = {
        {path_graph(4), {3, 2, 1, 0}, Potential::zero(4), 0},
        {path_graph(2), {1, 0}, Potential::zero(2), 0},
        {cycle_graph(6), fixtures::c6_edge_reflection(), c6_middle(Rational(1, 3)), 1},
        {cycle_graph(6), fixtures::c6_antipodal(), Potential::zero(6), 1},
        {cycle_graph(4), {2, 1, 0, 3}, Potential::zero(4), 0},
        {path_graph(4), {3, 2, 1, 0}, p4_endpoints(Affine(Rational(1))), 0},
    };
    for (const auto& c : cases) {
        const auto v = certify(c.g, verify_involution(c.g, c.sigma), c.q, c.u);
        REQUIRE(v.certificate_kind == CertificateKind::Exact);
        if (!v.strongly_cospectral) continue;
        const auto lll = find_integer_relations(v.lambdas, v.mus, 50, p);
        CHECK(same_lattice(coefficient_rows(lll), coefficient_rows(v.relation_basis)));
    }
}

TEST_CASE("verdict_json") {
    const auto inv = verify_involution(cycle_graph(6), fixtures::c6_antipodal());
    const auto doc = nlohmann::json::parse(verdict_json(certify(cycle_graph(6), inv, c6_generic, 1)));
    CHECK(doc["conclusion"] == "no_pgst");
    CHECK(doc["strongly_cospectral"] == true);
    CHECK(doc["parity_ok"] == false);
    CHECK(doc["certificate"]["kind"] == "exact");
    CHECK(doc["certificate"]["height_bound"] == 50);
    CHECK(doc["certificate"]["precision"] == 60);
    CHECK(doc["structural"]["S_size"] == 0);
    CHECK(doc["structural"]["q_linear_irreducible_plus"].is_null());
    CHECK(doc["obstruction"]["m"] == nlohmann::json::array({-1, -1, -1}));
    CHECK(doc["relations"].is_array());
}
