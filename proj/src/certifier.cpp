#include "pgst/certifier.hpp"

#include "pgst/factor.hpp"
#include "pgst/lattice.hpp"
#include "pgst/polynomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace pgst {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

constexpr int slack = 10;

Integer power_of_ten(int e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return out;
}

Real combination(const std::vector<Integer>& c, const std::vector<const Real*>& x, int digits) {
    Real sum(0L, digits);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) sum += Real(Rational(c[i]), digits) * x[i]->with_digits(digits);
    return abs(sum);
}

void normalize_sign(std::vector<Integer>& c) {
    const auto first = std::find_if(c.begin(), c.end(), [](const Integer& z) { return z != 0; });
    if (first != c.end() && *first < 0)
        for (auto& z : c) z = -z;
}

IntegerRelation split(const std::vector<Integer>& c, std::size_t plus_count) {
    IntegerRelation r;
    r.ell.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(plus_count));
    r.m.assign(c.begin() + static_cast<std::ptrdiff_t>(plus_count), c.end());
    return r;
}

// Exact data for the eigenvalues of H: the irreducible factor each one is a
// root of, and its quadratic-field value when that factor has degree <= 2.
struct ExactSpectrum {
    std::vector<RatPoly> factors;
    std::vector<int> factor_of;
    std::vector<std::optional<QuadNumber>> value;
    bool all_quadratic = true;
};

std::optional<ExactSpectrum> exact_spectrum(const Matrix<Rational>& h, const SpectralData& s) {
    Factorization fz;
    try {
        fz = factor_over_rationals(char_poly(h));
    } catch (const Error&) {
        return std::nullopt;
    }
    ExactSpectrum out;
    std::vector<std::vector<QuadNumber>> roots;
    for (const auto& [f, mult] : fz.factors) {
        out.factors.push_back(f);
        out.all_quadratic = out.all_quadratic && f.degree() <= 2;
        roots.push_back(f.degree() <= 2 ? *quadratic_roots(f) : std::vector<QuadNumber>{});
    }
    const int digits = s.precision_digits;
    for (const Real& lambda : s.eigenvalues) {
        int best = -1;
        Real best_value(0L, digits);
        for (std::size_t f = 0; f < out.factors.size(); ++f) {
            const Real r = abs(evaluate(out.factors[f], lambda));
            if (best < 0 || r < best_value) {
                best = static_cast<int>(f);
                best_value = r;
            }
        }
        out.factor_of.push_back(best);
        std::optional<QuadNumber> value;
        const auto& candidates = roots[at(best)];
        if (!candidates.empty()) {
            value = *std::min_element(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
                return abs(a.to_real(digits) - lambda) < abs(b.to_real(digits) - lambda);
            });
        }
        out.value.push_back(value);
    }
    return out;
}

// Exact test of sum c_i lambda_{idx_i} = 0. Roots of factors of degree <= 2
// enter through their quadratic-field values; a higher-degree factor must
// appear with one common coefficient on all of its roots, contributing that
// coefficient times the root sum.
bool verify_exactly(const std::vector<Integer>& c, const std::vector<int>& idx, const ExactSpectrum& ex) {
    Rational rational_part(0);
    std::map<Integer, Rational> radical_parts;
    std::map<int, std::vector<Integer>> by_factor;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const int e = idx[i];
        const auto& value = ex.value[at(e)];
        if (value) {
            rational_part += Rational(c[i]) * value->a;
            if (value->b != 0) radical_parts[value->d] += Rational(c[i]) * value->b;
        } else {
            by_factor[ex.factor_of[at(e)]].push_back(c[i]);
        }
    }
    for (const auto& [f, coeffs] : by_factor) {
        const RatPoly& poly = ex.factors[at(f)];
        if (static_cast<int>(coeffs.size()) != poly.degree()) return false;
        if (std::any_of(coeffs.begin(), coeffs.end(), [&](const Integer& z) { return z != coeffs.front(); }))
            return false;
        rational_part -= Rational(coeffs.front()) * poly.coeff(poly.degree() - 1) / poly.leading();
    }
    if (rational_part != 0) return false;
    return std::all_of(radical_parts.begin(), radical_parts.end(), [](const auto& kv) { return kv.second == 0; });
}

StructuralSummary structural_summary(const Graph& g, const InvolutionInfo& inv, const Potential& q, int u) {
    StructuralSummary out;
    out.s_size = static_cast<int>(inv.fixed_vertices.size());
    out.fixed_edges = inv.fixed_edge_count;
    const int v = inv.sigma[at(u)];
    for (int w = 0; w < q.size(); ++w) {
        const Rational want = (w == u || w == v) ? 1 : 0;
        if (q[w].q_coeff != want) return out;
    }
    const auto bd = decompose(build_hamiltonian(g, q), inv);
    const auto irreducible = [](const Matrix<Affine>& m) -> std::optional<bool> {
        try {
            return q_linear_irreducible(char_poly_q_linear(m));
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    out.q_linear_irreducible_plus = irreducible(bd.h_plus);
    out.q_linear_irreducible_minus = irreducible(bd.h_minus);
    return out;
}

nlohmann::ordered_json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

nlohmann::ordered_json relation_doc(const IntegerRelation& r) {
    nlohmann::ordered_json doc;
    doc["ell"] = nlohmann::ordered_json::array();
    for (const auto& z : r.ell) doc["ell"].push_back(integer_json(z));
    doc["m"] = nlohmann::ordered_json::array();
    for (const auto& z : r.m) doc["m"].push_back(integer_json(z));
    doc["residual"] = r.residual.to_string(10);
    doc["exact"] = r.exact;
    return doc;
}

}  // namespace

Integer IntegerRelation::ell_sum() const {
    Integer s(0);
    for (const auto& z : ell) s += z;
    return s;
}

Integer IntegerRelation::m_sum() const {
    Integer s(0);
    for (const auto& z : m) s += z;
    return s;
}

bool IntegerRelation::m_sum_odd() const { return mpz_odd_p(m_sum().get_mpz_t()) != 0; }

std::vector<Integer> IntegerRelation::coefficients() const {
    std::vector<Integer> out = ell;
    out.insert(out.end(), m.begin(), m.end());
    return out;
}

bool trace_check(const BlockDecomposition<Affine>& bd, const Potential& q, const InvolutionInfo& inv) {
    Affine side, fixed;
    for (int x : inv.left) side = side + q[x];
    for (int x : inv.fixed_vertices) fixed = fixed + q[x];
    const Affine k(static_cast<long>(inv.fixed_edge_count));
    Affine tr_plus, tr_minus;
    for (std::size_t i = 0; i < bd.h_plus.rows(); ++i) tr_plus = tr_plus + bd.h_plus(i, i);
    for (std::size_t i = 0; i < bd.h_minus.rows(); ++i) tr_minus = tr_minus + bd.h_minus(i, i);
    return tr_plus == side + fixed + k && tr_minus == side - k;
}

RelationSearch search_integer_relations(const std::vector<Real>& lambdas, const std::vector<Real>& mus,
                                        int height_bound, int precision_digits) {
    if (precision_digits < 2 * slack) throw Error("find_integer_relations: precision_digits must be at least 20");
    if (height_bound < 1) throw Error("find_integer_relations: height_bound must be positive");
    std::vector<const Real*> x;
    for (const auto& l : lambdas) x.push_back(&l);
    for (const auto& m : mus) x.push_back(&m);
    const std::size_t r = x.size();

    RelationSearch out;
    out.accept_threshold = pow10(-precision_digits - slack, 2 * precision_digits);
    if (r == 0) return out;
    const Integer h(height_bound);
    if (h * h * static_cast<unsigned long>(r) > power_of_ten(precision_digits / 2))
        throw Error("find_integer_relations: precision too low for this height bound and dimension; raise precision");
    const mpfr_prec_t needed = digits_to_bits(2 * precision_digits);
    for (const Real* v : x)
        if (v->bits() < needed)
            throw Error("find_integer_relations: inputs must carry twice the working precision for re-verification");

    const int work = 2 * precision_digits;
    const Integer scale = power_of_ten(precision_digits - slack);
    const Real scale_real = pow10(precision_digits - slack, work);
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < r; ++i) {
        IntVector row(r + 2, Integer(0));
        row[i] = 1;
        row[r] = (x[i]->with_digits(work) * scale_real).round();
        row[r + 1] = scale;
        rows.push_back(std::move(row));
    }
    const Real reject = pow10(-precision_digits + slack, work);
    for (const auto& b : lll_reduce(std::move(rows))) {
        if (b[r + 1] != 0) continue;
        std::vector<Integer> c(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(r));
        const Real residual = combination(c, x, work);
        if (residual >= reject) continue;
        if (residual >= out.accept_threshold) {
            ++out.ambiguous;
            continue;
        }
        Integer norm(0);
        for (const auto& z : c) norm = std::max(norm, Integer(abs(z)));
        if (norm > h) {
            ++out.dropped_over_height;
            continue;
        }
        normalize_sign(c);
        IntegerRelation rel = split(c, lambdas.size());
        rel.residual = residual;
        out.relations.push_back(std::move(rel));
    }
    return out;
}

std::vector<IntegerRelation> find_integer_relations(const std::vector<Real>& lambdas, const std::vector<Real>& mus,
                                                    int height_bound, int precision_digits) {
    return search_integer_relations(lambdas, mus, height_bound, precision_digits).relations;
}

std::vector<IntegerRelation> exact_integer_relations(const std::vector<QuadNumber>& lambdas,
                                                     const std::vector<QuadNumber>& mus) {
    std::vector<const QuadNumber*> x;
    for (const auto& l : lambdas) x.push_back(&l);
    for (const auto& m : mus) x.push_back(&m);
    const std::size_t r = x.size();
    if (r == 0) return {};
    std::vector<Integer> radicals;
    for (const auto* v : x)
        if (v->b != 0 && std::find(radicals.begin(), radicals.end(), v->d) == radicals.end())
            radicals.push_back(v->d);
    Matrix<Rational> a(radicals.size() + 2, r);
    for (std::size_t j = 0; j < r; ++j) {
        a(0, j) = x[j]->a;
        for (std::size_t k = 0; k < radicals.size(); ++k)
            if (x[j]->b != 0 && x[j]->d == radicals[k]) a(k + 1, j) = x[j]->b;
        a(radicals.size() + 1, j) = 1;
    }
    std::vector<IntegerRelation> out;
    constexpr int digits = 60;
    for (auto c : integer_kernel(a)) {
        normalize_sign(c);
        IntegerRelation rel = split(c, lambdas.size());
        Real sum(0L, digits);
        for (std::size_t j = 0; j < r; ++j) sum += Real(Rational(c[j]), digits) * x[j]->to_real(digits);
        rel.residual = abs(sum);
        rel.exact = true;
        out.push_back(std::move(rel));
    }
    return out;
}

std::pair<bool, std::optional<IntegerRelation>> parity_verdict(const std::vector<IntegerRelation>& basis) {
    for (const auto& r : basis)
        if (r.m_sum_odd()) return {false, r};
    return {true, std::nullopt};
}

std::optional<IntegerRelation> odd_obstruction(const InvolutionInfo& inv, const PairClassification& cls) {
    const int n = inv.side_size;
    if (!inv.fixed_vertices.empty() || inv.fixed_edge_count != 0 || n % 2 == 0) return std::nullopt;
    if (!cls.vanishing_indices.empty() || !cls.strongly_cospectral()) return std::nullopt;
    if (static_cast<int>(cls.plus_indices.size()) != n || static_cast<int>(cls.minus_indices.size()) != n)
        return std::nullopt;
    IntegerRelation r;
    r.ell.assign(at(n), Integer(1));
    r.m.assign(at(n), Integer(-1));
    const auto& ev = cls.rotated.eigenvalues;
    Real sum(0L, cls.rotated.precision_digits);
    for (int i : cls.plus_indices) sum += ev[at(i)];
    for (int i : cls.minus_indices) sum -= ev[at(i)];
    r.residual = abs(sum);
    r.exact = true;
    return r;
}

const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::PgstConsistent: return "pgst_consistent";
        case Conclusion::NoPgst: return "no_pgst";
        case Conclusion::NotCospectral: return "not_cospectral";
        case Conclusion::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(CertificateKind k) { return k == CertificateKind::Exact ? "exact" : "heuristic"; }

PGSTVerdict certify(const Graph& g, const InvolutionInfo& inv, const Potential& q, int u, const CertifyOptions& opts) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n) throw Error("certify: vertex out of range");
    if (static_cast<int>(inv.sigma.size()) != n) throw Error("certify: involution does not match the graph");
    if (!inv.moves(u)) throw Error("certify: u is fixed by the involution");
    if (q.size() != n) throw Error("certify: potential size does not match the graph");
    if (!check_symmetric_potential(q, inv)) throw Error("certify: potential is not symmetric under the involution");
    const int p = opts.precision_digits;
    if (p < 30 || p > 200) throw Error("certify: precision must lie in [30, 200]");
    if (opts.height_bound < 1) throw Error("certify: height bound must be positive");
    if (!q.is_concrete() && !opts.q_value) throw Error("certify: potential is symbolic; supply a value for Q");
    const Potential concrete = q.is_concrete() ? q : q.substitute(*opts.q_value);

    PGSTVerdict out;
    out.u = u;
    out.v = inv.sigma[at(u)];
    out.height_bound = opts.height_bound;
    out.precision_digits = p;
    out.structural = structural_summary(g, inv, q, u);

    const Hamiltonian h = build_hamiltonian(g, concrete);
    out.trace_identities = trace_check(decompose(h, inv), concrete, inv);
    const Matrix<Rational> exact = h.concrete();
    const int work = 2 * p;
    const SpectralData s = eigendecompose(exact.map([&](const Rational& r) { return Real(r, work); }), work);
    const auto cls = classify_pair(s, u, out.v, pow10(-p / 2, work), &exact);

    out.strongly_cospectral = cls.strongly_cospectral();
    out.vanishing_count = static_cast<int>(cls.vanishing_indices.size());
    for (int i : cls.plus_indices) out.lambdas.push_back(s.eigenvalues[at(i)]);
    for (int i : cls.minus_indices) out.mus.push_back(s.eigenvalues[at(i)]);

    if (!out.strongly_cospectral) {
        out.conclusion = Conclusion::NotCospectral;
        const bool all_exact = std::all_of(cls.cospectral_failures.begin(), cls.cospectral_failures.end(), [&](int i) {
            return std::binary_search(cls.exact_indices.begin(), cls.exact_indices.end(), i);
        });
        out.certificate_kind = all_exact ? CertificateKind::Exact : CertificateKind::Heuristic;
        return out;
    }

    out.obstruction = odd_obstruction(inv, cls);
    const auto ex = exact_spectrum(exact, s);
    std::vector<int> idx = cls.plus_indices;
    idx.insert(idx.end(), cls.minus_indices.begin(), cls.minus_indices.end());

    if (ex && ex->all_quadratic) {
        std::vector<QuadNumber> lq, mq;
        for (int i : cls.plus_indices) lq.push_back(*ex->value[at(i)]);
        for (int i : cls.minus_indices) mq.push_back(*ex->value[at(i)]);
        out.relation_basis = exact_integer_relations(lq, mq);
        out.certificate_kind = CertificateKind::Exact;
        const auto [ok, witness] = parity_verdict(out.relation_basis);
        out.parity_ok = ok && !out.obstruction;
        if (!out.obstruction && witness) out.obstruction = witness;
        out.conclusion = out.obstruction ? Conclusion::NoPgst : Conclusion::PgstConsistent;
        return out;
    }

    const auto search = search_integer_relations(out.lambdas, out.mus, opts.height_bound, p);
    out.relation_basis = search.relations;
    out.dropped_over_height = search.dropped_over_height;
    out.ambiguous = search.ambiguous;
    if (ex)
        for (auto& rel : out.relation_basis) rel.exact = verify_exactly(rel.coefficients(), idx, *ex);
    const auto [ok, witness] = parity_verdict(out.relation_basis);
    out.parity_ok = ok && !out.obstruction;
    if (!out.obstruction && !ok) {
        const auto proved = std::find_if(out.relation_basis.begin(), out.relation_basis.end(),
                                         [](const IntegerRelation& r) { return r.m_sum_odd() && r.exact; });
        if (proved != out.relation_basis.end()) out.obstruction = *proved;
    }
    if (out.obstruction) {
        out.conclusion = Conclusion::NoPgst;
        out.certificate_kind = CertificateKind::Exact;
    } else if (!ok || search.dropped_over_height > 0 || search.ambiguous > 0) {
        out.conclusion = Conclusion::Inconclusive;
        out.certificate_kind = CertificateKind::Heuristic;
    } else {
        out.conclusion = Conclusion::PgstConsistent;
        out.certificate_kind = CertificateKind::Heuristic;
    }
    return out;
}

std::string relation_json(const IntegerRelation& r) { return relation_doc(r).dump(); }

std::string verdict_json(const PGSTVerdict& v) {
    nlohmann::ordered_json doc;
    doc["conclusion"] = to_string(v.conclusion);
    doc["u"] = v.u + 1;
    doc["v"] = v.v + 1;
    doc["strongly_cospectral"] = v.strongly_cospectral;
    doc["relations"] = nlohmann::ordered_json::array();
    for (const auto& r : v.relation_basis) doc["relations"].push_back(relation_doc(r));
    doc["parity_ok"] = v.parity_ok;
    doc["obstruction"] = v.obstruction ? relation_doc(*v.obstruction) : nlohmann::ordered_json(nullptr);
    doc["certificate"] = {{"kind", to_string(v.certificate_kind)},
                          {"height_bound", v.height_bound},
                          {"precision", v.precision_digits}};
    const auto tri = [](const std::optional<bool>& b) {
        return b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr);
    };
    doc["structural"] = {{"S_size", v.structural.s_size},
                         {"fixed_edges", v.structural.fixed_edges},
                         {"q_linear_irreducible_plus", tri(v.structural.q_linear_irreducible_plus)},
                         {"q_linear_irreducible_minus", tri(v.structural.q_linear_irreducible_minus)}};
    doc["trace_identities"] = v.trace_identities;
    doc["lambdas"] = nlohmann::ordered_json::array();
    for (const auto& x : v.lambdas) doc["lambdas"].push_back(x.to_string(v.precision_digits));
    doc["mus"] = nlohmann::ordered_json::array();
    for (const auto& x : v.mus) doc["mus"].push_back(x.to_string(v.precision_digits));
    doc["vanishing_count"] = v.vanishing_count;
    doc["dropped_over_height"] = v.dropped_over_height;
    doc["ambiguous"] = v.ambiguous;
    return doc.dump(2);
}

}  // namespace pgst
