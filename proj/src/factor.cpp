#include "pgst/factor.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <span>
#include <string>

namespace pgst {

namespace {

// ---- polynomials over Z/p, p < 2^31, coefficients low degree first -------

using ModPoly = std::vector<std::int64_t>;

struct Zp {
    std::int64_t p;

    std::int64_t reduce(std::int64_t a) const {
        a %= p;
        return a < 0 ? a + p : a;
    }
    std::int64_t inverse(std::int64_t a) const {
        std::int64_t result = 1, base = reduce(a), e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }

    static void trim(ModPoly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    static int degree(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

    ModPoly sub(const ModPoly& a, const ModPoly& b) const {
        ModPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = reduce(r[i] - b[i]);
        trim(r);
        return r;
    }
    ModPoly add(const ModPoly& a, const ModPoly& b) const {
        ModPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
        trim(r);
        return r;
    }
    ModPoly mul(const ModPoly& a, const ModPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ModPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        trim(r);
        return r;
    }
    // Returns {quotient, remainder}; b must be nonzero.
    std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
        const int db = degree(b);
        if (degree(a) < db) return {{}, a};
        ModPoly q(static_cast<std::size_t>(degree(a) - db + 1), 0);
        const std::int64_t inv = inverse(b.back());
        for (int k = degree(a); k >= db; --k) {
            const std::int64_t f = a[static_cast<std::size_t>(k)] * inv % p;
            q[static_cast<std::size_t>(k - db)] = f;
            if (f == 0) continue;
            for (int j = 0; j <= db; ++j) {
                auto& c = a[static_cast<std::size_t>(k - db + j)];
                c = reduce(c - f * b[static_cast<std::size_t>(j)]);
            }
        }
        a.resize(static_cast<std::size_t>(db));
        trim(a);
        trim(q);
        return {q, a};
    }
    ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
    ModPoly monic(ModPoly a) const {
        if (a.empty()) return a;
        const std::int64_t inv = inverse(a.back());
        for (auto& c : a) c = c * inv % p;
        return a;
    }
    ModPoly gcd(ModPoly a, ModPoly b) const {
        while (!b.empty()) {
            ModPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    // s*a + t*b = 1 for coprime a, b.
    std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const {
        ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            auto [q, r] = divmod(r0, r1);
            ModPoly s2 = sub(s0, mul(q, s1));
            ModPoly t2 = sub(t0, mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 is a nonzero constant.
        const std::int64_t inv = inverse(r0[0]);
        for (auto& c : s0) c = c * inv % p;
        for (auto& c : t0) c = c * inv % p;
        return {s0, t0};
    }
    ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
        ModPoly result{1};
        base = rem(base, m);
        const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            result = rem(mul(result, result), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
        }
        return result;
    }
    ModPoly derivative(const ModPoly& a) const {
        ModPoly r;
        for (std::size_t i = 1; i < a.size(); ++i) r.push_back(reduce(static_cast<std::int64_t>(i) % p * a[i]));
        trim(r);
        return r;
    }
};

// Distinct-degree factorization of a monic square-free f: (product, degree) pairs.
std::vector<std::pair<ModPoly, int>> distinct_degree(const Zp& zp, ModPoly f) {
    std::vector<std::pair<ModPoly, int>> out;
    const ModPoly x{0, 1};
    ModPoly h = x;
    for (int d = 1; 2 * d <= Zp::degree(f); ++d) {
        h = zp.powmod(h, Integer(zp.p), f);
        ModPoly g = zp.gcd(f, zp.sub(h, x));
        if (Zp::degree(g) > 0) {
            out.emplace_back(g, d);
            f = zp.divmod(f, g).first;
            h = zp.rem(h, f);
        }
    }
    if (Zp::degree(f) > 0) out.emplace_back(zp.monic(f), Zp::degree(f));
    return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd).
void equal_degree(const Zp& zp, const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (Zp::degree(g) == d) {
        out.push_back(zp.monic(g));
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(zp.p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::int64_t> coeff(0, zp.p - 1);
    for (;;) {
        ModPoly a(static_cast<std::size_t>(Zp::degree(g)), 0);
        for (auto& c : a) c = coeff(rng);
        Zp::trim(a);
        if (Zp::degree(a) < 1) continue;
        ModPoly b = zp.sub(zp.powmod(a, e, g), ModPoly{1});
        ModPoly c = zp.gcd(g, b);
        if (Zp::degree(c) > 0 && Zp::degree(c) < Zp::degree(g)) {
            equal_degree(zp, c, d, rng, out);
            equal_degree(zp, zp.divmod(g, c).first, d, rng, out);
            return;
        }
    }
}

std::vector<ModPoly> factor_mod_p(const Zp& zp, const ModPoly& f) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(zp.p));
    std::vector<ModPoly> out;
    for (const auto& [g, d] : distinct_degree(zp, f)) equal_degree(zp, g, d, rng, out);
    return out;
}

// ---- integer polynomials ---------------------------------------------------

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

ZPoly zmod(ZPoly a, const Integer& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    trim(a);
    return a;
}

ModPoly to_mod(const ZPoly& a, const Zp& zp) {
    ModPoly r;
    for (const auto& c : a) {
        Integer t = c % zp.p;
        if (t < 0) t += zp.p;
        r.push_back(t.get_si());
    }
    Zp::trim(r);
    return r;
}

ZPoly from_mod(const ModPoly& a) {
    ZPoly r;
    for (auto c : a) r.emplace_back(static_cast<long>(c));
    return r;
}

// Exact division of monic integer polynomials; nullopt if b does not divide a.
std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& b) {
    const int da = static_cast<int>(a.size()) - 1;
    const int db = static_cast<int>(b.size()) - 1;
    if (da < db) return std::nullopt;
    ZPoly r = a;
    ZPoly q(static_cast<std::size_t>(da - db + 1), Integer(0));
    for (int k = da; k >= db; --k) {
        const Integer f = r[static_cast<std::size_t>(k)];  // b is monic
        q[static_cast<std::size_t>(k - db)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b[static_cast<std::size_t>(j)];
    }
    for (int k = 0; k < db; ++k)
        if (r[static_cast<std::size_t>(k)] != 0) return std::nullopt;
    return q;
}

// Lifts F = g*h (mod p), all monic, to F = G*H (mod p^k).
std::pair<ZPoly, ZPoly> hensel_two(const ZPoly& F, const ModPoly& g, const ModPoly& h, const Zp& zp, int k) {
    const auto [s, t] = zp.bezout(g, h);
    ZPoly G = from_mod(g), H = from_mod(h);
    Integer pj = zp.p;
    for (int j = 1; j < k; ++j) {
        ZPoly diff = F;
        const ZPoly gh = zmul(G, H);
        diff.resize(std::max(diff.size(), gh.size()), Integer(0));
        for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
        for (auto& c : diff) c /= pj;  // exact: F = G*H mod p^j
        trim(diff);
        const ModPoly e = to_mod(diff, zp);
        auto [q, dg] = zp.divmod(zp.mul(t, e), g);
        const ModPoly dh = zp.add(zp.mul(s, e), zp.mul(q, h));
        for (std::size_t i = 0; i < dg.size(); ++i) G[i] += pj * dg[i];
        for (std::size_t i = 0; i < dh.size(); ++i) H[i] += pj * dh[i];
        pj *= zp.p;
    }
    return {zmod(G, pj), zmod(H, pj)};
}

void hensel_multi(const ZPoly& F, std::span<const ModPoly> factors, const Zp& zp, int k, const Integer& pk,
                  std::vector<ZPoly>& out) {
    if (factors.size() == 1) {
        out.push_back(zmod(F, pk));
        return;
    }
    const std::size_t half = factors.size() / 2;
    ModPoly g{1}, h{1};
    for (std::size_t i = 0; i < half; ++i) g = zp.mul(g, factors[i]);
    for (std::size_t i = half; i < factors.size(); ++i) h = zp.mul(h, factors[i]);
    auto [G, H] = hensel_two(F, g, h, zp, k);
    hensel_multi(G, factors.subspan(0, half), zp, k, pk, out);
    hensel_multi(H, factors.subspan(half), zp, k, pk, out);
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Factors a monic square-free integer polynomial into monic irreducibles.
std::vector<ZPoly> factor_monic_squarefree(ZPoly F) {
    const int d = static_cast<int>(F.size()) - 1;
    if (d <= 1) return {F};

    // Pick the good prime (F mod p square-free) with the fewest modular factors.
    std::optional<Zp> best;
    std::vector<ModPoly> best_factors;
    int good_primes = 0;
    for (std::uint32_t p = 3; good_primes < 6; p += 2) {
        if (!is_prime(p)) continue;
        const Zp zp{p};
        const ModPoly f = to_mod(F, zp);
        if (Zp::degree(zp.gcd(f, zp.derivative(f))) != 0) continue;
        ++good_primes;
        auto facs = factor_mod_p(zp, f);
        if (!best || facs.size() < best_factors.size()) {
            best = zp;
            best_factors = std::move(facs);
        }
        if (best_factors.size() == 1) break;
    }
    if (best_factors.size() == 1) return {F};
    const Zp zp = *best;

    // Mignotte: any factor's coefficients are below 2^d * ||F||_2.
    Integer norm2(0);
    for (const auto& c : F) norm2 += c * c;
    Integer bound = sqrt(norm2) + 1;
    bound <<= static_cast<unsigned>(d);
    bound = 2 * bound + 1;
    int k = 1;
    Integer pk = zp.p;
    while (pk <= bound) {
        pk *= zp.p;
        ++k;
    }

    std::vector<ZPoly> lifted;
    hensel_multi(F, best_factors, zp, k, pk, lifted);

    // Zassenhaus recombination over subsets of increasing size.
    const Integer half_pk = pk / 2;
    std::vector<ZPoly> result;
    std::vector<ZPoly> remaining = std::move(lifted);
    std::size_t size = 1;
    while (2 * size <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            ZPoly prod{Integer(1)};
            for (auto i : pick) prod = zmod(zmul(prod, remaining[i]), pk);
            for (auto& c : prod)
                if (c > half_pk) c -= pk;
            if (auto quo = zdiv_exact(F, prod)) {
                result.push_back(prod);
                F = std::move(*quo);
                std::vector<ZPoly> rest;
                for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
                    if (j < pick.size() && pick[j] == i) {
                        ++j;
                        continue;
                    }
                    rest.push_back(std::move(remaining[i]));
                }
                remaining = std::move(rest);
                found = true;
                break;
            }
            // next combination
            std::size_t i = size;
            while (i-- > 0 && pick[i] == remaining.size() - size + i) {}
            if (i == static_cast<std::size_t>(-1)) break;
            ++pick[i];
            for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (F.size() > 1) result.push_back(F);
    return result;
}

// The distinct monic irreducible factors of a monic square-free rational polynomial.
std::vector<RatPoly> factor_squarefree(const RatPoly& g) {
    if (g.degree() <= 1) return {g};
    // Primitive integer version with positive leading coefficient.
    Integer den(1);
    for (const auto& c : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly f;
    for (const auto& c : g.coeffs()) f.push_back(c.get_num() * (den / c.get_den()));
    Integer content(0);
    for (const auto& c : f) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    for (auto& c : f) c /= content;

    // Monic transform: G(y) = a^(d-1) F(y/a) with a = lc(F).
    const int d = g.degree();
    const Integer a = f.back();
    ZPoly G(f.size());
    Integer power(1);
    for (int i = d; i >= 0; --i) {
        G[static_cast<std::size_t>(i)] = i == d ? Integer(1) : f[static_cast<std::size_t>(i)] * power;
        if (i < d) power *= a;
    }

    std::vector<RatPoly> out;
    for (const ZPoly& h : factor_monic_squarefree(std::move(G))) {
        // Back-substitute y = a x and make monic over Q.
        std::vector<Rational> v;
        Integer apow(1);
        for (const auto& c : h) {
            v.emplace_back(c * apow);
            apow *= a;
        }
        out.push_back(monic(RatPoly(std::move(v))));
    }
    return out;
}

bool poly_less(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        const Rational& x = a.coeffs()[static_cast<std::size_t>(k)];
        const Rational& y = b.coeffs()[static_cast<std::size_t>(k)];
        if (x != y) return x < y;
    }
    return false;
}

}  // namespace

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& a) {
    if (a.is_zero()) throw Error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<RatPoly, int>> out;
    const RatPoly f = monic(a);
    if (f.degree() == 0) return out;
    const RatPoly df = derivative(f);
    const RatPoly c = poly_gcd(f, df);
    RatPoly w = divmod(f, c).first;
    RatPoly y = divmod(df, c).first;
    RatPoly z = y - derivative(w);
    for (int i = 1; w.degree() > 0; ++i) {
        const RatPoly g = poly_gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = divmod(w, g).first;
        y = divmod(z, g).first;
        z = y - derivative(w);
    }
    return out;
}

Factorization factor_over_rationals(const RatPoly& a, int degree_limit) {
    if (a.is_zero()) throw Error("factor_over_rationals: zero polynomial");
    if (a.degree() > degree_limit)
        throw Error("factor_over_rationals: degree " + std::to_string(a.degree()) + " exceeds the limit of " +
                    std::to_string(degree_limit) + "; use an irreducible-mod-p certificate instead");
    Factorization out{a.leading(), {}};
    for (const auto& [part, mult] : squarefree_decomposition(a))
        for (RatPoly& f : factor_squarefree(part)) out.factors.emplace_back(std::move(f), mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    return out;
}

RatPoly expand(const Factorization& f) {
    RatPoly out = RatPoly::constant(f.unit);
    for (const auto& [poly, mult] : f.factors)
        for (int i = 0; i < mult; ++i) out = out * poly;
    return out;
}

bool irreducible_mod_prime(const RatPoly& f, std::uint32_t p) {
    if (p < 3 || !is_prime(p)) throw Error("irreducible_mod_prime: p must be an odd prime");
    const Zp zp{p};
    ModPoly m;
    for (const auto& c : f.coeffs()) {
        Integer den = c.get_den() % p;
        if (den == 0) return false;
        Integer num = c.get_num() % p;
        if (num < 0) num += p;
        m.push_back(num.get_si() * zp.inverse(den.get_si()) % zp.p);
    }
    Zp::trim(m);
    if (Zp::degree(m) != f.degree() || f.degree() < 1) return false;
    m = zp.monic(m);
    if (Zp::degree(zp.gcd(m, zp.derivative(m))) != 0) return false;
    const auto parts = distinct_degree(zp, m);
    return parts.size() == 1 && parts.front().second == f.degree();
}

}  // namespace pgst
