#include "pgst/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace pgst {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void check_pair(const SpectralData& s, int u, int v) {
    if (u < 0 || v < 0 || u >= s.dimension() || v >= s.dimension()) throw Error("fidelity: vertex out of range");
}

// Maximum of f on [a, b] by golden-section search.
std::pair<double, double> golden_max(const FidelityEvaluator& f, double a, double b) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, std::abs(b)); ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace

Matrix<ComplexReal> unitary_at(const SpectralData& s, const Real& t) {
    const int n = s.dimension();
    const int digits = s.precision_digits;
    Matrix<ComplexReal> u(at(n), at(n), ComplexReal{Real(0L, digits), Real(0L, digits)});
    for (int i = 0; i < n; ++i) {
        const Real phase = reduce_angle(t.with_digits(digits) * s.eigenvalues[at(i)]);
        const Real c = cos(phase), sn = sin(phase);
        const auto& x = s.eigenvectors[at(i)];
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const Real w = x[at(a)] * x[at(b)];
                u(at(a), at(b)).re += c * w;
                u(at(a), at(b)).im += sn * w;
            }
    }
    return u;
}

FidelityEvaluator::FidelityEvaluator(const SpectralData& s, int u, int v) : digits_(s.precision_digits) {
    check_pair(s, u, v);
    double lo = 0, hi = 0;
    for (int i = 0; i < s.dimension(); ++i) {
        const double w = (s.eigenvectors[at(i)][at(u)] * s.eigenvectors[at(i)][at(v)]).to_double();
        if (std::abs(w) < 1e-30) continue;
        const double l = s.eigenvalues[at(i)].to_double();
        if (weights_.empty()) lo = hi = l;
        lo = std::min(lo, l);
        hi = std::max(hi, l);
        lambdas_.push_back(s.eigenvalues[at(i)]);
        weights_.push_back(w);
    }
    spread_ = hi - lo;
}

double FidelityEvaluator::operator()(double t) const {
    const Real time(t, digits_);
    double re = 0, im = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        const double phase = reduce_angle(time * lambdas_[i]).to_double();
        re += weights_[i] * std::cos(phase);
        im += weights_[i] * std::sin(phase);
    }
    return std::hypot(re, im);
}

double fidelity(const SpectralData& s, int u, int v, double t) { return FidelityEvaluator(s, u, v)(t); }

TransferTime search_transfer_time(const SpectralData& s, int u, int v, double epsilon, double t_max) {
    if (!(epsilon > 0 && epsilon < 1)) throw Error("search_transfer_time: epsilon must lie in (0, 1)");
    if (!(t_max > 0) || !std::isfinite(t_max)) throw Error("search_transfer_time: t_max must be positive");
    const FidelityEvaluator f(s, u, v);
    const double target = 1 - epsilon;
    const double step = std::numbers::pi / (4 * std::max(f.spread(), 1e-9));
    const auto count = static_cast<long>(std::floor(t_max / step));

    TransferTime best{0, f(0), false};
    if (best.fidelity >= target) return {0, best.fidelity, true};
    const auto time_at = [&](long k) { return std::min(t_max, static_cast<double>(k) * step); };
    double prev = best.fidelity, cur = f(time_at(1));
    for (long k = 1; k <= count + 1; ++k) {
        const double t = time_at(k);
        const double next = k <= count ? f(time_at(k + 1)) : -1.0;
        if (cur >= prev && cur >= next) {
            auto [tm, fm] = golden_max(f, time_at(k - 1), k <= count ? time_at(k + 1) : t);
            if (cur > fm) {
                tm = t;
                fm = cur;
            }
            if (fm > best.fidelity) best = {tm, fm, false};
            if (fm >= target) return {tm, fm, true};
        }
        if (t >= t_max) break;
        prev = cur;
        cur = next;
    }
    return best;
}

FidelityTrace fidelity_trace(const SpectralData& s, int u, int v, const std::vector<double>& grid) {
    if (grid.empty()) throw Error("fidelity_trace: empty time grid");
    if (!std::is_sorted(grid.begin(), grid.end())) throw Error("fidelity_trace: time grid must be ascending");
    const FidelityEvaluator f(s, u, v);
    FidelityTrace out;
    out.u = u;
    out.v = v;
    out.times = grid;
    for (double t : grid) {
        out.fidelities.push_back(f(t));
        if (out.fidelities.size() == 1 || out.fidelities.back() > out.best_fidelity) {
            out.best_t = t;
            out.best_fidelity = out.fidelities.back();
        }
    }
    return out;
}

std::vector<double> uniform_grid(double t_max, double dt) {
    if (!(dt > 0) || !(t_max >= 0)) throw Error("uniform_grid: need dt > 0 and t_max >= 0");
    std::vector<double> out;
    const auto count = static_cast<long>(std::floor(t_max / dt + 1e-9));
    for (long k = 0; k <= count; ++k) out.push_back(static_cast<double>(k) * dt);
    return out;
}

void write_fidelity_csv(std::ostream& out, const FidelityTrace& trace) {
    out << "t,fidelity\n";
    char buf[64];
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", trace.times[i], trace.fidelities[i]);
        out << buf;
    }
}

}  // namespace pgst
