#pragma once

#include "pgst/numeric.hpp"
#include "pgst/spectral.hpp"

#include <ostream>
#include <vector>

namespace pgst {

struct ComplexReal {
    Real re;
    Real im;
};

/// U(t) = sum_i e^{i t lambda_i} x_i x_i^T at the precision of s.
Matrix<ComplexReal> unitary_at(const SpectralData& s, const Real& t);

/// |U(t)_{u,v}| from the spectral sum. Phases t*lambda are reduced mod 2 pi at
/// the precision of s before dropping to double.
class FidelityEvaluator {
  public:
    FidelityEvaluator(const SpectralData& s, int u, int v);
    double operator()(double t) const;
    /// Largest minus smallest eigenvalue carrying weight at (u, v).
    double spread() const { return spread_; }

  private:
    std::vector<Real> lambdas_;
    std::vector<double> weights_;
    int digits_;
    double spread_ = 0;
};

double fidelity(const SpectralData& s, int u, int v, double t);

struct TransferTime {
    double t = 0;
    double fidelity = 0;
    /// fidelity >= 1 - epsilon; otherwise (t, fidelity) is the best seen.
    bool reached = false;
};

/// Scans [0, t_max] at step pi / (4 * spread), refines each sampled local
/// maximum by golden-section search in time order and stops at the first one
/// reaching 1 - epsilon. Throws Error unless 0 < epsilon < 1 and t_max > 0.
TransferTime search_transfer_time(const SpectralData& s, int u, int v, double epsilon, double t_max);

struct FidelityTrace {
    int u = 0;
    int v = 0;
    std::vector<double> times;
    std::vector<double> fidelities;
    double best_t = 0;
    double best_fidelity = 0;
};

/// Throws Error if the grid is empty or not ascending.
FidelityTrace fidelity_trace(const SpectralData& s, int u, int v, const std::vector<double>& grid);

/// 0, dt, 2 dt, ... up to and including t_max.
std::vector<double> uniform_grid(double t_max, double dt);

/// Header "t,fidelity", values with 17 significant digits.
void write_fidelity_csv(std::ostream& out, const FidelityTrace& trace);

}  // namespace pgst
