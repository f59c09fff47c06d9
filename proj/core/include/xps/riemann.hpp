#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "xps/spectral_solver.hpp"

namespace xps {

enum class Truncation { rs_main, bk_smoothed };

struct RiemannConfig {
    Parity eta = Parity::plus;
    int epsilon = 1;                 // sign of a0 b0
    double a0 = 1.4142135623730951;
    double b0 = 1.4142135623730951;
    double l_x = 1.0;
    double l_p = kTwoPi;
    Truncation truncation = Truncation::rs_main;
    double K = 4.0;                  // smoothing width for bk_smoothed
};

RiemannConfig canonical_config(Truncation t = Truncation::rs_main, double K = 4.0);
void validate(const RiemannConfig& cfg);

struct FTValue {
    cplx f;
    double rho = 0.0;    // |f|
    double n_fl = 0.0;   // arg f / pi; principal unless produced by unwind_nfl
};

struct f_zero_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int nu(double t);

// Riemann-Siegel main sum plus the leading t^{-1/4} correction term
double z_rs_main(double t);
// 2 Re(e^{i theta} f(t)) for the configured truncation
double z_value(const RiemannConfig& cfg, double t);

// sum_{n <= nu(t)} n^{-1/2 - it}
cplx f_main(double t);
// f_main plus half the first Riemann-Siegel correction, so that
// 2 Re(e^{i theta} f) reproduces z_rs_main. Defined for all t != 0; for
// |t| < 2 pi only the correction survives and f/|f| = -e^{-i theta}.
cplx f_rs(double t);
// sum beta_n n^{-1/2 - it} with the first-order Berry-Keating weights;
// n_max = 0 picks the cutoff where |beta_n| < 1e-12
struct BkSum {
    cplx f;
    int n_max = 0;
    bool truncation_warning = false;   // weight at the cutoff still above the floor
};
BkSum f_bk_sum(double t, double K, int n_max = 0, const Tolerances& tol = default_tolerances());
cplx bk_weight(int n, double t, double K);

FTValue f_truncated(double t);                       // pure main sum
FTValue f_bk_smoothed(double t, double K, int n_max = 0);
// the f used by cfg (f(-t) = conj f(t))
cplx f_of(const RiemannConfig& cfg, double t);

// 2(1 + eps e^{2i theta} f/f(-t)) in the general coupling form
// 1 + (a0 b0/2)^2 + a0 b0 e^{2i theta} f(t)/f(-t)
cplx jost_riemann(const RiemannConfig& cfg, double t);
// f(-t) F(t) / 2, which approximates zeta(1/2 - it) for the canonical couplings
cplx zeta_factorized(const RiemannConfig& cfg, double t);

// boundary pair with e^{i pi n_fl} = f/|f|; defaults to the f of cfg, with
// the nu = 0 phase -e^{-i theta} on |t| <= 2 pi so the pair covers the line
BoundarySpectrum riemann_boundary(const RiemannConfig& cfg,
                                  std::function<cplx(double)> f_provider = {});

enum class JumpKind { nu_increment, axis_crossing };
struct PhaseJump {
    double t;
    JumpKind kind;
    double delta;   // change of the continuous n_fl across the step
};

struct NflCurve {
    std::vector<double> t;
    std::vector<FTValue> values;   // n_fl continuous
    std::vector<PhaseJump> jumps;
};

// Continuous-branch n_fl on an increasing grid of positive energies. The
// rs branch starts from the principal value just above 2 pi; the bk branch
// is tied to the rs branch at min(first grid point, 20). Internal steps never
// exceed tol.phase_step; f is evaluated in parallel, unwound sequentially.
NflCurve unwind_nfl(const RiemannConfig& cfg, const std::vector<double>& grid, unsigned jobs = 1,
                    const Tolerances& tol = default_tolerances());

double count_qm(const RiemannConfig& cfg, double t);

// zeros of z_rs_main (or z for the truncation given) located by sign changes
// on a 0.01 grid from 2 pi, polished by bracketing. The smoothed sum is
// costly below t ~ 10 (tens of thousands of terms), hence jobs.
std::vector<double> z_zeros(double t_max, Truncation trunc = Truncation::rs_main, double K = 4.0,
                            double step = 0.01, unsigned jobs = 1);
// staircase count of the zeros in (0, t]
double count_riemann(const std::vector<double>& zeros, double t);

struct NflExact {
    double value = 0.0;
    bool near_zero = false;   // within 1e-4 of a zero ordinate
};
// N_R(t) - theta/pi - 1, the fluctuating part of the zero count
NflExact n_fl_exact(const std::vector<double>& zeros, double t);

// prod_{p <= nu(t)} (1 - p^{-1/2 - it})^{-1}
cplx euler_truncated(double t);

}  // namespace xps
