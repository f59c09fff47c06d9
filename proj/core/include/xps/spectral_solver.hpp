#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "xps/special_fn.hpp"

namespace xps {

enum class SpectrumKind { trap, bk_smooth, riemann_exact, custom };

// How the solution constants are normalised at a zero of F.
//   overlap:       A = S_aa, B = 1 + S_ab
//   antisymmetric: A = -1,   B = 1 (valid when S_aa = S_bb = 1, S_ba = 0)
enum class BoundConvention { overlap, antisymmetric };

// Mellin-space boundary pair a^(E), b^(E). Immutable once built; all the
// callables are pure.
struct BoundarySpectrum {
    SpectrumKind kind = SpectrumKind::custom;
    std::function<cplx(double)> a_hat;
    std::function<cplx(double)> b_hat;
    // a^(E) b^(-E) is analytic and vanishing in the upper half plane, so
    // S_ab = a^(E) b^(-E) and S_ba = 0 without quadrature
    bool analytic_upper = false;
    BoundConvention convention = BoundConvention::overlap;

    double a0 = 0.0, b0 = 0.0;
    double q_a = 0.0, q_b = 0.0;           // trap
    double l_x = 1.0, l_p = kTwoPi;        // bk_smooth, riemann_exact
    Parity eta = Parity::plus;

    HilbertOptions quadrature;             // used when no closed form applies
};

BoundarySpectrum make_trap(double a0, double b0, double q_a, double q_b);
// analytic_upper = false gives the honest Omega+- Jost function; true is the
// idealised phase-type pair whose zeros are exactly those of 1 + eps e^{2i theta}
BoundarySpectrum make_bk_smooth(double a0, double b0, double l_x = 1.0, double l_p = kTwoPi,
                                Parity eta = Parity::plus, bool analytic_upper = false);
BoundarySpectrum make_custom(std::function<cplx(double)> a_hat, std::function<cplx(double)> b_hat,
                             bool analytic_upper = false);

// max |f^(-E) - conj f^(E)| over the grid, for both members of the pair
double reality_defect(const BoundarySpectrum& bs, const std::vector<double>& grid);

struct SMatrixEntries {
    cplx s_aa, s_ab, s_ba, s_bb;
};

struct JostEvaluation {
    double E = 0.0;
    cplx F, F_neg;
    cplx A, B;
    cplx C0, C_inf;
    SMatrixEntries s;
    bool bound = false;
};

struct BoundState {
    double E;
    double residual;   // |F(E)|
};

struct bound_state_energy : std::domain_error {
    using std::domain_error::domain_error;
};

// (1/2)[f^(E) g^(-E) + P int dE'/(pi i) f^(E') g^(-E') / (E' - E)]
cplx s_integral(const std::function<cplx(double)>& f_hat, const std::function<cplx(double)>& g_hat,
                double E, const HilbertOptions& opt = {});

SMatrixEntries s_matrix(const BoundarySpectrum& bs, double E);
cplx jost_F(const BoundarySpectrum& bs, double E);
// continuation off the real axis; closed-form kinds only (trap, bk_smooth)
cplx jost_F_complex(const BoundarySpectrum& bs, cplx E);
JostEvaluation jost(const BoundarySpectrum& bs, double E,
                    const Tolerances& tol = default_tolerances());

// level-spacing heuristic 2 pi / log E_max, refined twentyfold for the scan
double default_scan_step(double E_max);

std::vector<BoundState> find_bound_states(const BoundarySpectrum& bs, double E_min, double E_max,
                                          double grid_step = 0.0, double accept_tol = 1e-8,
                                          unsigned jobs = 1);

double scattering_phase(const BoundarySpectrum& bs, double E,
                        const Tolerances& tol = default_tolerances());
// phase unwound along an increasing grid
std::vector<double> scattering_phase_curve(const BoundarySpectrum& bs,
                                           const std::vector<double>& grid);

// winding number of F around the rectangle [re0, re1] x [im0, im1]
int winding_number(const BoundarySpectrum& bs, double re0, double re1, double im0, double im1,
                   int samples_per_side = 400);

cplx trap_wavefunction(double a0, double b0, double q_a, double q_b, double E, double x,
                       const Tolerances& tol = default_tolerances());

}  // namespace xps
