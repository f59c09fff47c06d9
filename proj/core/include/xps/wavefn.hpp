#pragma once

#include <stdexcept>
#include <vector>

#include "xps/spectral_solver.hpp"

namespace xps {

enum class Regime { scattering, bound };

struct WaveFunctionSample {
    double x;
    cplx psi;
    Regime regime;
};

struct not_a_root : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// psi_E(omega) in the H0 eigenbasis: a regular part plus
// delta_coefficient * delta(E - omega)
struct SpectralPsi {
    cplx regular;
    double delta_coefficient;
};
// omega = E is excluded for scattering states; for bound states the
// removable limit is returned
SpectralPsi psi_spectral(const BoundarySpectrum& bs, double E, double omega,
                         const Tolerances& tol = default_tolerances());

// closed form for a smooth zero (1 + e^{2i theta(E_m)} = 0), a0 = b0 = sqrt 2:
// series below x = 1, integral representation above
cplx psi_bound_smooth(double E_m, double x);
std::vector<cplx> psi_bound_smooth_profile(double E_m, const std::vector<double>& xs, unsigned jobs = 1);

// principal value of int_{E_m - Lambda}^{E_m + Lambda} dw/(2 pi i) x^{-1/2 + iw}
// (a(-w) + b(-w))/(w - E_m), the bound-state constants A = -1, B = 1
cplx psi_bound_exact(const BoundarySpectrum& bs, double E_m, double x, double Lambda = 60.0);
// same, reusing the boundary samples across the x grid
std::vector<cplx> psi_bound_exact_profile(const BoundarySpectrum& bs, double E_m, const std::vector<double>& xs,
                                          double Lambda = 60.0, unsigned jobs = 1);
// sup |psi_Lambda - psi_{Lambda/2}| / sup |psi_Lambda| over xs
double lambda_sensitivity(const BoundarySpectrum& bs, double E_m, const std::vector<double>& xs,
                          double Lambda = 60.0, unsigned jobs = 1);

struct NormResult {
    double norm_quadrature = 0.0;   // int dw/pi Re F(w)/(w - E_m)^2
    double norm_density = 0.0;      // 4 pi n'(E_m)
    double norm_derivative = 0.0;   // -Im F'(E_m)
    double relative_gap = 0.0;      // |quadrature - density| / density
};
// throws not_a_root when |F(E_m)| > root_tol; L is the half-width of the
// explicit quadrature, the rest uses the mean value F_inf of Re F
NormResult bound_norm(const BoundarySpectrum& bs, double E_m, double root_tol = 1e-6, double L = 400.0,
                      const Tolerances& tol = default_tolerances());
// int dw/(2 pi) (F(w) + F(-w)) / ((w - E_1)(w - E_2))
double bound_overlap(const BoundarySpectrum& bs, double E1, double E2, double L = 400.0);

// F(E) - F_inf - int dw/(2 pi i) (F(w) - F_inf)/(w - E), Im E > 0. Needs the
// closed-form continuation, so trap and bk_smooth spectra only.
cplx dispersion_residual(const BoundarySpectrum& bs, cplx E, double L = 2000.0);

// value of F at +i infinity for the phase-type pairs: 1 + (a0 b0)^2/4
double jost_at_infinity(const BoundarySpectrum& bs);

// geometric from x_min to 1, then linear to x_max
std::vector<double> hybrid_grid(double x_min, double x_max, int n_geometric = 100, double dx = 0.02);

}  // namespace xps
