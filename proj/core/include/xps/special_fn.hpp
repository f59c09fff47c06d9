#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

#include "xps/tolerances.hpp"

namespace xps {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class Parity { plus, minus };

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// theta is the continuous branch; theta = wrap(theta) + 2*pi*branch_index
struct PhaseValue {
    double theta = 0.0;
    long branch_index = 0;
};

// Principal branch of log Gamma, cut along the negative real axis.
cplx log_gamma(cplx z);
cplx digamma(cplx z);
cplx trigamma(cplx z);

// Riemann-Siegel type phase Im log Gamma(1/4 + iE/2) - (E/2) log pi,
// with 3/4 in place of 1/4 for the odd parity.
double theta(double E, Parity eta = Parity::plus);
PhaseValue theta_pm(double E, Parity eta);
double theta_prime(double E, Parity eta = Parity::plus);
double theta_second(double E, Parity eta = Parity::plus);
double theta_asymptotic(double E);

// analytic continuation of theta and of exp(2 i theta) off the real line
cplx theta_complex(cplx E, Parity eta = Parity::plus);
cplx phase_factor(cplx E, Parity eta = Parity::plus);

// 1F2(a; b1, b2; x) by direct summation (compensated).
cplx hyp1f2(cplx a, cplx b1, cplx b2, cplx x, const Tolerances& tol = default_tolerances());

// exp(2 i theta) = omega_plus + omega_minus; omega_minus carries all the
// upper-half-plane poles and decays like 1/E on the real line.
cplx omega_minus(cplx E, Parity eta = Parity::plus);
cplx omega_plus(cplx E, Parity eta = Parity::plus);

struct ErfcResult {
    cplx value;
    bool in_region = true;   // false outside |z| <= 50 or on overflow
};
ErfcResult erfc_checked(cplx z);
cplx erfc(cplx z);

// ---- principal value (Hilbert) quadrature ----

enum class TailModel {
    none,        // window only
    inverse_t,   // g ~ c + d/u beyond the window, fitted from edge samples
    rotate       // tails rotated into a half plane via a complex extension
};

struct HilbertOptions {
    double window = 40.0;
    double panel = 1.0;   // Gauss-Legendre panel width in energy units
    TailModel tail = TailModel::inverse_t;
    // for TailModel::rotate: g continued off the axis, and which half plane
    // it is analytic and decaying in (+1 upper, -1 lower)
    std::function<cplx(cplx)> extension;
    int half_plane = +1;
};

struct nonfinite_sample : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// the 1/t tail fit found different constants on the two sides, so the
// principal value does not converge at infinity
struct tail_divergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// P int dt/(pi i) g(t)/(t - E)
cplx hilbert_pv(const std::function<cplx(double)>& g, double E,
                const HilbertOptions& opt = {});

// Fixed-order Gauss-Legendre on [a,b] split into panels of width <= h.
cplx gauss_panels(const std::function<cplx(double)>& f, double a, double b, double h);
// int_0^inf f(s) ds via s = L u/(1-u)
cplx gauss_semi_infinite(const std::function<cplx(double)>& f, double L, int panels = 48);

}  // namespace xps
