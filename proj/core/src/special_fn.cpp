#include "xps/special_fn.hpp"

#include <array>
#include <cmath>
#include <string>

#include "detail.hpp"

namespace xps {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.918938533204672741780329736406;
constexpr double kLogPi = 1.144729885849400174143427351353;

const cplx I(0.0, 1.0);

// Re z >= 1/2 only. Every log here has a positive-real-part argument, so the
// result is the principal branch.
cplx lanczos_log_gamma(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    const cplx t = z + (kLanczosG + 0.5);
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

bool at_pole(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// exp(2 pi i z) or exp(-2 pi i z), whichever is bounded by one
cplx small_exp(cplx z, bool& upper) {
    upper = z.imag() >= 0.0;
    return upper ? std::exp(2.0 * kPi * I * z) : std::exp(-2.0 * kPi * I * z);
}

cplx cot_pi(cplx z) {
    bool up;
    const cplx w = small_exp(z, up);
    const cplx r = (w + 1.0) / (w - 1.0);
    return up ? I * r : -I * r;
}

cplx inv_sin2_pi(cplx z) {
    bool up;
    const cplx w = small_exp(z, up);
    return -4.0 * w / ((w - 1.0) * (w - 1.0));
}

// log sin(pi z) modulo 2 pi i, without overflow for large |Im z|
cplx log_sin_pi(cplx z) {
    bool up;
    const cplx w = small_exp(z, up);
    // sin(pi z) = exp(-+ i pi z) (w - 1) / (+- 2i)
    if (up) return -I * kPi * z + std::log(w - 1.0) - std::log(2.0 * I);
    return I * kPi * z + std::log(1.0 - w) - std::log(2.0 * I);
}

cplx a_of(Parity eta) { return eta == Parity::plus ? 0.25 : 0.75; }

}  // namespace

cplx log_gamma(cplx z) {
    if (at_pole(z))
        throw pole_error("log_gamma: pole at z = " + std::to_string(z.real()));
    if (z.real() >= 0.5) return lanczos_log_gamma(z);

    const int n = static_cast<int>(std::ceil(0.5 - z.real()));
    if (z.real() > -8.0) {
        // upward recurrence; each log(z+k) is analytic off the negative axis,
        // which is where the principal log Gamma has its cut too
        cplx acc = 0.0;
        for (int k = 0; k < n; ++k) acc += std::log(z + double(k));
        return lanczos_log_gamma(z + double(n)) - acc;
    }

    cplx v = kLogPi - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
    // reflection fixes the value only mod 2 pi i; the arg sum fixes the sheet
    double im = lanczos_log_gamma(z + double(n)).imag();
    for (int k = 0; k < n; ++k) im -= std::arg(z + double(k));
    const double wind = std::round((im - v.imag()) / kTwoPi);
    return {v.real(), v.imag() + kTwoPi * wind};
}

cplx digamma(cplx z) {
    if (at_pole(z)) throw pole_error("digamma: pole");
    if (z.real() < 0.5) return digamma(1.0 - z) - kPi * cot_pi(z);
    cplx acc = 0.0;
    while (std::abs(z) < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    const cplx r2 = 1.0 / (z * z);
    // B_{2k}/(2k)
    static constexpr std::array<double, 7> c = {1.0 / 12,  -1.0 / 120,         1.0 / 252, -1.0 / 240,
                                                1.0 / 132, -691.0 / 32760.0, 1.0 / 12};
    cplx s = 0.0, p = r2;
    for (double ck : c) {
        s += ck * p;
        p *= r2;
    }
    return acc + std::log(z) - 0.5 / z - s;
}

cplx trigamma(cplx z) {
    if (at_pole(z)) throw pole_error("trigamma: pole");
    if (z.real() < 0.5) return kPi * kPi * inv_sin2_pi(z) - trigamma(1.0 - z);
    cplx acc = 0.0;
    while (std::abs(z) < 10.0) {
        acc += 1.0 / (z * z);
        z += 1.0;
    }
    const cplx r = 1.0 / z, r2 = r * r;
    static constexpr std::array<double, 7> b = {1.0 / 6,  -1.0 / 30,         1.0 / 42, -1.0 / 30,
                                                5.0 / 66, -691.0 / 2730.0, 7.0 / 6};
    cplx s = 0.0, p = r2 * r;
    for (double bk : b) {
        s += bk * p;
        p *= r2;
    }
    return acc + r + 0.5 * r2 + s;
}

double theta(double E, Parity eta) {
    return log_gamma(a_of(eta) + 0.5 * I * E).imag() - 0.5 * E * kLogPi;
}

PhaseValue theta_pm(double E, Parity eta) {
    PhaseValue v;
    v.theta = theta(E, eta);
    v.branch_index = std::lround((v.theta - detail::wrap_pi(v.theta)) / kTwoPi);
    return v;
}

double theta_prime(double E, Parity eta) {
    return 0.5 * digamma(a_of(eta) + 0.5 * I * E).real() - 0.5 * kLogPi;
}

double theta_second(double E, Parity eta) {
    return -0.25 * trigamma(a_of(eta) + 0.5 * I * E).imag();
}

double theta_asymptotic(double E) {
    if (!(E > 0.0)) throw std::domain_error("theta_asymptotic: E must be positive");
    return 0.5 * E * std::log(E / kTwoPi) - 0.5 * E - kPi / 8.0;
}

cplx theta_complex(cplx E, Parity eta) {
    const cplx a = a_of(eta);
    return (log_gamma(a + 0.5 * I * E) - log_gamma(a - 0.5 * I * E)) / (2.0 * I) -
           0.5 * E * kLogPi;
}

cplx phase_factor(cplx E, Parity eta) {
    const cplx a = a_of(eta);
    return std::exp(log_gamma(a + 0.5 * I * E) - log_gamma(a - 0.5 * I * E) - I * E * kLogPi);
}

cplx hyp1f2(cplx a, cplx b1, cplx b2, cplx x, const Tolerances& tol) {
    detail::CompensatedSum s;
    cplx term = 1.0;
    s.add(term);
    const double past_peak = std::sqrt(std::abs(x)) + 1.0;
    for (int n = 0; n < tol.series_cap; ++n) {
        const double dn = n;
        term *= (a + dn) / ((b1 + dn) * (b2 + dn) * (dn + 1.0)) * x;
        s.add(term);
        if (dn + 1.0 > past_peak && std::abs(term) <= tol.series_ratio * std::abs(s.value()))
            break;
    }
    return s.value();
}

cplx omega_minus(cplx E, Parity eta) {
    const double pi2 = kPi * kPi;
    if (eta == Parity::plus) {
        const cplx a = 0.25 + 0.5 * I * E;
        return hyp1f2(a, 0.5, a + 1.0, -pi2) / a;
    }
    const cplx a = 0.75 + 0.5 * I * E;
    return kTwoPi / a * hyp1f2(a, 1.5, a + 1.0, -pi2);
}

cplx omega_plus(cplx E, Parity eta) { return phase_factor(E, eta) - omega_minus(E, eta); }

}  // namespace xps
