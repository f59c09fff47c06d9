#include <cmath>

#include "xps/special_fn.hpp"

namespace xps {

namespace {

constexpr double kInvSqrtPi = 0.564189583547756286948079451561;

// erf(z) = 2/sqrt(pi) exp(-z^2) sum 2^n z^(2n+1) / (2n+1)!!
// No cancellation for nearly real z, unlike the alternating Taylor series.
cplx erf_series(cplx z) {
    const cplx z2 = z * z;
    cplx term = z, sum = z;
    for (int n = 1; n < 400; ++n) {
        term *= 2.0 * z2 / (2.0 * n + 1.0);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return 2.0 * kInvSqrtPi * std::exp(-z2) * sum;
}

// modified Lentz on 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
cplx erfc_cf(cplx z) {
    constexpr double tiny = 1e-300;
    cplx f = z, C = z, D = 0.0;
    for (int k = 1; k < 20000; ++k) {
        const double a = 0.5 * k;
        D = z + a * D;
        C = z + a / C;
        if (std::abs(D) < tiny) D = tiny;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        const cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return kInvSqrtPi * std::exp(-z * z) / f;
}

// plain Taylor series; better than the scaled one when z^2 is mostly negative
cplx erf_taylor(cplx z) {
    const cplx z2 = z * z;
    cplx term = z, sum = z;
    for (int n = 1; n < 2000; ++n) {
        term *= -z2 / double(n);
        const cplx add = term / (2.0 * n + 1.0);
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return 2.0 * kInvSqrtPi * sum;
}

cplx erfc_right(cplx z) {
    if (std::abs(z.imag()) > z.real()) return 1.0 - erf_taylor(z);
    if (std::abs(z) < 2.5 || z.real() < 0.5) return 1.0 - erf_series(z);
    return erfc_cf(z);
}

}  // namespace

ErfcResult erfc_checked(cplx z) {
    ErfcResult r;
    r.value = z.real() < 0.0 ? 2.0 - erfc_right(-z) : erfc_right(z);
    r.in_region = std::abs(z) <= 50.0 && std::isfinite(r.value.real()) &&
                  std::isfinite(r.value.imag());
    return r;
}

cplx erfc(cplx z) { return erfc_checked(z).value; }

}  // namespace xps
