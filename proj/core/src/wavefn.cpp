#include "xps/wavefn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "xps/parallel.hpp"

namespace xps {

namespace {

const cplx I(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt2Pi = std::sqrt(kTwoPi);

// nodes and weights of 20-point panels of width <= w covering [a, b]
void panel_nodes(double a, double b, double w, std::vector<double>& x, std::vector<double>& wt) {
    if (!(b > a)) return;
    const auto& g = detail::gauss20();
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / w)));
    const double h = (b - a) / n;
    for (int k = 0; k < n; ++k) {
        const double c = a + (k + 0.5) * h;
        for (std::size_t j = 0; j < g.x.size(); ++j) {
            x.push_back(c + 0.5 * h * g.x[j]);
            wt.push_back(0.5 * h * g.w[j]);
        }
    }
}

template <class F>
auto integrate(F&& f, double a, double b, double w) {
    std::vector<double> x, wt;
    panel_nodes(a, b, w, x, wt);
    using R = decltype(f(a));
    R s{};
    for (std::size_t i = 0; i < x.size(); ++i) s += wt[i] * f(x[i]);
    return s;
}

// int_A^inf dw / ((w - a)(w - b)), A above both poles
double upper_tail(double a, double b, double A) {
    if (std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a))) return 1.0 / (A - a);
    return std::log((A - b) / (A - a)) / (a - b);
}

void require_root(const BoundarySpectrum& bs, double E, double root_tol) {
    const double r = std::abs(jost_F(bs, E));
    if (r > root_tol) {
        std::ostringstream m;
        m << "E = " << E << " is not a root of F (|F| = " << r << ")";
        throw not_a_root(m.str());
    }
}

}  // namespace

double jost_at_infinity(const BoundarySpectrum& bs) {
    const double ab = bs.a0 * bs.b0;
    return 1.0 + 0.25 * ab * ab;
}

SpectralPsi psi_spectral(const BoundarySpectrum& bs, double E, double omega, const Tolerances& tol) {
    const JostEvaluation j = jost(bs, E, tol);
    auto num = [&](double w) { return j.B * bs.a_hat(-w) - j.A * bs.b_hat(-w); };
    const cplx pref = 1.0 / (kSqrt2Pi * I);
    SpectralPsi r;
    r.delta_coefficient = j.bound ? 0.0 : kSqrt2Pi * j.F.real();
    if (omega != E) {
        r.regular = pref * num(omega) / (omega - E);
        return r;
    }
    if (!j.bound) {
        std::ostringstream m;
        m << "psi_spectral: omega = E = " << E << " is the delta support of a scattering state";
        throw std::domain_error(m.str());
    }
    const double h = 1e-6 * std::max(1.0, std::abs(E));
    r.regular = pref * (num(E + h) - num(E - h)) / (2.0 * h);
    return r;
}

cplx psi_bound_smooth(double E, double x) {
    if (!(x > 0.0)) throw std::domain_error("psi_bound_smooth: x must be positive");
    const cplx a(0.25, -0.5 * E);
    if (x <= 1.0) return kSqrt2 * hyp1f2(a, 0.5, a + 1.0, -kPi * kPi * x * x) / a;
    // 1F2(..; -pi^2 x^2)/a = 2 x^{-1/2+iE} int_0^x v^{-1/2-iE} cos(2 pi v) dv,
    // and the piece up to v = 1 is omega_minus(-E)
    auto f = [E](double v) { return std::exp(-cplx(0.5, E) * std::log(v)) * std::cos(kTwoPi * v); };
    const cplx tail = integrate(f, 1.0, x, 0.25);
    const cplx base = std::exp(cplx(-0.5, E) * std::log(x));
    return kSqrt2 * base * (1.0 + omega_minus(-E) + 2.0 * tail);
}

std::vector<cplx> psi_bound_smooth_profile(double E, const std::vector<double>& xs, unsigned jobs) {
    return parallel_map(xs, [E](double x) { return psi_bound_smooth(E, x); }, jobs);
}

std::vector<cplx> psi_bound_exact_profile(const BoundarySpectrum& bs, double E, const std::vector<double>& xs,
                                          double Lambda, unsigned jobs) {
    if (!(Lambda > 0.0)) throw std::domain_error("psi_bound_exact: Lambda must be positive");
    double lmax = 1.0;
    for (double x : xs) {
        if (!(x > 0.0)) throw std::domain_error("psi_bound_exact: x must be positive");
        lmax = std::max(lmax, std::abs(std::log(x)));
    }
    // symmetric pairing around the pole: int_0^Lambda [h(E+u) - h(E-u)]/u du
    std::vector<double> u, w;
    panel_nodes(0.0, Lambda, std::min(0.25, 1.0 / lmax), u, w);
    auto num = [&](double om) { return bs.a_hat(-om) + bs.b_hat(-om); };
    const auto np = parallel_map(u, [&](double s) { return num(E + s); }, jobs);
    const auto nm = parallel_map(u, [&](double s) { return num(E - s); }, jobs);
    return parallel_map(
        xs,
        [&](double x) {
            const double lx = std::log(x);
            detail::CompensatedSum s;
            for (std::size_t k = 0; k < u.size(); ++k) {
                const cplx ph = std::exp(I * (u[k] * lx));
                s.add(w[k] * (np[k] * ph - nm[k] * std::conj(ph)) / u[k]);
            }
            return std::exp(cplx(-0.5, E) * lx) * s.value() / (kTwoPi * I);
        },
        jobs);
}

cplx psi_bound_exact(const BoundarySpectrum& bs, double E, double x, double Lambda) {
    return psi_bound_exact_profile(bs, E, {x}, Lambda)[0];
}

double lambda_sensitivity(const BoundarySpectrum& bs, double E, const std::vector<double>& xs, double Lambda,
                          unsigned jobs) {
    const auto full = psi_bound_exact_profile(bs, E, xs, Lambda, jobs);
    const auto half = psi_bound_exact_profile(bs, E, xs, 0.5 * Lambda, jobs);
    double diff = 0.0, sup = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        diff = std::max(diff, std::abs(full[i] - half[i]));
        sup = std::max(sup, std::abs(full[i]));
    }
    return sup > 0.0 ? diff / sup : 0.0;
}

NormResult bound_norm(const BoundarySpectrum& bs, double E, double root_tol, double L, const Tolerances& tol) {
    require_root(bs, E, root_tol);
    auto F = [&](double w) { return jost_F(bs, w); };
    const double Finf = jost_at_infinity(bs);
    NormResult r;

    const double h = tol.fd_step;
    const cplx Fp = F(E + h), Fm = F(E - h);
    // F - F_inf is proportional to e^{2 pi i n(E)}
    r.norm_density = std::arg((Fp - Finf) / (Fm - Finf)) / h;
    r.norm_derivative = -((Fp - Fm) / (2.0 * h)).imag();

    // Re F vanishes quadratically at the root: replace the innermost window
    // by its Taylor model, pair +-u elsewhere
    const double d = 1e-2;
    const double re0 = F(E).real();
    const double curv = (F(E + d).real() + F(E - d).real() - 2.0 * re0) / (d * d);
    double s = curv * d;
    s += integrate([&](double u) { return (F(E + u).real() + F(E - u).real()) / (u * u); }, d, L, 0.25);
    s += 2.0 * Finf / L;
    r.norm_quadrature = s / kPi;
    r.relative_gap = std::abs(r.norm_quadrature - r.norm_density) / std::abs(r.norm_density);
    return r;
}

double bound_overlap(const BoundarySpectrum& bs, double E1, double E2, double L) {
    const double lo = std::min(E1, E2) - L, hi = std::max(E1, E2) + L;
    auto g = [&](double w) {
        return (jost_F(bs, w) + jost_F(bs, -w)).real() / (kTwoPi * (w - E1) * (w - E2));
    };
    const double mid_a = std::min(E1, E2), mid_b = std::max(E1, E2);
    double s = integrate(g, lo, mid_a, 0.25) + integrate(g, mid_a, mid_b, 0.25) + integrate(g, mid_b, hi, 0.25);
    const double Finf = jost_at_infinity(bs);
    s += Finf / kPi * (upper_tail(E1, E2, hi) + upper_tail(-E1, -E2, -lo));
    return s;
}

cplx dispersion_residual(const BoundarySpectrum& bs, cplx E, double L) {
    if (!(E.imag() > 0.0)) throw std::domain_error("dispersion_residual: need Im E > 0");
    const double Finf = jost_at_infinity(bs);
    auto g = [&](double w) { return (jost_F(bs, w) - Finf) / (w - E); };
    const cplx integral = integrate(g, -L, L, 0.5) / (kTwoPi * I);
    return jost_F_complex(bs, E) - Finf - integral;
}

std::vector<double> hybrid_grid(double x_min, double x_max, int n_geometric, double dx) {
    if (!(x_min > 0.0) || !(x_max > x_min)) throw std::invalid_argument("hybrid_grid: need 0 < x_min < x_max");
    std::vector<double> out;
    const double top = std::min(1.0, x_max);
    if (x_min < top) {
        const double r = std::pow(top / x_min, 1.0 / n_geometric);
        for (int i = 0; i < n_geometric; ++i) out.push_back(x_min * std::pow(r, i));
    }
    if (x_max <= 1.0) {
        out.push_back(x_max);
        return out;
    }
    const int n = static_cast<int>(std::ceil((x_max - 1.0) / dx));
    for (int i = 0; i <= n; ++i) out.push_back(std::min(1.0 + i * dx, x_max));
    return out;
}

}  // namespace xps
