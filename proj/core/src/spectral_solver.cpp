#include "xps/spectral_solver.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "xps/parallel.hpp"

namespace xps {

namespace {

const cplx I(0.0, 1.0);

void check_cell(double l_x, double l_p) {
    if (!(l_x > 0.0) || !(l_p > 0.0) || std::abs(l_x * l_p - kTwoPi) > 1e-12 * kTwoPi)
        throw std::invalid_argument("boundary scales must satisfy l_x * l_p = 2 pi");
}

cplx determinant(const SMatrixEntries& s) {
    return 1.0 + s.s_ab - s.s_ba + s.s_aa * s.s_bb - s.s_ab * s.s_ba;
}

}  // namespace

BoundarySpectrum make_trap(double a0, double b0, double q_a, double q_b) {
    if (!(q_a > q_b)) throw std::invalid_argument("make_trap: need q_a > q_b");
    BoundarySpectrum bs;
    bs.kind = SpectrumKind::trap;
    bs.a0 = a0;
    bs.b0 = b0;
    bs.q_a = q_a;
    bs.q_b = q_b;
    bs.a_hat = [a0, q_a](double E) { return a0 * std::exp(I * (E * q_a)); };
    bs.b_hat = [b0, q_b](double E) { return b0 * std::exp(I * (E * q_b)); };
    // e^{iE(q_a - q_b)} decays for Im E > 0
    bs.analytic_upper = true;
    bs.convention = BoundConvention::overlap;
    return bs;
}

BoundarySpectrum make_bk_smooth(double a0, double b0, double l_x, double l_p, Parity eta,
                                bool analytic_upper) {
    check_cell(l_x, l_p);
    BoundarySpectrum bs;
    bs.kind = SpectrumKind::bk_smooth;
    bs.a0 = a0;
    bs.b0 = b0;
    bs.l_x = l_x;
    bs.l_p = l_p;
    bs.eta = eta;
    const double la = std::log(kTwoPi / l_p), lb = std::log(l_x);
    bs.a_hat = [a0, la, eta](double E) { return a0 * std::exp(I * (E * la)) * phase_factor(E, eta); };
    bs.b_hat = [b0, lb](double E) { return b0 * std::exp(I * (E * lb)); };
    bs.analytic_upper = analytic_upper;
    bs.convention = analytic_upper ? BoundConvention::antisymmetric : BoundConvention::overlap;
    return bs;
}

BoundarySpectrum make_custom(std::function<cplx(double)> a_hat, std::function<cplx(double)> b_hat,
                             bool analytic_upper) {
    BoundarySpectrum bs;
    bs.kind = SpectrumKind::custom;
    bs.a_hat = std::move(a_hat);
    bs.b_hat = std::move(b_hat);
    bs.analytic_upper = analytic_upper;
    return bs;
}

double reality_defect(const BoundarySpectrum& bs, const std::vector<double>& grid) {
    double worst = 0.0;
    for (double E : grid) {
        worst = std::max(worst, std::abs(bs.a_hat(-E) - std::conj(bs.a_hat(E))));
        worst = std::max(worst, std::abs(bs.b_hat(-E) - std::conj(bs.b_hat(E))));
    }
    return worst;
}

cplx s_integral(const std::function<cplx(double)>& f_hat, const std::function<cplx(double)>& g_hat,
                double E, const HilbertOptions& opt) {
    auto p = [&](double t) { return f_hat(t) * g_hat(-t); };
    return 0.5 * (p(E) + hilbert_pv(p, E, opt));
}

SMatrixEntries s_matrix(const BoundarySpectrum& bs, double E) {
    SMatrixEntries s;
    if (bs.analytic_upper) {
        const cplx a = bs.a_hat(E), am = bs.a_hat(-E), b = bs.b_hat(E), bm = bs.b_hat(-E);
        s.s_ab = a * bm;
        s.s_ba = 0.0;
        s.s_aa = 0.5 * a * am;
        s.s_bb = 0.5 * b * bm;
        return s;
    }
    if (bs.kind == SpectrumKind::bk_smooth) {
        const double ab = bs.a0 * bs.b0;
        s.s_ab = ab * omega_plus(E, bs.eta);
        s.s_ba = ab * omega_minus(-E, bs.eta);
        s.s_aa = 0.5 * bs.a0 * bs.a0;
        s.s_bb = 0.5 * bs.b0 * bs.b0;
        return s;
    }
    s.s_aa = s_integral(bs.a_hat, bs.a_hat, E, bs.quadrature);
    s.s_ab = s_integral(bs.a_hat, bs.b_hat, E, bs.quadrature);
    s.s_ba = s_integral(bs.b_hat, bs.a_hat, E, bs.quadrature);
    s.s_bb = s_integral(bs.b_hat, bs.b_hat, E, bs.quadrature);
    return s;
}

cplx jost_F(const BoundarySpectrum& bs, double E) { return determinant(s_matrix(bs, E)); }

cplx jost_F_complex(const BoundarySpectrum& bs, cplx E) {
    SMatrixEntries s;
    s.s_aa = 0.5 * bs.a0 * bs.a0;
    s.s_bb = 0.5 * bs.b0 * bs.b0;
    const double ab = bs.a0 * bs.b0;
    switch (bs.kind) {
    case SpectrumKind::trap:
        s.s_ab = ab * std::exp(I * E * (bs.q_a - bs.q_b));
        s.s_ba = 0.0;
        break;
    case SpectrumKind::bk_smooth:
        if (bs.analytic_upper) {
            s.s_ab = ab * phase_factor(E, bs.eta);
            s.s_ba = 0.0;
        } else {
            s.s_ab = ab * omega_plus(E, bs.eta);
            s.s_ba = ab * omega_minus(-E, bs.eta);
        }
        break;
    default:
        throw std::invalid_argument("jost_F_complex: no closed form for this spectrum kind");
    }
    return determinant(s);
}

JostEvaluation jost(const BoundarySpectrum& bs, double E, const Tolerances& tol) {
    JostEvaluation j;
    j.E = E;
    j.s = s_matrix(bs, E);
    j.F = determinant(j.s);
    j.F_neg = jost_F(bs, -E);
    j.bound = std::abs(j.F) <= tol.root_abs;
    if (j.bound) {
        j.C0 = j.C_inf = 0.0;
        if (bs.convention == BoundConvention::antisymmetric) {
            j.A = -1.0;
            j.B = 1.0;
        } else {
            j.A = j.s.s_aa;
            j.B = 1.0 + j.s.s_ab;
        }
        return j;
    }
    const cplx a = bs.a_hat(E), b = bs.b_hat(E);
    j.C0 = j.F;
    j.C_inf = j.F_neg;
    j.A = (1.0 - j.s.s_ba) * a + j.s.s_aa * b;
    j.B = -j.s.s_bb * a + (1.0 + j.s.s_ab) * b;
    return j;
}

double default_scan_step(double E_max) {
    return kTwoPi / std::log(std::max(E_max, std::exp(1.0))) / 20.0;
}

std::vector<BoundState> find_bound_states(const BoundarySpectrum& bs, double E_min, double E_max,
                                          double grid_step, double accept_tol, unsigned jobs) {
    if (!(E_min < E_max)) throw std::invalid_argument("find_bound_states: need E_min < E_max");
    const double step = grid_step > 0.0 ? grid_step : default_scan_step(E_max);
    const int n = static_cast<int>(std::ceil((E_max - E_min) / step));
    std::vector<double> grid(n + 1);
    for (int i = 0; i <= n; ++i) grid[i] = std::min(E_min + i * step, E_max);

    const auto mod2 = parallel_map(grid, [&](double E) { return std::norm(jost_F(bs, E)); }, jobs);

    // d|F|^2/dE / 2, from a central difference of F
    auto slope = [&](double E) {
        const double h = 1e-6 * std::max(1.0, std::abs(E));
        const cplx dF = (jost_F(bs, E + h) - jost_F(bs, E - h)) / (2.0 * h);
        return (std::conj(jost_F(bs, E)) * dF).real();
    };

    std::vector<BoundState> out;
    for (int i = 1; i < n; ++i) {
        if (!(mod2[i] <= mod2[i - 1] && mod2[i] < mod2[i + 1])) continue;
        double lo = grid[i - 1], hi = grid[i + 1];
        double root = grid[i];
        const double glo = slope(lo), ghi = slope(hi);
        if (glo < 0.0 && ghi > 0.0) {
            std::uintmax_t iters = 100;
            auto r = boost::math::tools::toms748_solve(
                slope, lo, hi, glo, ghi, boost::math::tools::eps_tolerance<double>(50), iters);
            root = 0.5 * (r.first + r.second);
        }
        const double res = std::abs(jost_F(bs, root));
        if (res > accept_tol) continue;
        if (!out.empty() && std::abs(root - out.back().E) < step / 10.0) {
            if (res < out.back().residual) out.back() = {root, res};
            continue;
        }
        out.push_back({root, res});
    }
    std::sort(out.begin(), out.end(), [](const BoundState& a, const BoundState& b) { return a.E < b.E; });
    return out;
}

double scattering_phase(const BoundarySpectrum& bs, double E, const Tolerances& tol) {
    const cplx F = jost_F(bs, E);
    if (std::abs(F) <= tol.root_abs) {
        std::ostringstream m;
        m << "scattering_phase: E = " << E << " is a bound state, |F| = " << std::abs(F);
        throw bound_state_energy(m.str());
    }
    return std::arg(F / jost_F(bs, -E));
}

std::vector<double> scattering_phase_curve(const BoundarySpectrum& bs,
                                           const std::vector<double>& grid) {
    std::vector<double> out;
    out.reserve(grid.size());
    for (double E : grid) {
        const double raw = scattering_phase(bs, E);
        if (out.empty())
            out.push_back(raw);
        else
            out.push_back(out.back() + detail::wrap_pi(raw - out.back()));
    }
    return out;
}

int winding_number(const BoundarySpectrum& bs, double re0, double re1, double im0, double im1,
                   int samples_per_side) {
    const cplx corners[5] = {{re0, im0}, {re1, im0}, {re1, im1}, {re0, im1}, {re0, im0}};
    double total = 0.0;
    cplx prev = jost_F_complex(bs, corners[0]);
    for (int side = 0; side < 4; ++side) {
        for (int k = 1; k <= samples_per_side; ++k) {
            const cplx z = corners[side] + (corners[side + 1] - corners[side]) * (double(k) / samples_per_side);
            const cplx v = jost_F_complex(bs, z);
            total += std::arg(v / prev);
            prev = v;
        }
    }
    return static_cast<int>(std::lround(total / kTwoPi));
}

cplx trap_wavefunction(double a0, double b0, double q_a, double q_b, double E, double x,
                       const Tolerances& tol) {
    if (!(q_a > q_b)) throw std::invalid_argument("trap_wavefunction: need q_a > q_b");
    if (!(x > 0.0)) throw std::domain_error("trap_wavefunction: x must be positive");
    const double eps = 0.5 * a0 * b0, q = q_a - q_b;
    const cplx F = 1.0 + eps * eps + a0 * b0 * std::exp(I * (E * q));
    const cplx Fm = 1.0 + eps * eps + a0 * b0 * std::exp(-I * (E * q));
    const cplx base = std::pow(x, cplx(-0.5, E));
    const double xa = std::exp(q_a), xb = std::exp(q_b);
    if (std::abs(F) <= tol.root_abs) return (x > xb && x < xa) ? base : cplx(0.0);
    if (x < xb) return F * base;
    if (x < xa) return (1.0 - eps * eps) * base;
    return Fm * base;
}

}  // namespace xps
