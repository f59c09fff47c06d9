#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "xps/parallel.hpp"
#include "xps/riemann.hpp"
#include "xps/semiclassical.hpp"
#include "xps/wavefn.hpp"

namespace xpcli {

using namespace xps;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kNaN = std::numeric_limits<double>::quiet_NaN();

// index-based so the grid does not depend on accumulated rounding
std::vector<double> energy_grid(const RunConfig& cfg) {
    const auto n = static_cast<long>(std::floor((cfg.e_max - cfg.e_min) / cfg.step + 1e-9));
    std::vector<double> g;
    g.reserve(n + 1);
    for (long i = 0; i <= n; ++i) g.push_back(cfg.e_min + i * cfg.step);
    return g;
}

RiemannConfig riemann_config(const RunConfig& cfg) {
    RiemannConfig rc = canonical_config(cfg.truncation, cfg.k_smooth);
    rc.epsilon = cfg.epsilon;
    rc.b0 = cfg.epsilon * rc.b0;
    return rc;
}

BoundarySpectrum spectrum(const RunConfig& cfg) {
    if (cfg.kind == "smooth") return make_bk_smooth(kSqrt2, cfg.epsilon * kSqrt2, 1.0, kTwoPi, Parity::plus, true);
    if (cfg.kind == "trap") return make_trap(kSqrt2, cfg.epsilon * kSqrt2, cfg.q_ab, 0.0);
    return riemann_boundary(riemann_config(cfg));
}

std::vector<BoundState> roots(const RunConfig& cfg, const BoundarySpectrum& bs, double lo, double hi) {
    return find_bound_states(bs, lo, hi, cfg.step, 1e-8, cfg.jobs);
}

// explicit energy: snap to the nearest root within 1e-3, otherwise reject
std::vector<double> pick_energies(const RunConfig& cfg, const BoundarySpectrum& bs) {
    if (cfg.energy) {
        const double E = *cfg.energy;
        const auto rs = roots(cfg, bs, std::min(cfg.e_min, E - 1.0), std::max(cfg.e_max, E + 1.0));
        if (rs.empty()) {
            std::ostringstream m;
            m << "E = " << E << " is not a root of F and no root was found nearby";
            throw usage_error(m.str());
        }
        const auto best = std::min_element(rs.begin(), rs.end(), [E](const BoundState& a, const BoundState& b) {
            return std::abs(a.E - E) < std::abs(b.E - E);
        });
        if (std::abs(best->E - E) > 1e-3) {
            std::ostringstream m;
            m.precision(10);
            m << "E = " << E << " is not a root of F; nearest root is " << best->E;
            throw usage_error(m.str());
        }
        return {best->E};
    }
    const auto rs = roots(cfg, bs, cfg.e_min, cfg.e_max);
    if (cfg.index) {
        if (static_cast<std::size_t>(*cfg.index) > rs.size()) {
            std::ostringstream m;
            m << "--index " << *cfg.index << " but only " << rs.size() << " roots in (" << cfg.e_min << ", "
              << cfg.e_max << ")";
            throw usage_error(m.str());
        }
        return {rs[*cfg.index - 1].E};
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < rs.size() && i < 3; ++i) out.push_back(rs[i].E);
    if (out.empty()) throw usage_error("no roots in the requested range");
    return out;
}

}  // namespace

Table cmd_count(const RunConfig& cfg) {
    const auto E = energy_grid(cfg);
    const RiemannConfig rc = riemann_config(cfg);
    // staircase from sign changes of the Riemann-Siegel Z
    const auto zs = z_zeros(cfg.e_max + 0.5, Truncation::rs_main, cfg.k_smooth, 0.01, cfg.jobs);
    // f has no terms at or below 2 pi, so n_fl and N_QM are left undefined there
    std::vector<double> above;
    for (double t : E)
        if (t > kTwoPi) above.push_back(t);
    NflCurve curve;
    if (!above.empty()) curve = unwind_nfl(rc, above, cfg.jobs);
    // same as count_qm, without re-unwinding from the anchor per point
    std::vector<double> qm(E.size() - above.size(), kNaN);
    for (std::size_t i = 0; i < above.size(); ++i)
        qm.push_back(theta(above[i], rc.eta) / kPi + curve.values[i].n_fl + 1.5);

    Table t;
    auto& cE = t.num("E");
    auto& cR = t.num("N_R");
    auto& cS = t.num("N_smooth");
    auto& cH = t.num("N_smooth_plus_half");
    auto& cQ = t.num("N_QM");
    auto& cn = t.num("n_fl");
    auto& cx = t.num("N_fl_exact");
    const std::size_t skip = E.size() - above.size();
    for (std::size_t i = 0; i < E.size(); ++i) {
        const double s = count_smooth(E[i]);
        cE.push_back(E[i]);
        cR.push_back(count_riemann(zs, E[i]));
        cS.push_back(s);
        cH.push_back(s + 0.5);
        cQ.push_back(qm[i]);
        cn.push_back(i < skip ? kNaN : curve.values[i - skip].n_fl);
        cx.push_back(n_fl_exact(zs, E[i]).value);
    }
    return t;
}

Table cmd_zeros(const RunConfig& cfg) {
    const auto rs = roots(cfg, spectrum(cfg), cfg.e_min, cfg.e_max);
    Table t;
    auto& ci = t.num("index");
    auto& cE = t.num("E");
    auto& cr = t.num("residual");
    auto& ck = t.text("kind");
    for (std::size_t i = 0; i < rs.size(); ++i) {
        ci.push_back(static_cast<double>(i + 1));
        cE.push_back(rs[i].E);
        cr.push_back(rs[i].residual);
        ck.push_back(cfg.kind);
    }
    return t;
}

Table cmd_wavefn(const RunConfig& cfg) {
    const auto bs = spectrum(cfg);
    const auto xs = hybrid_grid(0.01, cfg.x_max);
    Table t;
    auto& cE = t.num("E_m");
    auto& cx = t.num("x");
    auto& cre = t.num("re_psi");
    auto& cim = t.num("im_psi");
    auto& cab = t.num("abs_psi");
    auto& cn = t.num("norm");
    for (double E : pick_energies(cfg, bs)) {
        std::vector<cplx> psi;
        if (cfg.kind == "smooth")
            psi = psi_bound_smooth_profile(E, xs, cfg.jobs);
        else if (cfg.kind == "trap")
            psi = parallel_map(xs, [&](double x) { return trap_wavefunction(kSqrt2, cfg.epsilon * kSqrt2, cfg.q_ab, 0.0, E, x); },
                               cfg.jobs);
        else
            psi = psi_bound_exact_profile(bs, E, xs, cfg.lambda, cfg.jobs);
        double norm;
        if (cfg.kind == "trap") {
            // trap_wavefunction carries the overlap-convention constants; its
            // profile is c x^{-1/2} on e^0 < x < e^{q_ab}, so the x-space norm is exact
            const double xm = std::exp(0.5 * cfg.q_ab);
            const double c = std::abs(trap_wavefunction(kSqrt2, cfg.epsilon * kSqrt2, cfg.q_ab, 0.0, E, xm));
            norm = c * c * xm * cfg.q_ab;
        } else {
            norm = bound_norm(bs, E).norm_density;
        }
        if (!(norm > 0.0)) {
            std::ostringstream m;
            m << "non-positive norm " << norm << " at E = " << E;
            throw numerical_failure(m.str());
        }
        const double s = 1.0 / std::sqrt(norm);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const cplx p = s * psi[i];
            cE.push_back(E);
            cx.push_back(xs[i]);
            cre.push_back(p.real());
            cim.push_back(p.imag());
            cab.push_back(std::abs(p));
            cn.push_back(norm);
        }
    }
    return t;
}

Table cmd_euler(const RunConfig& cfg) {
    const auto E = energy_grid(cfg);
    const auto f = parallel_map(
        E,
        [&](double t) {
            return cfg.truncation == Truncation::rs_main ? f_main(t) : f_bk_sum(t, cfg.k_smooth).f;
        },
        cfg.jobs);
    const auto z = parallel_map(E, [](double t) { return euler_truncated(t); }, cfg.jobs);
    Table t;
    auto& cE = t.num("E");
    auto& caf = t.num("abs_f");
    auto& cpf = t.num("arg_f");
    auto& caz = t.num("abs_zeta_E");
    auto& cpz = t.num("arg_zeta_E");
    for (std::size_t i = 0; i < E.size(); ++i) {
        cE.push_back(E[i]);
        caf.push_back(std::abs(f[i]));
        cpf.push_back(std::arg(f[i]));
        caz.push_back(std::abs(z[i]));
        cpz.push_back(std::arg(z[i]));
    }
    return t;
}

Table cmd_trap(const RunConfig& cfg) {
    const auto bs = make_trap(kSqrt2, cfg.epsilon * kSqrt2, cfg.q_ab, 0.0);
    const auto E = energy_grid(cfg);
    const auto F = parallel_map(E, [&](double e) { return jost_F(bs, e); }, cfg.jobs);
    const auto ph = scattering_phase_curve(bs, E);
    Table t;
    auto& cE = t.num("E");
    auto& cr = t.num("re_F");
    auto& ci = t.num("im_F");
    auto& ca = t.num("abs_F");
    auto& cp = t.num("phase");
    for (std::size_t i = 0; i < E.size(); ++i) {
        cE.push_back(E[i]);
        cr.push_back(F[i].real());
        ci.push_back(F[i].imag());
        ca.push_back(std::abs(F[i]));
        cp.push_back(ph[i]);
    }
    return t;
}

Table cmd_boundary(const RunConfig& cfg) {
    FluctuationDensity d;
    if (cfg.kind == "synthetic") {
        // small odd fluctuation, keeps 1 + pi E n'' > 0 on the default grid
        const double A = 0.02, w = 0.3;
        d.n_fl = [=](double E) { return A * std::sin(w * E); };
        d.n_fl_prime = [=](double E) { return A * w * std::cos(w * E); };
    } else {
        d.n_fl = [](double) { return 0.0; };
        d.n_fl_prime = [](double) { return 0.0; };
    }
    const auto bk = bk_boundary();
    const auto rec = boundary_from_nfl(d, bk.l_x, bk.l_p, energy_grid(cfg));
    const double E = cfg.energy.value_or(10.0);
    Table t;
    auto& cx = t.num("x");
    auto& cb = t.num("p_bk");
    auto& cr = t.num("p_reconstructed");
    auto& ct = t.num("p_trajectory");
    for (double x : hybrid_grid(0.1, cfg.x_max)) {
        cx.push_back(x);
        cb.push_back(bk.p_cl(x));
        cr.push_back(rec.p_cl(x));
        ct.push_back(E / x);
    }
    return t;
}

Table run(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::count: return cmd_count(cfg);
        case Command::zeros: return cmd_zeros(cfg);
        case Command::wavefn: return cmd_wavefn(cfg);
        case Command::euler: return cmd_euler(cfg);
        case Command::trap: return cmd_trap(cfg);
        case Command::boundary: return cmd_boundary(cfg);
    }
    throw usage_error("no command");
}

}  // namespace xpcli
