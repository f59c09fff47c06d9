#include "xps/riemann.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "xps/parallel.hpp"
#include "xps/semiclassical.hpp"

namespace xps {

namespace {

const cplx I(0.0, 1.0);

cplx dirichlet_term(int n, double t) {
    return std::exp(-cplx(0.5, t) * std::log(double(n)));
}

// leading Riemann-Siegel coefficient; removable 0/0 at p = 1/4 and 3/4
double rs_c0(double p) {
    auto raw = [](double q) {
        return std::cos(kTwoPi * (q * q - q - 1.0 / 16.0)) / std::cos(kTwoPi * q);
    };
    if (std::abs(std::cos(kTwoPi * p)) > 1e-6) return raw(p);
    const double h = 1e-5;
    return 0.5 * (raw(p - h) + raw(p + h));
}

double rs_correction(double t) {
    const double a = std::sqrt(t / kTwoPi);
    const int n = static_cast<int>(std::floor(a));
    const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::pow(t / kTwoPi, -0.25) * rs_c0(a - n);
}

void require_rs_range(double t) {
    if (!(t > kTwoPi)) {
        std::ostringstream m;
        m << "riemann: t = " << t << " must exceed 2 pi so that nu(t) >= 1";
        throw std::domain_error(m.str());
    }
}

FTValue make_ft(cplx f) {
    const double r = std::abs(f);
    if (!(r >= 1e-12)) throw f_zero_error("riemann: |f| below 1e-12, phase undefined");
    return {f, r, std::arg(f) / kPi};
}

}  // namespace

RiemannConfig canonical_config(Truncation t, double K) {
    RiemannConfig c;
    c.truncation = t;
    c.K = K;
    return c;
}

void validate(const RiemannConfig& cfg) {
    if (!(cfg.l_x > 0.0) || !(cfg.l_p > 0.0) || std::abs(cfg.l_x * cfg.l_p - kTwoPi) > 1e-12 * kTwoPi)
        throw std::invalid_argument("riemann config: l_x * l_p must equal 2 pi");
    if (cfg.epsilon != 1 && cfg.epsilon != -1)
        throw std::invalid_argument("riemann config: epsilon must be +1 or -1");
    const double ab = cfg.a0 * cfg.b0;
    if (ab != 0.0 && (ab > 0.0) != (cfg.epsilon > 0))
        throw std::invalid_argument("riemann config: sign of a0 b0 disagrees with epsilon");
    if (cfg.truncation == Truncation::bk_smoothed && !(cfg.K > 0.0))
        throw std::invalid_argument("riemann config: K must be positive");
}

int nu(double t) {
    if (t < 0.0) throw std::domain_error("nu: t must be non-negative");
    return static_cast<int>(std::floor(std::sqrt(t / kTwoPi)));
}

cplx f_main(double t) {
    const int n = nu(std::abs(t));
    detail::CompensatedSum s;
    for (int k = 1; k <= n; ++k) s.add(dirichlet_term(k, t));
    return s.value();
}

cplx f_rs(double t) {
    const double at = std::abs(t);
    if (at == 0.0) throw std::domain_error("f_rs: t = 0 is singular");
    const cplx f = f_main(at) + 0.5 * std::exp(-I * theta(at)) * rs_correction(at);
    return t < 0.0 ? std::conj(f) : f;
}

double z_rs_main(double t) {
    require_rs_range(t);
    return 2.0 * (std::exp(I * theta(t)) * f_rs(t)).real();
}

cplx bk_weight(int n, double t, double K) {
    const double xi = std::log(double(n)) - theta_prime(t);
    const cplx Q = std::sqrt(cplx(K * K, -t * theta_second(t)));
    return 0.5 * erfc(xi * std::sqrt(0.5 * t) / Q);
}

BkSum f_bk_sum(double t, double K, int n_max, const Tolerances& tol) {
    if (!(t > 0.0)) throw std::domain_error("f_bk: t must be positive");
    if (!(K > 0.0)) throw std::domain_error("f_bk: K must be positive");
    BkSum out;
    detail::CompensatedSum s;
    const double tp = theta_prime(t);
    const int cap = n_max > 0 ? n_max : 5000000;
    for (int n = 1; n <= cap; ++n) {
        const cplx b = bk_weight(n, t, K);
        s.add(b * dirichlet_term(n, t));
        out.n_max = n;
        if (n_max == 0 && std::log(double(n)) > tp && std::abs(b) < tol.bk_beta_floor) break;
        if (n == cap) out.truncation_warning = std::abs(b) >= tol.bk_beta_floor;
    }
    out.f = s.value();
    return out;
}

FTValue f_truncated(double t) {
    require_rs_range(std::abs(t));
    return make_ft(f_main(t));
}

FTValue f_bk_smoothed(double t, double K, int n_max) {
    const auto r = f_bk_sum(std::abs(t), K, n_max);
    return make_ft(t < 0.0 ? std::conj(r.f) : r.f);
}

cplx f_of(const RiemannConfig& cfg, double t) {
    if (cfg.truncation == Truncation::rs_main) return f_rs(t);
    const cplx f = f_bk_sum(std::abs(t), cfg.K).f;
    return t < 0.0 ? std::conj(f) : f;
}

double z_value(const RiemannConfig& cfg, double t) {
    return 2.0 * (std::exp(I * theta(t, cfg.eta)) * f_of(cfg, t)).real();
}

cplx jost_riemann(const RiemannConfig& cfg, double t) {
    const cplx f = f_of(cfg, t);
    if (!(std::abs(f) >= 1e-12)) {
        std::ostringstream m;
        m << "jost_riemann: |f(-t)| below 1e-12 at t = " << t;
        throw f_zero_error(m.str());
    }
    const double ab = cfg.a0 * cfg.b0;
    return 1.0 + 0.25 * ab * ab + ab * phase_factor(t, cfg.eta) * (f / std::conj(f));
}

cplx zeta_factorized(const RiemannConfig& cfg, double t) {
    return 0.5 * std::conj(f_of(cfg, t)) * jost_riemann(cfg, t);
}

BoundarySpectrum riemann_boundary(const RiemannConfig& cfg, std::function<cplx(double)> f_provider) {
    validate(cfg);
    const bool custom = static_cast<bool>(f_provider);
    if (!custom) f_provider = [cfg](double t) { return f_of(cfg, t); };
    auto unit = [f_provider, custom](double t) {
        // below 2 pi the main sum is empty; keep the nu = 0 Riemann-Siegel phase
        if (!custom && std::abs(t) <= kTwoPi) return t == 0.0 ? cplx(-1.0) : -std::exp(-I * theta(t));
        const cplx f = f_provider(t);
        const double r = std::abs(f);
        if (!(r >= 1e-12)) throw f_zero_error("riemann_boundary: |f| below 1e-12");
        return f / r;
    };
    BoundarySpectrum bs;
    bs.kind = SpectrumKind::riemann_exact;
    bs.a0 = cfg.a0;
    bs.b0 = cfg.b0;
    bs.l_x = cfg.l_x;
    bs.l_p = cfg.l_p;
    bs.eta = cfg.eta;
    const double la = std::log(kTwoPi / cfg.l_p), lb = std::log(cfg.l_x);
    const double a0 = cfg.a0, b0 = cfg.b0;
    const Parity eta = cfg.eta;
    // e^{i pi n_fl} = f/|f| whatever branch n_fl is on
    bs.a_hat = [=](double E) { return a0 * std::exp(I * (E * la)) * phase_factor(E, eta) * unit(E); };
    bs.b_hat = [=](double E) { return b0 * std::exp(I * (E * lb)) * std::conj(unit(E)); };
    bs.analytic_upper = true;
    bs.convention = BoundConvention::antisymmetric;
    return bs;
}

NflCurve unwind_nfl(const RiemannConfig& cfg, const std::vector<double>& grid, unsigned jobs,
                    const Tolerances& tol) {
    NflCurve out;
    if (grid.empty()) return out;
    if (!(grid.front() > kTwoPi)) throw std::domain_error("unwind_nfl: grid must start above 2 pi");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("unwind_nfl: grid must increase");

    const bool rs = cfg.truncation == Truncation::rs_main;
    const double h = tol.phase_step;

    // fine points; mark which of them are grid points
    std::vector<double> pts;
    std::vector<std::size_t> at_grid;
    // the smoothed branch is tied to rs at a fixed low energy: the rs sum
    // nearly vanishes at isolated points (t ~ 59.35) where its phase turns
    // spuriously, so tying at a late grid start can land on the wrong branch
    const double bk_anchor = 20.0;
    double start = rs ? kTwoPi * (1.0 + 1e-9) : std::min(grid.front(), bk_anchor);
    pts.push_back(start);
    for (double g : grid) {
        const double from = pts.back();
        const int k = std::max(1, static_cast<int>(std::ceil((g - from) / h)));
        if (g > from)
            for (int j = 1; j <= k; ++j) pts.push_back(j == k ? g : from + (g - from) * j / k);
        at_grid.push_back(pts.size() - 1);
    }

    const auto fs = parallel_map(pts, [&](double t) { return f_of(cfg, t); }, jobs);

    double anchor = 0.0;
    if (rs) {
        anchor = make_ft(fs[0]).n_fl;
    } else {
        RiemannConfig rcfg = cfg;
        rcfg.truncation = Truncation::rs_main;
        const double ref = unwind_nfl(rcfg, {start}, jobs, tol).values[0].n_fl;
        const double p = make_ft(fs[0]).n_fl;
        anchor = p + 2.0 * std::round((ref - p) / 2.0);
    }

    std::vector<double> n(pts.size());
    n[0] = anchor;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const FTValue prev = make_ft(fs[i - 1]), cur = make_ft(fs[i]);
        const double d = detail::wrap_pi(kPi * (cur.n_fl - prev.n_fl)) / kPi;
        n[i] = n[i - 1] + d;
        if (rs && nu(pts[i]) != nu(pts[i - 1]))
            out.jumps.push_back({pts[i], JumpKind::nu_increment, d});
        else if (std::abs(prev.n_fl) > 0.5 && std::abs(cur.n_fl) > 0.5 && (prev.n_fl > 0) != (cur.n_fl > 0))
            out.jumps.push_back({pts[i], JumpKind::axis_crossing, d});
    }

    out.t = grid;
    for (std::size_t idx : at_grid) {
        FTValue v = make_ft(fs[idx]);
        v.n_fl = n[idx];
        out.values.push_back(v);
    }
    return out;
}

double count_qm(const RiemannConfig& cfg, double t) {
    return theta(t, cfg.eta) / kPi + unwind_nfl(cfg, {t}).values[0].n_fl + 1.5;
}

std::vector<double> z_zeros(double t_max, Truncation trunc, double K, double step, unsigned jobs) {
    RiemannConfig cfg = canonical_config(trunc, K);
    auto z = [&](double t) { return trunc == Truncation::rs_main ? z_rs_main(t) : z_value(cfg, t); };
    std::vector<double> grid;
    for (int i = 1; kTwoPi + i * step <= t_max + 1e-12; ++i) grid.push_back(kTwoPi + i * step);
    const auto zs = parallel_map(grid, z, jobs);
    std::vector<double> out;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if ((zs[i - 1] < 0.0) == (zs[i] < 0.0)) continue;
        std::uintmax_t iters = 100;
        auto r = boost::math::tools::toms748_solve(z, grid[i - 1], grid[i], zs[i - 1], zs[i],
                                                   boost::math::tools::eps_tolerance<double>(50), iters);
        out.push_back(0.5 * (r.first + r.second));
    }
    return out;
}

double count_riemann(const std::vector<double>& zeros, double t) {
    return static_cast<double>(std::upper_bound(zeros.begin(), zeros.end(), t) - zeros.begin());
}

NflExact n_fl_exact(const std::vector<double>& zeros, double t) {
    NflExact r;
    r.value = count_riemann(zeros, t) - theta(t) / kPi - 1.0;
    for (double z : zeros)
        if (std::abs(z - t) < 1e-4) r.near_zero = true;
    return r;
}

cplx euler_truncated(double t) {
    if (!(std::abs(t) > 4.0 * kTwoPi)) throw std::domain_error("euler_truncated: need |t| > 8 pi");
    cplx prod = 1.0;
    for (int p : primes_up_to(nu(std::abs(t)))) prod /= 1.0 - dirichlet_term(p, t);
    return prod;
}

}  // namespace xps
