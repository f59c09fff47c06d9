#include "xps/semiclassical.hpp"

// boost 1.74 pchip calls isnan unqualified; math.h puts it in the global namespace
#include <math.h>

#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <memory>
#include <sstream>

namespace xps {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw std::domain_error(std::string(what) + " must be positive");
}

double integrate(const std::function<double(double)>& f, double a, double b) {
    if (b == a) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-10);
}

struct Crossing {
    double root;
    bool multivalued;
};

// first x > lo with h(x) = 0, h increasing through it; geometric scan then
// toms748. Keeps scanning past the root to spot a wiggly boundary that
// crosses the hyperbola more than once.
Crossing first_crossing(const std::function<double(double)>& h, double lo, double E) {
    constexpr double ratio = 1.01;
    double a = lo, ha = h(a);
    if (ha >= 0.0) {
        std::ostringstream m;
        m << "no intersection: E = " << E << " is below the boundary minimum";
        throw no_intersection(m.str());
    }
    double b = a, hb = ha;
    for (int k = 0; k < 5000 && hb < 0.0; ++k) {
        a = b;
        ha = hb;
        b = a * ratio;
        hb = h(b);
    }
    if (hb < 0.0) throw no_intersection("no intersection found while scanning the boundary");

    std::uintmax_t iters = 200;
    auto r = boost::math::tools::toms748_solve(h, a, b, ha, hb,
                                               boost::math::tools::eps_tolerance<double>(52), iters);
    const double root = 0.5 * (r.first + r.second);

    bool multi = false;
    double prev = hb;
    for (double x = b * ratio; x < 4.0 * root; x *= ratio) {
        const double hx = h(x);
        if ((hx < 0.0) != (prev < 0.0)) {
            multi = true;
            break;
        }
        prev = hx;
    }
    return {root, multi};
}

}  // namespace

PhaseBoundary bk_boundary(double l_x, double l_p) {
    PhaseBoundary b;
    b.l_x = l_x;
    b.l_p = l_p;
    b.p_cl = [l_p](double) { return l_p; };
    b.x_cl = [l_x](double) { return l_x; };
    return b;
}

void validate(const PhaseBoundary& b) {
    if (!(b.l_x > 0.0) || !(b.l_p > 0.0)) throw std::invalid_argument("boundary scales must be positive");
    if (std::abs(b.l_x * b.l_p - kTwoPi) > 1e-12 * kTwoPi)
        throw std::invalid_argument("boundary scales must satisfy l_x * l_p = 2 pi");
    if (!b.p_cl || !b.x_cl) throw std::invalid_argument("boundary profiles missing");
}

double corner_mismatch(const PhaseBoundary& b) {
    return std::abs(b.x_cl(b.l_p) - b.l_x) + std::abs(b.p_cl(b.l_x) - b.l_p);
}

double count_bk(double E) {
    require_positive(E, "count_bk: E");
    const double u = E / kTwoPi;
    return u * (std::log(u) - 1.0) + 1.0;
}

double count_smooth(double E, double offset) {
    require_positive(E, "count_smooth: E");
    return theta(E) / kPi + offset;
}

double count_connes(double E, double Lambda) {
    require_positive(E, "count_connes: E");
    require_positive(Lambda, "count_connes: Lambda");
    const double u = E / kTwoPi;
    return E / kPi * std::log(Lambda) - u * (std::log(u) - 1.0);
}

std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (int p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (long long q = 1LL * p * p; q <= n; q += p) composite[q] = true;
    }
    return out;
}

double nfl_prime_sum(double E, int p_max, int m_max) {
    if (p_max < 2 || m_max < 1) throw std::invalid_argument("nfl_prime_sum: need p_max >= 2, m_max >= 1");
    double s = 0.0;
    for (int p : primes_up_to(p_max)) {
        const double lp = std::log(double(p));
        for (int m = 1; m <= m_max; ++m) s += std::sin(m * E * lp) / (m * std::pow(p, 0.5 * m));
    }
    return -s / kPi;
}

IntersectionPoints solve_intersections(const PhaseBoundary& b, double E) {
    validate(b);
    if (!(E > b.l_x * b.l_p)) throw no_intersection("solve_intersections: need E > l_x l_p");
    IntersectionPoints ip;
    ip.E = E;
    const auto xm = first_crossing([&](double x) { return x * b.p_cl(x) - E; }, b.l_x, E);
    const auto pm = first_crossing([&](double p) { return b.x_cl(p) * p - E; }, b.l_p, E);
    ip.x_M = xm.root;
    ip.p_M = pm.root;
    ip.multivalued = xm.multivalued || pm.multivalued;
    // the ray x/l_x = p/l_p meets xp = E in closed form
    ip.x_I = std::sqrt(E * b.l_x / b.l_p);
    ip.p_I = E / ip.x_I;
    return ip;
}

double nfl_semiclassical(const PhaseBoundary& b, double E) {
    const auto ip = solve_intersections(b, E);
    const double logs = std::log(b.p_cl(ip.x_M) / b.l_p) + std::log(b.x_cl(ip.p_M) / b.l_x);
    const double area_x = E - b.l_x * b.p_cl(b.l_x) - integrate(b.p_cl, b.l_x, ip.x_M);
    const double area_p = E - b.l_p * b.x_cl(b.l_p) - integrate(b.x_cl, b.l_p, ip.p_M);
    return -E / kTwoPi * logs + (area_x + area_p) / kTwoPi;
}

double nfl_semiclassical_prime(const PhaseBoundary& b, double E) {
    const auto ip = solve_intersections(b, E);
    return -(std::log(b.p_cl(ip.x_M) / b.l_p) + std::log(b.x_cl(ip.p_M) / b.l_x)) / kTwoPi;
}

PhaseBoundary boundary_from_nfl(const FluctuationDensity& d, double l_x, double l_p,
                                const std::vector<double>& E_grid, const Tolerances& tol) {
    PhaseBoundary out = bk_boundary(l_x, l_p);
    validate(out);
    if (E_grid.size() < 4) throw std::invalid_argument("boundary_from_nfl: grid too short");
    if (!d.n_fl && !d.n_fl_prime) throw std::invalid_argument("boundary_from_nfl: empty density");

    const double h = tol.fd_step;
    std::function<double(double)> np = d.n_fl_prime;
    if (!np) np = [f = d.n_fl, h](double E) { return (f(E + h) - f(E - h)) / (2.0 * h); };

    std::vector<double> xs, ps;
    xs.reserve(E_grid.size());
    ps.reserve(E_grid.size());
    for (std::size_t i = 0; i < E_grid.size(); ++i) {
        const double E = E_grid[i];
        require_positive(E, "boundary_from_nfl: grid energy");
        const double w = std::exp(kPi * np(E));
        const double x = E / l_p * w;
        // x_M must increase with E, i.e. 1 + pi E n'' > 0
        if (i > 0 && !(E > E_grid[i - 1] && x > xs.back())) {
            std::ostringstream m;
            m << "boundary_from_nfl: 1 + pi E n_fl'' <= 0 on [" << E_grid[i - 1] << ", " << E
              << "]; the boundary would be multivalued";
            throw monotonicity_violation(m.str(), E_grid[i - 1], E);
        }
        xs.push_back(x);
        ps.push_back(E / x);
    }

    const double x_lo = xs.front(), x_hi = xs.back();
    const double p_lo = ps.front(), p_hi = ps.back();
    using Pchip = boost::math::interpolators::pchip<std::vector<double>>;
    auto table = std::make_shared<Pchip>(std::move(xs), std::move(ps));
    out.p_cl = [table, x_lo, x_hi, p_lo, p_hi](double x) {
        if (x <= x_lo) return p_lo;
        if (x >= x_hi) return p_hi;
        return (*table)(x);
    };
    // xp symmetry: x_cl(p)/l_x = p_cl(l_x p/l_p)/l_p
    out.x_cl = [pc = out.p_cl, l_x, l_p](double p) { return l_x * pc(l_x * p / l_p) / l_p; };
    return out;
}

}  // namespace xps
