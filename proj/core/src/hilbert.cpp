#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <string>

#include "detail.hpp"
#include "xps/special_fn.hpp"

namespace xps {

namespace detail {

const GaussRule& gauss20() {
    static const GaussRule rule = [] {
        using Q = boost::math::quadrature::gauss<double, 20>;
        GaussRule r;
        const auto& xs = Q::abscissa();
        const auto& ws = Q::weights();
        // boost stores the non-negative half
        for (std::size_t i = 0; i < xs.size(); ++i) {
            r.x.push_back(xs[i]);
            r.w.push_back(ws[i]);
            if (xs[i] != 0.0) {
                r.x.push_back(-xs[i]);
                r.w.push_back(ws[i]);
            }
        }
        return r;
    }();
    return rule;
}

}  // namespace detail

namespace {

const cplx I(0.0, 1.0);

cplx checked(cplx v, double t) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw nonfinite_sample("hilbert_pv: non-finite sample at t = " + std::to_string(t));
    return v;
}

}  // namespace

cplx gauss_panels(const std::function<cplx(double)>& f, double a, double b, double h) {
    if (!(b > a)) return 0.0;
    const auto& g = detail::gauss20();
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / h)));
    const double w = (b - a) / n;
    detail::CompensatedSum s;
    for (int p = 0; p < n; ++p) {
        const double mid = a + (p + 0.5) * w;
        for (std::size_t i = 0; i < g.x.size(); ++i)
            s.add(g.w[i] * f(mid + 0.5 * w * g.x[i]));
    }
    return 0.5 * w * s.value();
}

cplx gauss_semi_infinite(const std::function<cplx(double)>& f, double L, int panels) {
    auto mapped = [&](double u) -> cplx {
        const double one_m = 1.0 - u;
        return f(L * u / one_m) * (L / (one_m * one_m));
    };
    // nodes never touch u = 1
    return gauss_panels(mapped, 0.0, 1.0, 1.0 / panels);
}

cplx hilbert_pv(const std::function<cplx(double)>& g, double E, const HilbertOptions& opt) {
    if (!(opt.window > 0.0)) throw std::invalid_argument("hilbert_pv: window must be positive");
    const double W = opt.window;

    // pairing u and -u cancels the odd part of the kernel exactly
    auto paired = [&](double u) -> cplx {
        return (checked(g(E + u), E + u) - checked(g(E - u), E - u)) / u;
    };
    cplx total = gauss_panels(paired, 0.0, W, opt.panel);

    switch (opt.tail) {
    case TailModel::none:
        break;
    case TailModel::inverse_t: {
        // g(E +- u) ~ c + D W/u + F (W/u)^2, fitted at u = W, 2W, 4W
        struct Fit {
            cplx c, D, F;
        };
        auto fit = [&](double sgn) {
            const cplx g1 = checked(g(E + sgn * W), E + sgn * W);
            const cplx g2 = checked(g(E + sgn * 2 * W), E + sgn * 2 * W);
            const cplx g4 = checked(g(E + sgn * 4 * W), E + sgn * 4 * W);
            Fit f;
            f.F = (8.0 / 3.0) * (g1 - 3.0 * g2 + 2.0 * g4);
            f.D = 2.0 * (g1 - g2) - 1.5 * f.F;
            f.c = g1 - f.D - f.F;
            return f;
        };
        const Fit r = fit(+1.0), l = fit(-1.0);
        const double scale = std::abs(r.c) + std::abs(l.c) + std::abs(r.D) + std::abs(l.D);
        if (std::abs(r.c - l.c) > 0.1 * scale + 1e-12)
            throw tail_divergence("hilbert_pv: tails approach different constants at E = " +
                                  std::to_string(E));
        total += (r.D - l.D) + 0.5 * (r.F - l.F);
        break;
    }
    case TailModel::rotate: {
        if (!opt.extension) throw std::invalid_argument("hilbert_pv: rotate needs an extension");
        const double s = opt.half_plane >= 0 ? 1.0 : -1.0;
        const cplx is = s * I;
        auto right = [&](double t) { return opt.extension(E + W + is * t) / (W + is * t) * is; };
        auto left = [&](double t) { return opt.extension(E - W + is * t) / (W - is * t) * is; };
        const double L = std::max(1.0, 0.25 * W);
        // int_W^inf g(E+u)/u du  and  int_W^inf g(E-u)/u du after rotation
        total += gauss_semi_infinite(right, L) + gauss_semi_infinite(left, L);
        break;
    }
    }
    return total / (kPi * I);
}

}  // namespace xps
