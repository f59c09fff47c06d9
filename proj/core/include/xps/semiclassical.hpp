#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "xps/special_fn.hpp"

namespace xps {

// Phase-space boundaries p = p_cl(x) and x = x_cl(p) with the Planck cell
// l_x * l_p = 2 pi.
struct PhaseBoundary {
    std::function<double(double)> p_cl;
    std::function<double(double)> x_cl;
    double l_x = 1.0;
    double l_p = kTwoPi;
};

PhaseBoundary bk_boundary(double l_x = 1.0, double l_p = kTwoPi);
// throws std::invalid_argument unless l_x * l_p = 2 pi
void validate(const PhaseBoundary& b);
// |x_cl(l_p) - l_x| + |p_cl(l_x) - l_p|; zero when the corners touch the cell
double corner_mismatch(const PhaseBoundary& b);

struct IntersectionPoints {
    double x_M = 0, p_M = 0, x_I = 0, p_I = 0, E = 0;
    bool multivalued = false;   // more than one crossing seen; the first is kept
};

struct FluctuationDensity {
    std::function<double(double)> n_fl;
    std::function<double(double)> n_fl_prime;   // may be empty: central differences
};

struct no_intersection : std::domain_error {
    using std::domain_error::domain_error;
};
struct monotonicity_violation : std::runtime_error {
    double E_lo, E_hi;
    monotonicity_violation(const std::string& m, double lo, double hi)
        : std::runtime_error(m), E_lo(lo), E_hi(hi) {}
};

double count_bk(double E);
double count_smooth(double E, double offset = 1.0);
double count_connes(double E, double Lambda);
double nfl_prime_sum(double E, int p_max, int m_max);

IntersectionPoints solve_intersections(const PhaseBoundary& b, double E);
double nfl_semiclassical(const PhaseBoundary& b, double E);
// -(1/2pi)[log(p_cl(x_M)/l_p) + log(x_cl(p_M)/l_x)], the derivative of the above
double nfl_semiclassical_prime(const PhaseBoundary& b, double E);

PhaseBoundary boundary_from_nfl(const FluctuationDensity& d, double l_x, double l_p,
                                const std::vector<double>& E_grid,
                                const Tolerances& tol = default_tolerances());

std::vector<int> primes_up_to(int n);

}  // namespace xps
