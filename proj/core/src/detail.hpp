#pragma once
// internal helpers shared by the translation units of the core library

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace xps::detail {

// Neumaier summation, componentwise for complex values.
class CompensatedSum {
public:
    void add(std::complex<double> v) {
        re_ = step(re_, cre_, v.real());
        im_ = step(im_, cim_, v.imag());
    }
    std::complex<double> value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static double step(double s, double& c, double v) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        return t;
    }
    double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

// 20-point Gauss-Legendre rule on [-1, 1]
struct GaussRule {
    std::vector<double> x, w;
};
const GaussRule& gauss20();

inline double wrap_pi(double a) { return std::remainder(a, 2.0 * M_PI); }

}  // namespace xps::detail
