#pragma once

namespace xps {

// One place for the numerical tolerances. Callers may copy and override.
struct Tolerances {
    double special_abs = 1e-10;
    double quadrature_abs = 1e-8;
    double root_abs = 1e-8;          // |F| at or below this counts as a zero
    double series_ratio = 1e-16;     // stop a series once |term/sum| drops below
    int series_cap = 500;
    double bk_beta_floor = 1e-12;    // smoothed Dirichlet sum truncation
    double phase_step = 0.01;        // max grid step when unwinding phases
    double fd_step = 1e-4;           // central differences for n'(E)
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

}  // namespace xps
