#include "config.hpp"

#include <cmath>
#include <sstream>

namespace xpcli {

namespace {

struct Defaults {
    double e_min, e_max, step;
    const char* kind;
    int epsilon;
};

Defaults defaults_for(Command c) {
    switch (c) {
        case Command::count: return {10.0, 40.0, 0.01, "riemann", 1};
        case Command::zeros: return {10.0, 30.0, 0.0, "smooth", 1};
        case Command::wavefn: return {10.0, 30.0, 0.0, "smooth", 1};
        case Command::euler: return {50.0, 100.0, 0.05, "riemann", 1};
        case Command::trap: return {0.1, 20.0, 0.01, "trap", -1};
        case Command::boundary: return {1.0, 100.0, 0.1, "bk", 1};
    }
    return {};
}

bool kind_allowed(Command c, const std::string& k) {
    switch (c) {
        case Command::zeros:
        case Command::wavefn: return k == "smooth" || k == "riemann" || k == "trap";
        case Command::boundary: return k == "bk" || k == "synthetic";
        default: return k == defaults_for(c).kind;
    }
}

}  // namespace

const char* command_name(Command c) {
    switch (c) {
        case Command::count: return "count";
        case Command::zeros: return "zeros";
        case Command::wavefn: return "wavefn";
        case Command::euler: return "euler";
        case Command::trap: return "trap";
        case Command::boundary: return "boundary";
    }
    return "?";
}

void finalize(RunConfig& cfg, bool have_e_min, bool have_e_max, bool have_step, bool have_epsilon) {
    const Defaults d = defaults_for(cfg.command);
    const bool trap_kind = cfg.kind == "trap";
    if (cfg.kind.empty()) cfg.kind = d.kind;
    if (!kind_allowed(cfg.command, cfg.kind))
        throw usage_error(std::string("--kind ") + cfg.kind + " is not valid for " + command_name(cfg.command));

    // trap spectra start near the first level 2 pi
    double e_min = d.e_min, e_max = d.e_max;
    if (trap_kind && cfg.command != Command::trap) e_min = 1.0, e_max = 20.0;
    if (!have_e_min) cfg.e_min = e_min;
    if (!have_e_max) cfg.e_max = e_max;
    if (!have_step) cfg.step = d.step;
    if (!have_epsilon) cfg.epsilon = trap_kind ? -1 : d.epsilon;

    std::ostringstream m;
    if (!std::isfinite(cfg.e_min) || !std::isfinite(cfg.e_max) || !(cfg.e_min < cfg.e_max))
        m << "empty energy range (" << cfg.e_min << ", " << cfg.e_max << ")";
    else if (have_step && !(cfg.step > 0.0))
        m << "--step must be positive";
    else if (cfg.epsilon != 1 && cfg.epsilon != -1)
        m << "--epsilon must be 1 or -1";
    else if (!(cfg.k_smooth > 0.0))
        m << "--k-smooth must be positive";
    else if (!(cfg.lambda > 0.0))
        m << "--lambda must be positive";
    else if (!(cfg.q_ab > 0.0))
        m << "--q-ab must be positive";
    else if (!(cfg.x_max > 0.01))
        m << "--x-max must exceed 0.01";
    else if (cfg.jobs == 0)
        m << "--jobs must be at least 1";
    else if (cfg.index && *cfg.index < 1)
        m << "--index is 1-based";
    else if (cfg.command == Command::count && !(cfg.e_min > 0.0))
        m << "count needs --e-min > 0";
    else if (cfg.command == Command::euler && !(cfg.e_min > 8.0 * xps::kPi))
        m << "euler needs --e-min > 8 pi (at least two terms in the sum), got " << cfg.e_min;
    else if (cfg.command == Command::boundary && !(cfg.e_min > 0.0))
        m << "boundary needs --e-min > 0";
    else if (cfg.command == Command::wavefn && cfg.kind == "smooth" && cfg.epsilon != 1)
        m << "the smooth closed form needs --epsilon 1";
    else if (cfg.step > 0.0 && (cfg.e_max - cfg.e_min) / cfg.step > 5e7)
        m << "grid too fine: " << (cfg.e_max - cfg.e_min) / cfg.step << " points";
    const std::string msg = m.str();
    if (!msg.empty()) throw usage_error(msg);
}

}  // namespace xpcli
