#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "xps/riemann.hpp"

namespace xpcli {

enum class Command { count, zeros, wavefn, euler, trap, boundary };
enum class Format { csv, json };

struct RunConfig {
    Command command = Command::count;
    double e_min = 0.0, e_max = 0.0, step = 0.0;   // filled per command when not given
    std::string kind;
    int epsilon = 1;
    double q_ab = 1.0;
    double lambda = 60.0;
    double k_smooth = 4.0;
    xps::Truncation truncation = xps::Truncation::rs_main;
    Format format = Format::csv;
    std::string out;                 // empty: stdout
    unsigned jobs = 1;
    std::optional<double> energy;
    std::optional<int> index;
    double x_max = 14.0;
};

// exit code 2
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// exit code 3
struct numerical_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* command_name(Command c);

// range checks and per-command defaults; throws usage_error
void finalize(RunConfig& cfg, bool have_e_min, bool have_e_max, bool have_step, bool have_epsilon);

}  // namespace xpcli
