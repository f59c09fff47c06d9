#pragma once

#include "config.hpp"
#include "table.hpp"

namespace xpcli {

Table cmd_count(const RunConfig& cfg);
Table cmd_zeros(const RunConfig& cfg);
Table cmd_wavefn(const RunConfig& cfg);
Table cmd_euler(const RunConfig& cfg);
Table cmd_trap(const RunConfig& cfg);
Table cmd_boundary(const RunConfig& cfg);

Table run(const RunConfig& cfg);

}  // namespace xpcli
