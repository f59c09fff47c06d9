#include "xps/parallel.hpp"

namespace xps {

unsigned default_jobs() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1u : n;
}

}  // namespace xps
