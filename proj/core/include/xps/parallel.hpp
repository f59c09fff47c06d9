#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace xps {

// hardware_concurrency, but never 0
unsigned default_jobs();

// out[i] = f(in[i]) with contiguous chunks per worker. Output order never
// depends on the worker count; the first exception by index is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& in, F&& f, unsigned jobs)
    -> std::vector<std::invoke_result_t<F&, const T&>> {
    using R = std::invoke_result_t<F&, const T&>;
    const std::size_t n = in.size();
    std::vector<R> out(n);
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(in[i]);
        return out;
    }
    const std::size_t w = std::min<std::size_t>(jobs, n);
    std::vector<std::exception_ptr> err(w);
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::size_t k = 0; k < w; ++k) {
        pool.emplace_back([&, k] {
            const std::size_t lo = n * k / w, hi = n * (k + 1) / w;
            try {
                for (std::size_t i = lo; i < hi; ++i) out[i] = f(in[i]);
            } catch (...) {
                err[k] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : err)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace xps
