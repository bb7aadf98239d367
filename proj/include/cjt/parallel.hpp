#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cjt {

// Worker count: explicit request, else CJT_JOBS, else 1.
inline unsigned resolve_jobs(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CJT_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return unsigned(v);
    }
    return 1;
}

// out[i] = fn(i) for i < n.  Results land in index order whatever the worker count.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
    std::vector<R> out(n);
    jobs = std::max(1u, std::min<unsigned>(jobs, unsigned(n)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace cjt
