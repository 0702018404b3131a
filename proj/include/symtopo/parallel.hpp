#pragma once

// Deterministic parallel map: results land in preassigned slots, so output
// is independent of the number of workers.

#include <exception>
#include <thread>
#include <vector>

namespace symtopo {

template <typename R, typename F>
std::vector<R> parallel_map(size_t n, int jobs, F&& f) {
    std::vector<R> out(n);
    if (jobs <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers, nullptr);
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (size_t i = w; i < n; i += workers) out[i] = f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace symtopo
