#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace satake {

/// Deterministic parallel map: results land in input order regardless of
/// scheduling. All library operations are pure, so no locking is needed
/// beyond the join.
template <class In, class Out>
std::vector<Out> parallel_transform(const std::vector<In>& inputs,
                                    const std::function<Out(const In&)>& fn,
                                    unsigned max_threads = 0) {
    std::vector<Out> results(inputs.size());
    if (inputs.empty()) return results;
    unsigned hw = std::thread::hardware_concurrency();
    unsigned nthreads = max_threads ? max_threads : (hw ? hw : 2);
    if (nthreads > inputs.size()) nthreads = static_cast<unsigned>(inputs.size());
    if (nthreads <= 1) {
        for (size_t i = 0; i < inputs.size(); ++i) results[i] = fn(inputs[i]);
        return results;
    }
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (unsigned t = 0; t < nthreads; ++t) {
        workers.emplace_back([&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= inputs.size()) return;
                results[i] = fn(inputs[i]);
            }
        });
    }
    for (auto& w : workers) w.join();
    return results;
}

} // namespace satake
