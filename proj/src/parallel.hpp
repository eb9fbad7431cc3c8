#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace fosm::detail {

/// Splits [0, total) into contiguous chunks, runs `work(begin, end)` on each
/// (in parallel when jobs > 1) and concatenates the results in range order,
/// so the output does not depend on the number of jobs.
template <class Work>
std::vector<std::uint64_t> parallel_collect(std::uint64_t total, unsigned jobs, Work work) {
    jobs = std::max(1U, jobs);
    if (jobs == 1 || total < 2 * static_cast<std::uint64_t>(jobs))
        return work(std::uint64_t{0}, total);
    std::vector<std::vector<std::uint64_t>> parts(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        std::uint64_t begin = std::min(total, chunk * j);
        std::uint64_t end = std::min(total, begin + chunk);
        threads.emplace_back([&, j, begin, end] {
            try {
                parts[j] = work(begin, end);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<std::uint64_t> out;
    for (auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace fosm::detail
