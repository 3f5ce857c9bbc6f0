#pragma once

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ybe {

// Runs fn(i) for every i in [0, count), over `jobs` OpenMP threads when
// available (serial otherwise).  Callers write results into index-addressed
// slots, which makes the outcome independent of scheduling.  Exceptions are
// captured inside the parallel region and rethrown afterwards.
template <typename F>
void parallel_for_index(std::size_t count, int jobs, F&& fn) {
#ifdef _OPENMP
    if (jobs > 1 && count > 1) {
        std::string first_error;
        std::mutex err_mutex;
        bool failed = false;
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!failed) {
                    failed = true;
                    first_error = e.what();
                }
            }
        }
        if (failed)
            throw std::runtime_error("parallel task failed: " + first_error);
        return;
    }
#endif
    for (std::size_t i = 0; i < count; ++i)
        fn(i);
}

} // namespace ybe
