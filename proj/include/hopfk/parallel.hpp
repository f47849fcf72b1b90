#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace hopfk {

enum class Execution { Serial, Parallel };

/// body(i) for i in [0, n); the first exception thrown by any iteration is rethrown.
template <class F>
void run_indexed(std::size_t n, Execution exec, F&& body) {
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace hopfk
