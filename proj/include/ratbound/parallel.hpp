#pragma once

#include <cstddef>
#include <exception>
#include <limits>

namespace ratbound {

/// Execution policy for the grid and campaign kernels. Serial is the
/// reference path; Parallel must produce bit-identical results.
enum class Exec { Serial, Parallel };

/// Runs body(i) for i in [0, count). Under Exec::Parallel the loop is an
/// OpenMP worksharing loop; the exception from the lowest failing index is
/// rethrown after the region, so both policies report the same failure.
template <class Body>
void for_each_index(std::size_t count, Exec exec, Body&& body) {
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr first_error;
    std::size_t first_index = std::numeric_limits<std::size_t>::max();
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(ratbound_for_each_index)
            {
                if (static_cast<std::size_t>(i) < first_index) {
                    first_index = static_cast<std::size_t>(i);
                    first_error = std::current_exception();
                }
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ratbound
