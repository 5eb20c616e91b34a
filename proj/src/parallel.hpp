#pragma once

#include "lmg/rotations.hpp"

#include <exception>
#include <vector>

namespace lmg::detail {

// Runs body(0..count-1), serially or as an OpenMP loop; the first captured exception is rethrown.
template <class Body>
void for_each_index(int count, Execution exec, const Body& body) {
    std::vector<std::exception_ptr> errors(count);
    const auto guarded = [&](int i) {
        try {
            body(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) guarded(i);
    } else {
        for (int i = 0; i < count; ++i) guarded(i);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace lmg::detail
