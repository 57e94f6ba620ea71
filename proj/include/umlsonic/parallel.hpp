// Copyright 2026 The umlsonic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UMLSONIC_PARALLEL_HPP
#define UMLSONIC_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace umlsonic {

// Selects between the OpenMP kernel and its serial reference. Both paths
// produce bit-identical results; the serial one exists for tests and for
// builds without OpenMP.
enum class Execution { serial, parallel };

inline int worker_count() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Runs body(i) for i in [0, n). Each iteration must write only to its own
// output slot. The first exception (lowest index) is rethrown after the
// loop; OpenMP regions cannot propagate exceptions themselves.
template <typename Body>
void for_each_index(std::size_t n, Execution mode, Body&& body) {
    std::vector<std::exception_ptr> errors(n);
    if (mode == Execution::parallel) {
        const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < count; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace umlsonic

#endif  // UMLSONIC_PARALLEL_HPP
