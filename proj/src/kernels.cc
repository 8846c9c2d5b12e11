// Copyright 2026 The qcommit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcommit/kernels.h"

#include <exception>
#include <mutex>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qcommit::kernels {

void xor_relabel_serial(std::span<BasisTerm> terms, const LabelMask &mask) {
    for (auto &t : terms) {
        t.label ^= mask(t.label);
    }
}

void xor_relabel_parallel(std::span<BasisTerm> terms, const LabelMask &mask) {
    const auto size = static_cast<int64_t>(terms.size());
    // The mask callback may throw; exceptions cannot cross the region boundary.
    std::exception_ptr failure;
    std::mutex failure_lock;
#pragma omp parallel for schedule(static) if (terms.size() >= kParallelThreshold)
    for (int64_t k = 0; k < size; k++) {
        try {
            terms[k].label ^= mask(terms[k].label);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_lock);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

double norm_squared_serial(std::span<const BasisTerm> terms) {
    double total = 0;
    for (const auto &t : terms) {
        total += std::norm(t.amplitude);
    }
    return total;
}

double norm_squared_parallel(std::span<const BasisTerm> terms) {
    const auto size = static_cast<int64_t>(terms.size());
    double total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (terms.size() >= kParallelThreshold)
    for (int64_t k = 0; k < size; k++) {
        total += std::norm(terms[k].amplitude);
    }
    return total;
}

void scale_serial(std::span<BasisTerm> terms, double factor) {
    for (auto &t : terms) {
        t.amplitude *= factor;
    }
}

void scale_parallel(std::span<BasisTerm> terms, double factor) {
    const auto size = static_cast<int64_t>(terms.size());
#pragma omp parallel for schedule(static) if (terms.size() >= kParallelThreshold)
    for (int64_t k = 0; k < size; k++) {
        terms[k].amplitude *= factor;
    }
}

int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace qcommit::kernels
