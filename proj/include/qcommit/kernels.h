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

#ifndef QCOMMIT_KERNELS_H
#define QCOMMIT_KERNELS_H

#include <complex>
#include <cstdint>
#include <functional>
#include <span>

namespace qcommit {

using Amplitude = std::complex<double>;

/// One stored basis label of a sparse state.
struct BasisTerm {
    uint64_t label;
    Amplitude amplitude;

    bool operator==(const BasisTerm &) const = default;
};

namespace kernels {

/// Supports below this size run the serial path even when OpenMP is enabled.
inline constexpr size_t kParallelThreshold = size_t{1} << 12;

/// Returns the mask to XOR into a label.
using LabelMask = std::function<uint64_t(uint64_t label)>;

/// label ^= mask(label) for every term. The serial versions are the
/// reference the OpenMP versions are tested against.
void xor_relabel_serial(std::span<BasisTerm> terms, const LabelMask &mask);
void xor_relabel_parallel(std::span<BasisTerm> terms, const LabelMask &mask);

/// Sum of squared magnitudes.
double norm_squared_serial(std::span<const BasisTerm> terms);
double norm_squared_parallel(std::span<const BasisTerm> terms);

/// amplitude *= factor for every term.
void scale_serial(std::span<BasisTerm> terms, double factor);
void scale_parallel(std::span<BasisTerm> terms, double factor);

/// Number of threads the parallel kernels would use.
int max_threads();

}  // namespace kernels
}  // namespace qcommit

#endif
