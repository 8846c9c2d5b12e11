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

#ifndef QCOMMIT_QSIM_H
#define QCOMMIT_QSIM_H

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcommit/coins.h"
#include "qcommit/gf2.h"
#include "qcommit/kernels.h"

namespace qcommit {

/// Magnitudes below this are dropped after every operation.
inline constexpr double kPruneThreshold = 1e-12;
/// Allowed drift of the squared norm from 1.
inline constexpr double kNormTolerance = 1e-10;

/// A named block of bits inside a basis label.
struct Register {
    std::string name;
    size_t width;
    /// Index of the register's leftmost bit within the label.
    size_t offset;
};

/// Ordered registers packed left to right into a basis label of at most 64 bits.
/// The first declared register occupies the most significant bits.
class RegisterLayout {
   public:
    RegisterLayout() = default;
    RegisterLayout(std::initializer_list<std::pair<std::string, size_t>> registers);

    /// Appends a register at the least significant end.
    void add(const std::string &name, size_t width);
    /// Removes a register; later registers move left.
    void remove(const std::string &name);

    bool contains(const std::string &name) const;
    /// Throws std::invalid_argument for an unknown name.
    const Register &at(const std::string &name) const;
    const std::vector<Register> &registers() const {
        return registers_;
    }
    size_t total_width() const {
        return total_width_;
    }

    /// Amount to shift a label right to bring `reg` to the low bits.
    size_t shift(const Register &reg) const {
        return total_width_ - reg.offset - reg.width;
    }
    uint64_t extract(uint64_t label, const Register &reg) const {
        return (label >> shift(reg)) & low_mask(reg.width);
    }
    /// Label bits of `reg` set to value, other bits unchanged.
    uint64_t with_value(uint64_t label, const Register &reg, uint64_t value) const;

    /// Label with the given register values and zeros elsewhere.
    uint64_t label_of(const std::vector<std::pair<std::string, uint64_t>> &values) const;
    std::string label_string(uint64_t label) const;

   private:
    void relayout();

    std::vector<Register> registers_;
    size_t total_width_ = 0;
};

/// Outcome of a computational-basis measurement.
struct MeasurementRecord {
    std::vector<std::string> registers;
    /// Register values concatenated in the order of `registers`.
    BitVector outcome;
    /// Born probability of the outcome at sampling time.
    double probability;
};

/// Exact probabilities keyed by the concatenated register value.
using Distribution = std::map<uint64_t, double>;

/// Classical function evaluated reversibly; receives one value per input register.
using Oracle = std::function<uint64_t(std::span<const uint64_t> inputs)>;

/// Raised when a register expected to be uncomputed still carries data.
class UncomputationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Pure state over a RegisterLayout stored as a sorted list of nonzero
/// (label, amplitude) terms.
///
/// Every mutating operation prunes amplitudes below kPruneThreshold, keeps
/// terms sorted by label, and throws std::logic_error if the squared norm
/// drifts from 1 by more than kNormTolerance.
class SparseState {
   public:
    /// All-zero label with amplitude 1.
    explicit SparseState(RegisterLayout layout);

    const RegisterLayout &layout() const {
        return layout_;
    }
    std::span<const BasisTerm> terms() const {
        return terms_;
    }
    size_t support_size() const {
        return terms_.size();
    }
    /// Zero when the label is not in the support.
    Amplitude amplitude(uint64_t label) const;
    double norm_squared() const;

    /// Appends a fresh register in state |0...0>.
    void allocate(const std::string &name, size_t width);

    /// Width-1 register from |0> to alpha|0> + beta|1>.
    void prepare_qubit(const std::string &reg, Amplitude alpha, Amplitude beta);

    /// Zeroed register to the equal superposition of all its values.
    void uniform_superpose(const std::string &reg);

    /// Two zeroed registers of equal width n to n Bell pairs (|00>+|11>)/sqrt(2),
    /// pair j joining bit j of each.
    void prepare_epr_pairs(const std::string &reg_a, const std::string &reg_b);

    /// target ^= f(inputs) on every basis label. Self-inverse. The target may
    /// not be one of the inputs; f must return a value that fits the target.
    void coherent_eval(const std::vector<std::string> &inputs, const std::string &target, const Oracle &f);

    /// Zeroed register to sum_r sqrt(p[r]) |r>; p has 2^width entries summing to 1.
    void coherent_sample(const std::string &reg, std::span<const double> p);

    /// Samples a joint outcome of regs with Born probabilities and collapses.
    MeasurementRecord measure(const std::vector<std::string> &regs, CoinSource &coins);

    /// Projects onto regs == outcome and renormalizes. Returns the outcome's
    /// probability. Throws std::invalid_argument for a zero-probability outcome.
    double postselect(const std::vector<std::string> &regs, uint64_t outcome);

    Distribution marginal_distribution(const std::vector<std::string> &regs) const;

    /// <psi| rho_reg |psi> for a width-1 register, with psi = alpha|0> + beta|1>.
    double fidelity_pure(const std::string &reg, Amplitude alpha, Amplitude beta) const;

    /// Removes a register that is |0...0> on every label. Throws
    /// UncomputationError otherwise.
    void discard_zeroed(const std::string &reg);

    /// One line per term, "<bits> <re> <im>", ascending by label.
    std::string dump() const;

   private:
    void require_zeroed(const Register &reg, const char *operation) const;
    uint64_t concatenated_value(uint64_t label, const std::vector<const Register *> &regs) const;
    std::vector<const Register *> lookup(const std::vector<std::string> &regs) const;
    void finish();

    RegisterLayout layout_;
    std::vector<BasisTerm> terms_;
};

}  // namespace qcommit

#endif
