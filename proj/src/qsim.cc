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

#include "qcommit/qsim.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace qcommit {

namespace {

// Largest register that may be expanded into a superposition in one step.
constexpr size_t kMaxSuperposeWidth = 30;
constexpr size_t kMaxOracleInputs = 8;

std::string format_real(double v) {
    if (v == 0) {
        v = 0;  // folds -0 into +0
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

}  // namespace

RegisterLayout::RegisterLayout(std::initializer_list<std::pair<std::string, size_t>> registers) {
    for (const auto &[name, width] : registers) {
        add(name, width);
    }
}

void RegisterLayout::add(const std::string &name, size_t width) {
    if (width == 0) {
        throw std::invalid_argument("register '" + name + "' has zero width");
    }
    if (contains(name)) {
        throw std::invalid_argument("duplicate register '" + name + "'");
    }
    if (total_width_ + width > 64) {
        throw std::invalid_argument("layout exceeds 64 bits");
    }
    registers_.push_back({name, width, total_width_});
    total_width_ += width;
}

void RegisterLayout::remove(const std::string &name) {
    auto it = std::find_if(registers_.begin(), registers_.end(), [&](const Register &r) {
        return r.name == name;
    });
    if (it == registers_.end()) {
        throw std::invalid_argument("unknown register '" + name + "'");
    }
    registers_.erase(it);
    relayout();
}

void RegisterLayout::relayout() {
    total_width_ = 0;
    for (auto &r : registers_) {
        r.offset = total_width_;
        total_width_ += r.width;
    }
}

bool RegisterLayout::contains(const std::string &name) const {
    return std::any_of(registers_.begin(), registers_.end(), [&](const Register &r) {
        return r.name == name;
    });
}

const Register &RegisterLayout::at(const std::string &name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return r;
        }
    }
    throw std::invalid_argument("unknown register '" + name + "'");
}

uint64_t RegisterLayout::with_value(uint64_t label, const Register &reg, uint64_t value) const {
    if (value & ~low_mask(reg.width)) {
        throw std::invalid_argument("value does not fit register '" + reg.name + "'");
    }
    size_t s = shift(reg);
    return (label & ~(low_mask(reg.width) << s)) | (value << s);
}

uint64_t RegisterLayout::label_of(const std::vector<std::pair<std::string, uint64_t>> &values) const {
    uint64_t label = 0;
    for (const auto &[name, value] : values) {
        label = with_value(label, at(name), value);
    }
    return label;
}

std::string RegisterLayout::label_string(uint64_t label) const {
    return BitVector::from_value(label, total_width_).str();
}

SparseState::SparseState(RegisterLayout layout) : layout_(std::move(layout)), terms_{{0, 1.0}} {
}

Amplitude SparseState::amplitude(uint64_t label) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), label, [](const BasisTerm &t, uint64_t l) {
        return t.label < l;
    });
    if (it != terms_.end() && it->label == label) {
        return it->amplitude;
    }
    return 0;
}

double SparseState::norm_squared() const {
    return kernels::norm_squared_parallel(terms_);
}

void SparseState::finish() {
    std::erase_if(terms_, [](const BasisTerm &t) {
        return std::abs(t.amplitude) < kPruneThreshold;
    });
    std::sort(terms_.begin(), terms_.end(), [](const BasisTerm &a, const BasisTerm &b) {
        return a.label < b.label;
    });
    double norm = norm_squared();
    if (std::abs(norm - 1) > kNormTolerance) {
        throw std::logic_error("state norm drifted to " + format_real(norm));
    }
}

void SparseState::require_zeroed(const Register &reg, const char *operation) const {
    for (const auto &t : terms_) {
        if (layout_.extract(t.label, reg) != 0) {
            throw std::invalid_argument(
                std::string(operation) + ": register '" + reg.name + "' is not in the zero state");
        }
    }
}

std::vector<const Register *> SparseState::lookup(const std::vector<std::string> &regs) const {
    std::vector<const Register *> out;
    size_t width = 0;
    for (const auto &name : regs) {
        out.push_back(&layout_.at(name));
        width += out.back()->width;
    }
    if (width > 64) {
        throw std::invalid_argument("registers wider than 64 bits in total");
    }
    return out;
}

uint64_t SparseState::concatenated_value(uint64_t label, const std::vector<const Register *> &regs) const {
    uint64_t v = 0;
    for (const auto *r : regs) {
        v = (r->width >= 64 ? 0 : v << r->width) | layout_.extract(label, *r);
    }
    return v;
}

void SparseState::allocate(const std::string &name, size_t width) {
    layout_.add(name, width);
    for (auto &t : terms_) {
        t.label <<= width;
    }
}

void SparseState::prepare_qubit(const std::string &reg_name, Amplitude alpha, Amplitude beta) {
    const Register &reg = layout_.at(reg_name);
    if (reg.width != 1) {
        throw std::invalid_argument("prepare_qubit: register '" + reg_name + "' is not one qubit wide");
    }
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1) > kNormTolerance) {
        throw std::invalid_argument("prepare_qubit: |alpha|^2 + |beta|^2 != 1");
    }
    require_zeroed(reg, "prepare_qubit");
    uint64_t one = layout_.with_value(0, reg, 1);
    std::vector<BasisTerm> out;
    out.reserve(terms_.size() * 2);
    for (const auto &t : terms_) {
        out.push_back({t.label, t.amplitude * alpha});
        out.push_back({t.label | one, t.amplitude * beta});
    }
    terms_ = std::move(out);
    finish();
}

void SparseState::uniform_superpose(const std::string &reg_name) {
    const Register &reg = layout_.at(reg_name);
    if (reg.width > kMaxSuperposeWidth) {
        throw std::invalid_argument("uniform_superpose: register too wide");
    }
    require_zeroed(reg, "uniform_superpose");
    uint64_t count = uint64_t{1} << reg.width;
    double amp = std::sqrt(1.0 / static_cast<double>(count));
    std::vector<BasisTerm> out;
    out.reserve(terms_.size() * count);
    for (const auto &t : terms_) {
        for (uint64_t v = 0; v < count; v++) {
            out.push_back({layout_.with_value(t.label, reg, v), t.amplitude * amp});
        }
    }
    terms_ = std::move(out);
    finish();
}

void SparseState::prepare_epr_pairs(const std::string &reg_a, const std::string &reg_b) {
    const Register &a = layout_.at(reg_a);
    const Register &b = layout_.at(reg_b);
    if (a.width != b.width) {
        throw std::invalid_argument("prepare_epr_pairs: registers differ in width");
    }
    if (a.name == b.name) {
        throw std::invalid_argument("prepare_epr_pairs: registers must be distinct");
    }
    if (a.width > kMaxSuperposeWidth) {
        throw std::invalid_argument("prepare_epr_pairs: registers too wide");
    }
    require_zeroed(a, "prepare_epr_pairs");
    require_zeroed(b, "prepare_epr_pairs");
    uint64_t count = uint64_t{1} << a.width;
    double amp = std::sqrt(1.0 / static_cast<double>(count));
    std::vector<BasisTerm> out;
    out.reserve(terms_.size() * count);
    for (const auto &t : terms_) {
        for (uint64_t v = 0; v < count; v++) {
            uint64_t label = layout_.with_value(layout_.with_value(t.label, a, v), b, v);
            out.push_back({label, t.amplitude * amp});
        }
    }
    terms_ = std::move(out);
    finish();
}

void SparseState::coherent_eval(const std::vector<std::string> &inputs, const std::string &target, const Oracle &f) {
    if (inputs.size() > kMaxOracleInputs) {
        throw std::invalid_argument("coherent_eval: too many input registers");
    }
    const Register &out_reg = layout_.at(target);
    auto in_regs = lookup(inputs);
    for (const auto *r : in_regs) {
        if (r->name == target) {
            throw std::invalid_argument("coherent_eval: target '" + target + "' is also an input");
        }
    }
    size_t out_shift = layout_.shift(out_reg);
    uint64_t out_mask = low_mask(out_reg.width);
    kernels::xor_relabel_parallel(terms_, [&](uint64_t label) -> uint64_t {
        std::array<uint64_t, kMaxOracleInputs> values{};
        for (size_t k = 0; k < in_regs.size(); k++) {
            values[k] = layout_.extract(label, *in_regs[k]);
        }
        uint64_t result = f(std::span<const uint64_t>(values.data(), in_regs.size()));
        if (result & ~out_mask) {
            throw std::invalid_argument("coherent_eval: function output wider than register '" + out_reg.name + "'");
        }
        return result << out_shift;
    });
    finish();
}

void SparseState::coherent_sample(const std::string &reg_name, std::span<const double> p) {
    const Register &reg = layout_.at(reg_name);
    if (reg.width > kMaxSuperposeWidth || p.size() != (size_t{1} << reg.width)) {
        throw std::invalid_argument("coherent_sample: table size must be 2^width");
    }
    double total = 0;
    for (double x : p) {
        if (!(x >= 0)) {
            throw std::invalid_argument("coherent_sample: negative probability");
        }
        total += x;
    }
    if (std::abs(total - 1) > kNormTolerance) {
        throw std::invalid_argument("coherent_sample: probabilities do not sum to 1");
    }
    require_zeroed(reg, "coherent_sample");
    std::vector<BasisTerm> out;
    for (const auto &t : terms_) {
        for (uint64_t v = 0; v < p.size(); v++) {
            if (p[v] > 0) {
                out.push_back({layout_.with_value(t.label, reg, v), t.amplitude * std::sqrt(p[v])});
            }
        }
    }
    terms_ = std::move(out);
    finish();
}

Distribution SparseState::marginal_distribution(const std::vector<std::string> &regs) const {
    auto rs = lookup(regs);
    Distribution out;
    for (const auto &t : terms_) {
        out[concatenated_value(t.label, rs)] += std::norm(t.amplitude);
    }
    return out;
}

double SparseState::postselect(const std::vector<std::string> &regs, uint64_t outcome) {
    auto rs = lookup(regs);
    std::vector<BasisTerm> kept;
    double p = 0;
    for (const auto &t : terms_) {
        if (concatenated_value(t.label, rs) == outcome) {
            kept.push_back(t);
            p += std::norm(t.amplitude);
        }
    }
    if (kept.empty() || !(p > 0)) {
        throw std::invalid_argument("postselect: outcome has zero probability");
    }
    kernels::scale_parallel(kept, 1 / std::sqrt(p));
    terms_ = std::move(kept);
    finish();
    return p;
}

MeasurementRecord SparseState::measure(const std::vector<std::string> &regs, CoinSource &coins) {
    auto rs = lookup(regs);
    size_t width = 0;
    for (const auto *r : rs) {
        width += r->width;
    }
    Distribution dist = marginal_distribution(regs);
    std::vector<uint64_t> outcomes;
    std::vector<double> weights;
    for (const auto &[value, p] : dist) {
        outcomes.push_back(value);
        weights.push_back(p);
    }
    uint64_t outcome = outcomes[coins.weighted(weights)];
    double p = postselect(regs, outcome);
    return {regs, BitVector::from_value(outcome, width), p};
}

double SparseState::fidelity_pure(const std::string &reg_name, Amplitude alpha, Amplitude beta) const {
    const Register &reg = layout_.at(reg_name);
    if (reg.width != 1) {
        throw std::invalid_argument("fidelity_pure: register '" + reg_name + "' is not one qubit wide");
    }
    uint64_t bit = layout_.with_value(0, reg, 1);
    // F = sum over complementary labels c of |<psi| (a_{0,c}, a_{1,c})|^2.
    std::map<uint64_t, std::pair<Amplitude, Amplitude>> by_rest;
    for (const auto &t : terms_) {
        auto &slot = by_rest[t.label & ~bit];
        ((t.label & bit) ? slot.second : slot.first) = t.amplitude;
    }
    double f = 0;
    for (const auto &[rest, amps] : by_rest) {
        f += std::norm(std::conj(alpha) * amps.first + std::conj(beta) * amps.second);
    }
    return std::clamp(f, 0.0, 1.0);
}

void SparseState::discard_zeroed(const std::string &reg_name) {
    const Register reg = layout_.at(reg_name);
    for (const auto &t : terms_) {
        if (layout_.extract(t.label, reg) != 0) {
            throw UncomputationError(
                "register '" + reg_name + "' is not uncomputed: label " + layout_.label_string(t.label));
        }
    }
    size_t s = layout_.shift(reg);
    for (auto &t : terms_) {
        uint64_t high = reg.offset == 0 ? 0 : (t.label >> (s + reg.width)) << s;
        t.label = high | (t.label & low_mask(s));
    }
    layout_.remove(reg_name);
    finish();
}

std::string SparseState::dump() const {
    std::string out;
    for (const auto &t : terms_) {
        out += layout_.label_string(t.label);
        out += ' ';
        out += format_real(t.amplitude.real());
        out += ' ';
        out += format_real(t.amplitude.imag());
        out += '\n';
    }
    return out;
}

}  // namespace qcommit
