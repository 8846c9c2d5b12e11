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

#ifndef QCOMMIT_ENGINE_H
#define QCOMMIT_ENGINE_H

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qcommit/gf2.h"

namespace qcommit {

enum class PartyId { kAlice, kBob, kAlyson };

/// Protocol phases in execution order. Unveil and Recover are alternative
/// endings; a transcript never contains both.
enum class Phase { kInit, kCommit, kWait, kUnveil, kRecover };

std::string_view to_string(PartyId party);
std::string_view to_string(Phase phase);
PartyId parse_party(std::string_view name);
Phase parse_phase(std::string_view name);

/// Classical value carried by a message.
using Payload = std::variant<bool, BitVector>;

struct Message {
    PartyId sender;
    PartyId receiver;
    Phase phase;
    uint64_t round;
    std::string name;
    Payload value;

    bool operator==(const Message &) const = default;
};

/// A message the topology does not allow at its phase.
class SeparationBreach : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Out-of-order, missing or mistyped transcript content.
class TranscriptError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Set of permitted (sender, receiver, phase) links.
class Topology {
   public:
    void permit(PartyId sender, PartyId receiver, Phase phase);
    bool permits(PartyId sender, PartyId receiver, Phase phase) const;
    /// Throws SeparationBreach when the link is not permitted.
    void require(PartyId sender, PartyId receiver, Phase phase) const;

    /// Alice and Bob, both directions, every phase.
    static Topology single_prover();
    /// Alice<->Bob and Alyson<->Bob in every phase. Alice<->Alyson only
    /// during Init and Recover.
    static Topology two_prover();

   private:
    std::set<std::tuple<PartyId, PartyId, Phase>> links_;
};

/// Ordered record of every classical message of one protocol execution.
class Transcript {
   public:
    /// Appends m after checking the topology, that rounds increase per
    /// (sender, receiver) pair, and that phases never go backwards.
    void send(const Topology &topology, Message m);

    /// send() with the next global round number.
    void post(const Topology &topology, PartyId sender, PartyId receiver, Phase phase, std::string name,
              Payload value);

    const std::vector<Message> &messages() const {
        return messages_;
    }
    bool empty() const {
        return messages_.empty();
    }

    /// Last message with the given name, or nullptr.
    const Message *find(std::string_view name) const;
    /// Typed accessors; throw TranscriptError when missing or of the wrong kind.
    bool bit(std::string_view name) const;
    const BitVector &bits(std::string_view name) const;

    /// Messages sent or received by `party`.
    Transcript view_of(PartyId party) const;

    /// Compact single-line form used as a distribution key.
    std::string canonical() const;

    nlohmann::json to_json() const;
    static Transcript from_json(const nlohmann::json &j);

    bool operator==(const Transcript &) const = default;

   private:
    std::vector<Message> messages_;
};

}  // namespace qcommit

#endif
