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

#include "qcommit/engine.h"

#include <array>
#include <map>

namespace qcommit {

namespace {

constexpr std::array<std::pair<PartyId, std::string_view>, 3> kPartyNames{{
    {PartyId::kAlice, "Alice"},
    {PartyId::kBob, "Bob"},
    {PartyId::kAlyson, "Alyson"},
}};

constexpr std::array<std::pair<Phase, std::string_view>, 5> kPhaseNames{{
    {Phase::kInit, "Init"},
    {Phase::kCommit, "Commit"},
    {Phase::kWait, "Wait"},
    {Phase::kUnveil, "Unveil"},
    {Phase::kRecover, "Recover"},
}};

constexpr std::array<Phase, 5> kAllPhases{Phase::kInit, Phase::kCommit, Phase::kWait, Phase::kUnveil, Phase::kRecover};

std::string payload_string(const Payload &p) {
    if (const bool *b = std::get_if<bool>(&p)) {
        return *b ? "1" : "0";
    }
    return std::get<BitVector>(p).str();
}

}  // namespace

std::string_view to_string(PartyId party) {
    for (const auto &[id, name] : kPartyNames) {
        if (id == party) {
            return name;
        }
    }
    return "?";
}

std::string_view to_string(Phase phase) {
    for (const auto &[id, name] : kPhaseNames) {
        if (id == phase) {
            return name;
        }
    }
    return "?";
}

PartyId parse_party(std::string_view name) {
    for (const auto &[id, n] : kPartyNames) {
        if (n == name) {
            return id;
        }
    }
    throw TranscriptError("unknown party '" + std::string(name) + "'");
}

Phase parse_phase(std::string_view name) {
    for (const auto &[id, n] : kPhaseNames) {
        if (n == name) {
            return id;
        }
    }
    throw TranscriptError("unknown phase '" + std::string(name) + "'");
}

void Topology::permit(PartyId sender, PartyId receiver, Phase phase) {
    links_.emplace(sender, receiver, phase);
}

bool Topology::permits(PartyId sender, PartyId receiver, Phase phase) const {
    return links_.count({sender, receiver, phase}) > 0;
}

void Topology::require(PartyId sender, PartyId receiver, Phase phase) const {
    if (!permits(sender, receiver, phase)) {
        throw SeparationBreach(
            std::string(to_string(sender)) + " -> " + std::string(to_string(receiver)) + " is not permitted during " +
            std::string(to_string(phase)));
    }
}

Topology Topology::single_prover() {
    Topology t;
    for (Phase p : kAllPhases) {
        t.permit(PartyId::kAlice, PartyId::kBob, p);
        t.permit(PartyId::kBob, PartyId::kAlice, p);
    }
    return t;
}

Topology Topology::two_prover() {
    Topology t;
    for (Phase p : kAllPhases) {
        t.permit(PartyId::kAlice, PartyId::kBob, p);
        t.permit(PartyId::kBob, PartyId::kAlice, p);
        t.permit(PartyId::kAlyson, PartyId::kBob, p);
        t.permit(PartyId::kBob, PartyId::kAlyson, p);
    }
    for (Phase p : {Phase::kInit, Phase::kRecover}) {
        t.permit(PartyId::kAlice, PartyId::kAlyson, p);
        t.permit(PartyId::kAlyson, PartyId::kAlice, p);
    }
    return t;
}

void Transcript::send(const Topology &topology, Message m) {
    topology.require(m.sender, m.receiver, m.phase);
    for (auto it = messages_.rbegin(); it != messages_.rend(); ++it) {
        if (it->sender == m.sender && it->receiver == m.receiver) {
            if (m.round <= it->round) {
                throw TranscriptError("round " + std::to_string(m.round) + " does not follow round " +
                                      std::to_string(it->round) + " on the same link");
            }
            break;
        }
    }
    if (!messages_.empty()) {
        Phase last = messages_.back().phase;
        bool exclusive_endings = (last == Phase::kUnveil && m.phase == Phase::kRecover);
        if (m.phase < last || exclusive_endings) {
            throw TranscriptError("phase " + std::string(to_string(m.phase)) + " cannot follow " +
                                  std::string(to_string(last)));
        }
    }
    messages_.push_back(std::move(m));
}

void Transcript::post(const Topology &topology, PartyId sender, PartyId receiver, Phase phase, std::string name,
                      Payload value) {
    uint64_t round = messages_.empty() ? 1 : messages_.back().round + 1;
    send(topology, Message{sender, receiver, phase, round, std::move(name), std::move(value)});
}

const Message *Transcript::find(std::string_view name) const {
    for (auto it = messages_.rbegin(); it != messages_.rend(); ++it) {
        if (it->name == name) {
            return &*it;
        }
    }
    return nullptr;
}

bool Transcript::bit(std::string_view name) const {
    const Message *m = find(name);
    if (m == nullptr || !std::holds_alternative<bool>(m->value)) {
        throw TranscriptError("transcript has no bit '" + std::string(name) + "'");
    }
    return std::get<bool>(m->value);
}

const BitVector &Transcript::bits(std::string_view name) const {
    const Message *m = find(name);
    if (m == nullptr || !std::holds_alternative<BitVector>(m->value)) {
        throw TranscriptError("transcript has no bit string '" + std::string(name) + "'");
    }
    return std::get<BitVector>(m->value);
}

Transcript Transcript::view_of(PartyId party) const {
    Transcript out;
    for (const auto &m : messages_) {
        if (m.sender == party || m.receiver == party) {
            out.messages_.push_back(m);
        }
    }
    return out;
}

std::string Transcript::canonical() const {
    std::string out;
    for (const auto &m : messages_) {
        if (!out.empty()) {
            out += ';';
        }
        out += to_string(m.sender);
        out += '>';
        out += to_string(m.receiver);
        out += ':';
        out += m.name;
        out += '=';
        out += payload_string(m.value);
    }
    return out;
}

nlohmann::json Transcript::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &m : messages_) {
        nlohmann::json value;
        if (const bool *b = std::get_if<bool>(&m.value)) {
            value = *b ? 1 : 0;
        } else {
            value = std::get<BitVector>(m.value).str();
        }
        out.push_back({
            {"sender", to_string(m.sender)},
            {"receiver", to_string(m.receiver)},
            {"phase", to_string(m.phase)},
            {"round", m.round},
            {"name", m.name},
            {"value", value},
        });
    }
    return out;
}

Transcript Transcript::from_json(const nlohmann::json &j) {
    if (!j.is_array()) {
        throw TranscriptError("transcript JSON must be an array");
    }
    Transcript out;
    try {
        for (const auto &e : j) {
            Message m{
                parse_party(e.at("sender").get<std::string>()),
                parse_party(e.at("receiver").get<std::string>()),
                parse_phase(e.at("phase").get<std::string>()),
                e.at("round").get<uint64_t>(),
                e.at("name").get<std::string>(),
                false,
            };
            const auto &v = e.at("value");
            if (v.is_string()) {
                m.value = BitVector::from_string(v.get<std::string>());
            } else {
                int bit = v.get<int>();
                if (bit != 0 && bit != 1) {
                    throw TranscriptError("bit value must be 0 or 1");
                }
                m.value = bit == 1;
            }
            out.messages_.push_back(std::move(m));
        }
    } catch (const nlohmann::json::exception &e) {
        throw TranscriptError(std::string("malformed transcript JSON: ") + e.what());
    }
    return out;
}

}  // namespace qcommit
