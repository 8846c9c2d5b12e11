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

#include <gtest/gtest.h>

using namespace qcommit;

namespace {

const PartyId A = PartyId::kAlice;
const PartyId B = PartyId::kBob;
const PartyId L = PartyId::kAlyson;

}  // namespace

TEST(engine, names_round_trip) {
    for (PartyId p : {A, B, L}) {
        ASSERT_EQ(parse_party(to_string(p)), p);
    }
    for (Phase p : {Phase::kInit, Phase::kCommit, Phase::kWait, Phase::kUnveil, Phase::kRecover}) {
        ASSERT_EQ(parse_phase(to_string(p)), p);
    }
    ASSERT_THROW(parse_party("Eve"), TranscriptError);
    ASSERT_THROW(parse_phase("Later"), TranscriptError);
}

TEST(engine, send_appends) {
    Transcript t;
    t.post(Topology::single_prover(), A, B, Phase::kCommit, "r_1", true);
    ASSERT_EQ(t.messages().size(), 1);
    ASSERT_EQ(t.messages()[0].round, 1u);
    ASSERT_TRUE(t.bit("r_1"));
}

TEST(engine, two_prover_separation) {
    const Topology &topo = Topology::two_prover();
    ASSERT_TRUE(topo.permits(A, L, Phase::kInit));
    ASSERT_FALSE(topo.permits(A, L, Phase::kCommit));
    ASSERT_FALSE(topo.permits(L, A, Phase::kWait));
    ASSERT_FALSE(topo.permits(A, L, Phase::kUnveil));
    ASSERT_TRUE(topo.permits(A, L, Phase::kRecover));
    ASSERT_TRUE(topo.permits(L, B, Phase::kUnveil));

    Transcript t;
    ASSERT_THROW(t.post(topo, A, L, Phase::kCommit, "leak", true), SeparationBreach);
    ASSERT_TRUE(t.empty());
    t.post(topo, A, L, Phase::kRecover, "reunion", true);
    ASSERT_EQ(t.messages().size(), 1);
}

TEST(engine, single_prover_has_no_alyson) {
    Transcript t;
    ASSERT_THROW(t.post(Topology::single_prover(), A, L, Phase::kInit, "x", true), SeparationBreach);
}

TEST(engine, rounds_increase_per_link) {
    Transcript t;
    const Topology &topo = Topology::single_prover();
    t.send(topo, Message{A, B, Phase::kCommit, 5, "a", true});
    ASSERT_THROW(t.send(topo, Message{A, B, Phase::kCommit, 5, "b", true}), TranscriptError);
    ASSERT_THROW(t.send(topo, Message{A, B, Phase::kCommit, 4, "b", true}), TranscriptError);
    t.send(topo, Message{B, A, Phase::kCommit, 1, "c", true});
    t.send(topo, Message{A, B, Phase::kCommit, 6, "d", true});
}

TEST(engine, phases_are_monotone) {
    Transcript t;
    const Topology &topo = Topology::single_prover();
    t.post(topo, A, B, Phase::kUnveil, "b", true);
    ASSERT_THROW(t.post(topo, A, B, Phase::kCommit, "z", true), TranscriptError);
    ASSERT_THROW(t.post(topo, A, B, Phase::kRecover, "z", true), TranscriptError);
}

TEST(engine, typed_accessors) {
    Transcript t;
    t.post(Topology::single_prover(), B, A, Phase::kCommit, "h_1", BitVector::from_string("101"));
    t.post(Topology::single_prover(), A, B, Phase::kCommit, "z", false);
    ASSERT_EQ(t.bits("h_1").str(), "101");
    ASSERT_FALSE(t.bit("z"));
    ASSERT_THROW(t.bit("h_1"), TranscriptError);
    ASSERT_THROW(t.bits("z"), TranscriptError);
    ASSERT_THROW(t.bit("missing"), TranscriptError);
    ASSERT_EQ(t.find("missing"), nullptr);
}

TEST(engine, view_and_canonical) {
    Transcript t;
    const Topology &topo = Topology::two_prover();
    t.post(topo, A, L, Phase::kInit, "r'", BitVector::from_string("01"));
    t.post(topo, B, A, Phase::kCommit, "m_1", BitVector::from_string("11"));
    t.post(topo, A, B, Phase::kCommit, "z", BitVector::from_string("10"));
    ASSERT_EQ(t.view_of(B).canonical(), "Bob>Alice:m_1=11;Alice>Bob:z=10");
    ASSERT_EQ(t.view_of(L).messages().size(), 1);
    ASSERT_EQ(t.canonical(), "Alice>Alyson:r'=01;Bob>Alice:m_1=11;Alice>Bob:z=10");
}

TEST(engine, json_shape) {
    Transcript t;
    t.post(Topology::single_prover(), B, A, Phase::kCommit, "h_1", BitVector::from_string("10"));
    t.post(Topology::single_prover(), A, B, Phase::kCommit, "r_1", true);
    nlohmann::json want = nlohmann::json::parse(R"([
        {"sender": "Bob", "receiver": "Alice", "phase": "Commit", "round": 1, "name": "h_1", "value": "10"},
        {"sender": "Alice", "receiver": "Bob", "phase": "Commit", "round": 2, "name": "r_1", "value": 1}
    ])");
    ASSERT_EQ(t.to_json(), want);
    ASSERT_EQ(Transcript::from_json(want), t);
}

TEST(engine, json_rejects_malformed) {
    ASSERT_THROW(Transcript::from_json(nlohmann::json::object()), TranscriptError);
    ASSERT_THROW(Transcript::from_json(nlohmann::json::parse(R"([{"sender": "Bob"}])")), TranscriptError);
    ASSERT_THROW(Transcript::from_json(nlohmann::json::parse(
                     R"([{"sender": "Bob", "receiver": "Alice", "phase": "Commit", "round": 1, "name": "x", "value": 2}])")),
                 TranscriptError);
}
