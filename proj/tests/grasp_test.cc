// Copyright 2026 The Tombrain Authors.
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

#include <gtest/gtest.h>

#include <random>

#include "support/random_brain.h"
#include "tom/brain.h"
#include "tom/error.h"

namespace tom {
namespace {

TEST(Ids, Shapes) {
  EXPECT_EQ(chat_id(1).compact(), "leolaniTalk:chat1");
  EXPECT_EQ(turn_id(1, 1).compact(), "leolaniTalk:chat1_turn1");
  EXPECT_EQ(turn_mention_id(1, 1, {0, 16}).compact(), "leolaniTalk:chat1_turn1_char0-16");
  EXPECT_EQ(attribution_id(turn_mention_id(1, 1, {0, 16}), 1).compact(),
            "leolaniTalk:chat1_turn1_char0-16_ATTR1");
  EXPECT_EQ(claim_id(1).compact(), "leolaniWorld:claim1");
}

TEST(Ids, RejectForeignShapes) {
  EXPECT_FALSE(parse_chat_id(world("chat1")));
  EXPECT_FALSE(parse_chat_id(talk("chat01")));
  EXPECT_FALSE(parse_turn_id(talk("chat1_turn")));
  EXPECT_FALSE(parse_turn_mention_id(talk("chat1_turn1_char5-3")));
  EXPECT_FALSE(parse_turn_mention_id(talk("chat1_turn1_char05-9")));
  EXPECT_FALSE(parse_claim_number(world("claim")));
  EXPECT_FALSE(is_generated_id(world("Bram")));
}

// Every minted id parses back to the numbers it was minted from.
TEST(IdsProperty, RoundTrip) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(1, 5000);
  for (int i = 0; i < 500; ++i) {
    int c = num(rng), t = num(rng);
    std::size_t a = static_cast<std::size_t>(num(rng));
    std::size_t b = a + static_cast<std::size_t>(num(rng));
    ASSERT_EQ(parse_chat_id(chat_id(c)), c);
    auto tr = parse_turn_id(turn_id(c, t));
    ASSERT_TRUE(tr);
    EXPECT_EQ(tr->chat, c);
    EXPECT_EQ(tr->turn, t);
    Iri m = turn_mention_id(c, t, {a, b});
    auto mr = parse_turn_mention_id(m);
    ASSERT_TRUE(mr);
    EXPECT_EQ(mr->first.chat, c);
    EXPECT_EQ(mr->second, (Span{a, b}));
    EXPECT_EQ(parse_attribution_index(attribution_id(m, t)), t);
    EXPECT_EQ(parse_claim_number(claim_id(c)), c);
    for (auto kind : {PerceptKind::kFace, PerceptKind::kObject}) {
      auto pr = parse_percept_id(percept_id(kind, c));
      ASSERT_TRUE(pr);
      EXPECT_EQ(pr->first, kind);
      EXPECT_EQ(pr->second, c);
    }
    EXPECT_EQ(parse_lookup_id(lookup_id(c)), c);
    EXPECT_TRUE(is_generated_id(m));
  }
}

TEST(Literals, EscapeRoundTrip) {
  std::mt19937 rng(5);
  const std::string alphabet = "ab \"\\\n\r\tx\xc3\xa9";
  for (int i = 0; i < 500; ++i) {
    std::string raw;
    int len = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int k = 0; k < len; ++k) raw += testing::pick(rng, std::vector<char>(alphabet.begin(), alphabet.end()));
    std::string esc = escape_literal(raw);
    EXPECT_EQ(esc.find('\n'), std::string::npos);
    EXPECT_EQ(unescape_literal(esc), raw);
  }
}

// serialize, deserialize, serialize is byte-identical and keeps registries.
TEST(DumpProperty, RoundTrip) {
  std::mt19937 rng(20180512);
  for (int i = 0; i < 30; ++i) {
    Brain b = testing::random_brain(rng, 400);
    std::string once = b.serialize();
    Brain back = Brain::deserialize(once);
    ASSERT_EQ(back.serialize(), once);
    EXPECT_TRUE(back == b);
    EXPECT_TRUE(back.registries_consistent());
    EXPECT_TRUE(b.registries_consistent());
  }
}

// Every triple a record projects to reads back as that record.
TEST(ProjectionProperty, ReadBack) {
  std::mt19937 rng(9);
  for (int i = 0; i < 10; ++i) {
    Brain b = testing::random_brain(rng, 300);
    for (const auto& c : b.claims().all()) EXPECT_EQ(read_claim(b.store(), c.id), c);
    for (const auto& m : b.mentions()) EXPECT_EQ(read_mention(b.store(), m.id), m);
    for (const auto& a : b.attributions()) {
      EXPECT_EQ(read_attribution(b.store(), a.id), a);
    }
    for (const auto& c : b.chats()) EXPECT_EQ(read_chat(b.store(), c.id), c);
    for (const auto& t : b.turns()) EXPECT_EQ(read_turn(b.store(), t.id), t);
  }
}

}  // namespace
}  // namespace tom
