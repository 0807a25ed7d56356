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

#include <algorithm>
#include <sstream>

#include "tom/brain.h"
#include "tom/error.h"
#include "tom/lookup.h"

namespace tom {
namespace {

Perspective persp(std::string_view s) { return Perspective::parse(s); }

struct LaughScenario {
  Brain brain;
  Iri lenka, selene, bram, laugh;
  ChatRecord chat1, chat2;
  Assertion first, denial, revision;

  LaughScenario() {
    lenka = brain.register_person("Lenka");
    selene = brain.register_person("Selene");
    bram = brain.register_person("Bram");
    laugh = world("laugh");
    Date d;
    chat1 = brain.open_chat(lenka, d);
    first = brain.assert_statement(lenka, chat1, "Bram is laughing", {0, 16},
                                   laugh, sem("hasActor"), bram,
                                   persp("CONFIRM,UNCERTAIN,SURPRISE"), d);
    chat2 = brain.open_chat(selene, d);
    denial = brain.assert_statement(selene, chat2, "No, Bram is not laughing",
                                    {0, 24}, laugh, sem("hasActor"), bram,
                                    persp("DENY,CERTAIN"), d);
    revision = brain.assert_statement(lenka, chat1, "Yes, you are right",
                                      {0, 18}, laugh, sem("hasActor"), bram,
                                      persp("DENY,CERTAIN"), d);
    brain.record_percept(PerceptKind::kFace, bram, 0.95, bram, {bram},
                         std::nullopt, d);
  }
};

TEST(Brain, LaughScenarioIds) {
  LaughScenario s;
  EXPECT_EQ(s.first.claim.id.compact(), "leolaniWorld:claim1");
  EXPECT_TRUE(s.first.claim_is_new);
  EXPECT_FALSE(s.denial.claim_is_new);
  EXPECT_EQ(s.denial.claim.id, s.first.claim.id);
  EXPECT_EQ(s.first.mention.id.compact(), "leolaniTalk:chat1_turn1_char0-16");
  EXPECT_EQ(s.denial.mention.id.compact(), "leolaniTalk:chat2_turn1_char0-24");
  EXPECT_EQ(s.revision.attribution.id.compact(),
            "leolaniTalk:chat1_turn2_char0-18_ATTR2");
  EXPECT_EQ(s.brain.claims().size(), 1u);
}

TEST(Brain, PerspectivesChronological) {
  LaughScenario s;
  auto ps = s.brain.perspectives_on(s.first.claim.id);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0].source, s.lenka);
  EXPECT_EQ(ps[0].attribution.perspective.render(), "CONFIRM,UNCERTAIN,SURPRISE");
  EXPECT_EQ(ps[1].source, s.selene);
  EXPECT_EQ(ps[2].source, s.lenka);
  EXPECT_EQ(ps[2].attribution.perspective.render(), "DENY,CERTAIN");
}

TEST(Brain, PerspectiveConflictResolvedByRevision) {
  Brain b;
  Iri lenka = b.register_person("Lenka");
  Iri selene = b.register_person("Selene");
  Iri bram = b.register_person("Bram");
  Date d;
  auto c1 = b.open_chat(lenka, d);
  auto a = b.assert_statement(lenka, c1, "Bram is laughing", {0, 16},
                              world("laugh"), sem("hasActor"), bram,
                              persp("CONFIRM"), d);
  auto c2 = b.open_chat(selene, d);
  b.assert_statement(selene, c2, "No, Bram is not laughing", {0, 24},
                     world("laugh"), sem("hasActor"), bram, persp("DENY"), d);
  EXPECT_TRUE(b.detect_perspective_conflicts(a.claim.id).has_value());
  b.assert_statement(lenka, c1, "Yes, you are right", {0, 18}, world("laugh"),
                     sem("hasActor"), bram, persp("DENY,CERTAIN"), d);
  EXPECT_FALSE(b.detect_perspective_conflicts(a.claim.id).has_value());
  EXPECT_FALSE(b.believes(lenka, a.claim.id));
  EXPECT_FALSE(b.believes(bram, a.claim.id));
}

TEST(Brain, SpanOutOfBounds) {
  Brain b;
  Iri lenka = b.register_person("Lenka");
  auto c = b.open_chat(lenka, Date());
  try {
    b.assert_statement(lenka, c, "Bram is laughing", {0, 999}, world("laugh"),
                       sem("hasActor"), friends("Bram"), persp("CONFIRM"),
                       Date());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSpanOutOfBounds);
  }
  EXPECT_TRUE(b.turns().empty());
}

TEST(Brain, ValueConflictOnlyForFunctional) {
  Brain b;
  Iri lenka = b.register_person("Lenka");
  Iri bram = b.register_person("Bram");
  Date d;
  auto c = b.open_chat(lenka, d);
  b.assert_statement(lenka, c, "Bram likes romantic movies", {0, 26}, bram,
                     n2mu("likes"), world("romantic-movies"), persp("CONFIRM"),
                     d);
  EXPECT_FALSE(b.detect_value_conflicts(bram, n2mu("likes")));
  auto c2 = b.open_chat(bram, d);
  b.assert_statement(bram, c2, "I like science fiction movies", {0, 29}, bram,
                     n2mu("likes"), world("science-fiction-movies"),
                     persp("CONFIRM"), d);
  auto r = b.detect_value_conflicts(bram, n2mu("likes"));
  ASSERT_TRUE(r);
  ASSERT_EQ(r->entries.size(), 2u);
  EXPECT_EQ(r->entries[0].source, lenka);
  EXPECT_EQ(r->entries[1].source, bram);
  for (int i = 0; i < 5; ++i) {
    b.assert_statement(bram, c2, "Rabbits do things", {0, 17}, world("rabbit"),
                       n2mu("does"), world("thing" + std::to_string(i)),
                       persp("CONFIRM"), d);
  }
  EXPECT_FALSE(b.detect_value_conflicts(world("rabbit"), n2mu("does")));
  EXPECT_THROW(b.detect_value_conflicts(bram, n2mu("nosuch")), Error);
}

TEST(Brain, Gaps) {
  Brain b;
  Iri lenka = b.register_person("Lenka");
  EXPECT_EQ(b.detect_gaps(lenka).size(), 3u);
  auto c = b.open_chat(lenka, Date());
  b.assert_statement(lenka, c, "I am from Serbia", {0, 16}, lenka,
                     n2mu("isFrom"), world("Serbia"), persp("CONFIRM"), Date());
  auto gaps = b.detect_gaps(lenka);
  ASSERT_EQ(gaps.size(), 2u);
  EXPECT_EQ(gaps[0], n2mu("hasOccupation"));
  EXPECT_THROW(b.detect_gaps(world("Serbia")), Error);
}

TEST(Brain, BelievesLatestWins) {
  Brain b;
  Iri lenka = b.register_person("Lenka");
  auto c = b.open_chat(lenka, Date("20180512"));
  auto a = b.assert_statement(lenka, c, "I am from Serbia", {0, 16}, lenka,
                              n2mu("isFrom"), world("Serbia"),
                              persp("CONFIRM"), Date("20180512"));
  EXPECT_TRUE(b.believes(lenka, a.claim.id));
  // An older-dated denial does not override the newer confirmation.
  b.assert_statement(lenka, c, "I am not from Serbia", {0, 20}, lenka,
                     n2mu("isFrom"), world("Serbia"), persp("DENY"),
                     Date("20170101"));
  EXPECT_TRUE(b.believes(lenka, a.claim.id));
  EXPECT_THROW(b.believes(lenka, world("claim99")), Error);
}

TEST(Brain, ExternalLookupStoresServiceClaim) {
  Brain b;
  FixtureLookup geo = FixtureLookup::geo();
  auto r = b.external_lookup(world("Mexico"), n2mu("isLocatedIn"), geo, Date());
  ASSERT_TRUE(r);
  EXPECT_EQ(r->value, Term(world("NorthAmerica")));
  EXPECT_EQ(r->provenance, "fixture:geo");
  EXPECT_EQ(r->mention.attributed_to, service_iri("fixture:geo"));
  EXPECT_FALSE(b.external_lookup(world("Mars"), n2mu("isLocatedIn"), geo,
                                 Date()));
  RemoteLookup remote("http://localhost:1", false);
  try {
    remote.lookup(world("Mexico"), n2mu("isLocatedIn"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLookupUnavailable);
  }
}

TEST(Brain, DumpRoundTrip) {
  LaughScenario s;
  std::string dump = s.brain.serialize();
  Brain back = Brain::deserialize(dump);
  EXPECT_EQ(back.serialize(), dump);
  EXPECT_TRUE(back == s.brain);
  EXPECT_TRUE(back.registries_consistent());
  EXPECT_EQ(back.perspectives_on(world("claim1")).size(), 3u);
}

TEST(Brain, DumpParseErrorLine) {
  Brain b;
  std::string dump = b.serialize();
  dump += "leolaniWorld:x rdfs:label\n";
  try {
    Brain::deserialize(dump);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), static_cast<std::size_t>(
                            std::count(dump.begin(), dump.end(), '\n')));
  }
}

TEST(Brain, EmptyStoreDumpIsHeaderOnly) {
  TripleStore empty;
  std::string dump = serialize_store(empty, PrefixTable::defaults());
  std::istringstream in(dump);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line); ++lines) {
    if (!line.empty()) EXPECT_EQ(line.rfind("@prefix ", 0), 0u) << line;
  }
  EXPECT_EQ(lines, PrefixTable::defaults().entries().size() + 1);
}

}  // namespace
}  // namespace tom
