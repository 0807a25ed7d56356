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

#include "tom/brain.h"
#include "tom/error.h"
#include "tom/parser.h"

namespace tom {
namespace {

struct ParserFixture : ::testing::Test {
  Brain brain;
  Parser parser{Lexicon::defaults()};
  Iri bram, lenka, selene;

  ParserFixture() {
    bram = brain.register_person("Bram");
    lenka = brain.register_person("Lenka");
    selene = brain.register_person("Selene");
  }

  ParseContext ctx(const Iri& speaker) const {
    ParseContext c;
    c.speaker = speaker;
    c.robot = friends("Leolani");
    c.recent_persons = {lenka, bram};
    c.brain = &brain;
    return c;
  }

  ParsedInput parse(std::string text, const Iri& speaker) const {
    Utterance u;
    u.text = std::move(text);
    u.speaker = speaker;
    return parser.parse(u, ctx(speaker));
  }

  StatementParse statement(std::string text, const Iri& speaker) const {
    auto p = parse(std::move(text), speaker);
    EXPECT_TRUE(std::holds_alternative<StatementParse>(p));
    return std::get<StatementParse>(p);
  }

  QuestionParse question(std::string text, const Iri& speaker) const {
    auto p = parse(std::move(text), speaker);
    EXPECT_TRUE(std::holds_alternative<QuestionParse>(p));
    return std::get<QuestionParse>(p);
  }
};

TEST(Tokenize, SplitsClitics) {
  auto t = tokenize("Bram's cat isn't here.");
  EXPECT_EQ(token_texts(t), (std::vector<std::string>{
                                "bram", "'s", "cat", "is", "n't", "here", "."}));
  EXPECT_EQ(t[0].begin, 0u);
  EXPECT_EQ(t[0].end, 4u);
  EXPECT_EQ(t[1].begin, 4u);
  EXPECT_EQ(t[1].end, 6u);
  EXPECT_TRUE(t.back().punct);
}

TEST(Tokenize, CountsCodePoints) {
  auto t = tokenize("Zoë likes café");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].end, 3u);
  EXPECT_EQ(t[2].begin, 10u);
  EXPECT_EQ(t[2].end, 14u);
}

TEST(Tokenize, KeepsHyphenatedWords) {
  EXPECT_EQ(token_texts(tokenize("science-fiction, ok")),
            (std::vector<std::string>{"science-fiction", ",", "ok"}));
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize("   ").empty());
}

TEST(LexiconTable, ParseAndOverride) {
  auto lex = Lexicon::parse("# c\nfoo\tnoun\tfoo\nfoo\tnoun\tbar\n");
  EXPECT_EQ(lex.size(), 1u);
  EXPECT_EQ(lex.find("foo", "noun"), "bar");
  try {
    Lexicon::parse("ok\tnoun\tok\nbroken line\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST_F(ParserFixture, Classify) {
  auto cls = [&](std::string_view s) { return parser.classify(tokenize(s)); };
  EXPECT_EQ(cls("Where is Bram from?"), InputClass::kQuestion);
  EXPECT_EQ(cls("Do you know Lenka"), InputClass::kQuestion);
  EXPECT_EQ(cls("Yes that is my name."), InputClass::kSocial);
  EXPECT_EQ(cls("My name is Selene."), InputClass::kSocial);
  EXPECT_EQ(cls("Hi Leolani"), InputClass::kSocial);
  EXPECT_EQ(cls("No, Bram is not laughing"), InputClass::kStatement);
  EXPECT_EQ(cls("I am from Serbia."), InputClass::kStatement);
}

TEST_F(ParserFixture, LaughStatements) {
  auto a = statement("Bram is laughing", lenka);
  EXPECT_EQ(a.subject, world("laugh"));
  EXPECT_EQ(a.predicate, sem("hasActor"));
  EXPECT_EQ(a.object, Term(bram));
  EXPECT_EQ(a.perspective.render(), "CONFIRM,CERTAIN");
  EXPECT_EQ(a.span.end, 16u);
  auto b = statement("No, Bram is not laughing", selene);
  EXPECT_EQ(b.subject, a.subject);
  EXPECT_EQ(b.object, a.object);
  EXPECT_EQ(b.perspective.polarity, Polarity::kDeny);
  EXPECT_EQ(b.span.end, 24u);
}

TEST_F(ParserFixture, IsFromPlace) {
  auto s = statement("I am from the Netherlands.", bram);
  EXPECT_EQ(s.subject, bram);
  EXPECT_EQ(s.predicate, n2mu("isFrom"));
  EXPECT_EQ(s.object, Term(world("Netherlands")));
  ASSERT_EQ(s.hints.size(), 1u);
  EXPECT_EQ(s.hints[0].label, "the Netherlands");
  EXPECT_EQ(s.hints[0].type, n2mu("Location"));
  EXPECT_EQ(statement("I am from Mexico.", selene).object,
            Term(world("Mexico")));
}

TEST_F(ParserFixture, LikesPhrases) {
  auto s = statement("Bram likes romantic movies.", lenka);
  EXPECT_EQ(s.subject, bram);
  EXPECT_EQ(s.predicate, n2mu("likes"));
  EXPECT_EQ(s.object, Term(world("romantic-movies")));
  EXPECT_EQ(s.hints.at(0).label, "romantic movies");
  EXPECT_EQ(statement("I like this rabbit.", bram).object,
            Term(world("rabbit")));
  auto more = statement("I like a cat more.", selene);
  EXPECT_EQ(more.object, Term(world("cat")));
  EXPECT_EQ(more.hints.at(0).type, n2mu("Cat"));
  EXPECT_EQ(statement("I do not like cats.", selene).perspective.polarity,
            Polarity::kDeny);
}

TEST_F(ParserFixture, GenericAction) {
  auto s = statement("A rabbit bites.", selene);
  EXPECT_EQ(s.subject, world("rabbit"));
  EXPECT_EQ(s.predicate, n2mu("does"));
  EXPECT_EQ(s.object, Term(world("bite")));
  EXPECT_EQ(statement("Rabbits cuddle.", bram).object, Term(world("cuddle")));
}

TEST_F(ParserFixture, OccupationAndName) {
  auto s = statement("I am a teacher.", bram);
  EXPECT_EQ(s.predicate, n2mu("hasOccupation"));
  EXPECT_EQ(s.object, Term(world("teacher")));
  auto n = statement("Bram's name is Bram.", lenka);
  EXPECT_EQ(n.predicate, n2mu("hasName"));
  EXPECT_EQ(n.object, Term::literal("Bram"));
}

TEST_F(ParserFixture, Correction) {
  auto p = parse("That is not a cat but a rabbit.", bram);
  ASSERT_TRUE(std::holds_alternative<CorrectionParse>(p));
  auto c = std::get<CorrectionParse>(p);
  EXPECT_EQ(c.wrong, "cat");
  EXPECT_EQ(c.right, "rabbit");
  EXPECT_EQ(c.wrong_class, n2mu("Cat"));
  EXPECT_EQ(c.right_class, n2mu("Rabbit"));
  EXPECT_EQ(c.wrong_span.end, 17u);
  EXPECT_EQ(c.full_span.end, 31u);
}

TEST_F(ParserFixture, Perspective) {
  auto pers = [&](std::string_view s) {
    return parser.extract_perspective(tokenize(s)).render();
  };
  EXPECT_EQ(pers("Maybe Bram is laughing"), "CONFIRM,UNCERTAIN");
  EXPECT_EQ(pers("I think Bram is laughing"), "CONFIRM,POSSIBLE");
  EXPECT_EQ(pers("Bram is probably not laughing"), "DENY,PROBABLE");
  EXPECT_EQ(pers("Bram is not never laughing"), "CONFIRM,CERTAIN");
  EXPECT_EQ(pers("No, Bram is not laughing"), "DENY,CERTAIN");
}

TEST_F(ParserFixture, Social) {
  auto s = std::get<SocialParse>(parse("My name is Selene.", selene));
  EXPECT_EQ(s.kind, SocialKind::kNameIntro);
  EXPECT_EQ(s.name, "Selene");
  EXPECT_EQ(std::get<SocialParse>(parse("Yes that is my name.", selene)).kind,
            SocialKind::kAffirm);
  EXPECT_EQ(std::get<SocialParse>(parse("No that is not my name", selene)).kind,
            SocialKind::kDeny);
  EXPECT_EQ(std::get<SocialParse>(parse("Bye", selene)).kind,
            SocialKind::kFarewell);
}

TEST_F(ParserFixture, Questions) {
  auto w = question("Where is Bram from?", lenka);
  EXPECT_EQ(w.kind, QuestionKind::kWhere);
  EXPECT_EQ(w.target, bram);
  EXPECT_FALSE(w.probe);
  auto dk = question("Do you know where I am from?", bram);
  EXPECT_EQ(dk.kind, QuestionKind::kWhere);
  EXPECT_EQ(dk.target, bram);
  EXPECT_TRUE(dk.probe);
  auto k = question("Do you also know Lenka?", bram);
  EXPECT_EQ(k.kind, QuestionKind::kYesNoFact);
  EXPECT_EQ(k.target, lenka);
  auto unknown = question("Do you know Zed?", bram);
  EXPECT_FALSE(unknown.target);
  EXPECT_EQ(unknown.target_name, "Zed");
  auto she = question("Where is she from?", bram);
  EXPECT_EQ(she.target, lenka);
  auto b = question("Do you believe Lenka?", bram);
  EXPECT_EQ(b.kind, QuestionKind::kBelieve);
  auto seen = question("Have you ever seen a cat?", selene);
  EXPECT_EQ(seen.kind, QuestionKind::kYesNoSeen);
  EXPECT_EQ(seen.object, n2mu("Cat"));
  auto what = question("What animals did you see?", selene);
  EXPECT_EQ(what.noun, "animal");
  EXPECT_EQ(what.patterns.size(), 3u);
  auto does = question("What does rabbit do?", selene);
  EXPECT_EQ(does.target, world("rabbit"));
  EXPECT_EQ(does.predicate, n2mu("does"));
  auto who = question("Who likes rabbits?", selene);
  EXPECT_EQ(who.kind, QuestionKind::kWho);
  EXPECT_EQ(who.object, world("rabbit"));
}

TEST_F(ParserFixture, Deixis) {
  auto c = ctx(bram);
  EXPECT_EQ(parser.resolve_deixis("I", c), bram);
  EXPECT_EQ(parser.resolve_deixis("you", c), friends("Leolani"));
  EXPECT_EQ(parser.resolve_deixis("she", c), lenka);
  EXPECT_EQ(parser.resolve_deixis("Selene", c), selene);
  c.recent_persons = {bram};
  EXPECT_THROW(parser.resolve_deixis("she", c), Error);
  c.speaker.reset();
  try {
    parser.resolve_deixis("I", c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnresolvedReference);
  }
}

TEST_F(ParserFixture, Failures) {
  try {
    parse("Florp zorp.", bram);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnparsableUtterance);
  }
  try {
    parse("Zed is from Spain.", bram);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnresolvedReference);
  }
  EXPECT_THROW(parse("", bram), Error);
}

// Every human line of the four golden dialogues parses.
TEST_F(ParserFixture, CorpusCoverage) {
  const std::vector<std::pair<std::string, Iri>> corpus = {
      {"My name is Selene.", selene},
      {"Yes that is my name.", selene},
      {"I am from Mexico.", selene},
      {"I am from Serbia.", lenka},
      {"Where is Bram from?", lenka},
      {"Bram likes romantic movies.", lenka},
      {"I like science fiction movies.", bram},
      {"Do you know where I am from?", bram},
      {"Do you also know Lenka?", bram},
      {"Where is she from?", bram},
      {"Do you believe Lenka?", bram},
      {"That is not a cat but a rabbit.", bram},
      {"I like this rabbit.", bram},
      {"A rabbit bites.", selene},
      {"I like a cat more.", selene},
      {"Have you ever seen a cat?", selene},
      {"What animals did you see?", selene},
      {"What does rabbit do?", selene},
      {"Who likes rabbits?", selene},
  };
  for (const auto& [text, speaker] : corpus) {
    EXPECT_NO_THROW(parse(text, speaker)) << text;
    for (const auto& tok : tokenize(text)) {
      if (tok.punct) continue;
      bool known = parser.lexicon().covers(tok.text) ||
                   brain.find_person_by_name(tok.surface).has_value();
      EXPECT_TRUE(known) << tok.text << " in " << text;
    }
  }
}

}  // namespace
}  // namespace tom
