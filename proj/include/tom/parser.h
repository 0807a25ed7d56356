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

#pragma once

// Rule-based utterance understanding: classification, statement and
// question templates, perspective cues and deixis.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tom/grasp.h"
#include "tom/lexicon.h"
#include "tom/store.h"
#include "tom/term.h"

namespace tom {

class Brain;

struct Utterance {
  std::string text;
  std::optional<Iri> speaker;
  double confidence = 1.0;
  Date date;
  // Non-textual cues (prosody) that replace the perspective inferred from
  // the words.
  std::optional<Perspective> perspective;
};

// Label/type the brain should hold for an instance a parse refers to.
struct InstanceHint {
  Iri iri;
  std::string label;
  std::optional<Iri> type;
};

struct StatementParse {
  Iri subject;
  Iri predicate;
  Term object;
  Perspective perspective;
  Span span;
  std::vector<InstanceHint> hints;
};

enum class QuestionKind {
  kWhere,
  kWho,
  kWhat,
  kYesNoFact,
  kYesNoSeen,
  kBelieve,
};

struct QuestionParse {
  QuestionKind kind = QuestionKind::kWhat;
  std::vector<TriplePattern> patterns;
  // The person or thing asked about, when there is one.
  std::optional<Iri> target;
  // Name as spoken, kept when the target is not a known person.
  std::string target_name;
  std::optional<Iri> predicate;
  std::optional<Iri> object;
  // Lexicon noun for seen-questions ("cat", "animal").
  std::string noun;
  // "do you know ...", "have you ever ...", "do you believe ..."
  bool probe = false;
};

enum class SocialKind { kGreeting, kFarewell, kAffirm, kDeny, kNameIntro };

struct SocialParse {
  SocialKind kind = SocialKind::kGreeting;
  std::string name;
  double confidence = 1.0;
};

struct CorrectionParse {
  std::string wrong;
  std::string right;
  Iri wrong_class;
  Iri right_class;
  Span wrong_span;  // "that is not a cat"
  Span full_span;
  Perspective perspective;
};

using ParsedInput =
    std::variant<StatementParse, QuestionParse, SocialParse, CorrectionParse>;

enum class InputClass { kStatement, kQuestion, kSocial };

struct ParseContext {
  std::optional<Iri> speaker;
  Iri robot;
  // Persons mentioned so far in the conversation, most recent last.
  std::vector<Iri> recent_persons;
  const Brain* brain = nullptr;
};

class Parser {
 public:
  explicit Parser(Lexicon lexicon);

  const Lexicon& lexicon() const { return lexicon_; }

  InputClass classify(const std::vector<Token>& tokens) const;
  // Throws kUnparsableUtterance or kUnresolvedReference.
  ParsedInput parse(const Utterance& u, const ParseContext& ctx) const;
  ParsedInput parse_statement(const std::vector<Token>& tokens,
                              std::size_t text_length,
                              const ParseContext& ctx) const;
  QuestionParse parse_question(const std::vector<Token>& tokens,
                               const ParseContext& ctx) const;
  std::optional<SocialParse> parse_social(const std::vector<Token>& tokens,
                                          double confidence) const;
  Perspective extract_perspective(const std::vector<Token>& tokens) const;
  // Throws kUnresolvedReference.
  Iri resolve_deixis(std::string_view surface, const ParseContext& ctx) const;

 private:
  struct Phrase;
  std::optional<Phrase> entity(const std::vector<Token>& toks,
                               const ParseContext& ctx, bool person_slot) const;
  Phrase thing(const std::vector<Token>& toks) const;
  Phrase place(const std::vector<Token>& toks) const;

  Lexicon lexicon_;
};

}  // namespace tom
