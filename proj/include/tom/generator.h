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

// Template-based English rendering of triples, answers, conflicts, gap
// questions and social acts.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tom/brain.h"
#include "tom/grasp.h"
#include "tom/lexicon.h"
#include "tom/parser.h"
#include "tom/term.h"

namespace tom {

enum class SourcePolicy { kBare, kAttach };

struct ResponseContext {
  Iri addressee;
  Iri robot;
  SourcePolicy policy = SourcePolicy::kBare;
};

// Rows `predicate<TAB>form<TAB>template`. Predicates are compact IRIs, or
// `social` for act templates. Forms: third, second, generic, question,
// unknown, with `-neg` for denial and `+said`/`+says` for fixed renderings
// that include the source. The special row `<p> slot object` makes the
// object the person slot of p.
class TemplateTable {
 public:
  static TemplateTable defaults();
  static TemplateTable parse(std::string_view text);
  static TemplateTable load(const std::string& path);

  std::optional<std::string> find(std::string_view predicate,
                                  std::string_view form) const;
  bool has_predicate(std::string_view predicate) const;
  // Predicates of the ontology with no `third` template.
  std::vector<Iri> uncovered(const Ontology& ontology) const;

 private:
  std::map<std::pair<std::string, std::string>, std::string, std::less<>>
      rows_;
};

// One answered fact with the source it is cited from.
struct AnswerItem {
  Iri subject;
  Iri predicate;
  Term object;
  std::optional<Iri> source;
  Polarity polarity = Polarity::kConfirm;
};

class Generator {
 public:
  Generator(TemplateTable templates, Lexicon lexicon);

  const TemplateTable& templates() const { return templates_; }

  // Throws kMissingTemplate.
  std::string phrase_triple(const Brain& brain, const Iri& s, const Iri& p,
                            const Term& o, const std::optional<Iri>& source,
                            Polarity polarity,
                            const ResponseContext& ctx) const;
  // The bare statement without its final stop or leading capital, for
  // embedding ("You told me that ...").
  std::string phrase_clause(const Brain& brain, const Iri& s, const Iri& p,
                            const Term& o, Polarity polarity,
                            const ResponseContext& ctx) const;
  std::vector<std::string> phrase_answer(const Brain& brain,
                                         const QuestionParse& question,
                                         const std::vector<AnswerItem>& items,
                                         const ResponseContext& ctx) const;
  // Throws kPreconditionViolation for fewer than two entries.
  std::vector<std::string> phrase_conflict(const Brain& brain,
                                           const ConflictReport& report,
                                           const ResponseContext& ctx) const;
  std::string phrase_gap_question(const Brain& brain, const Iri& person,
                                  const Iri& slot, bool name_prefixed,
                                  const ResponseContext& ctx) const;
  // Throws kMissingTemplate for an unknown kind.
  std::string phrase_social(
      std::string_view kind,
      const std::map<std::string, std::string>& args = {}) const;

  // "a rabbit and a panda"
  std::string indefinite_list(const std::vector<std::string>& labels) const;
  std::string name_of(const Brain& brain, const Term& t) const;
  // "she"/"her", "he"/"him", "they"/"them" from the lexicon.
  std::pair<std::string, std::string> pronouns(const Brain& brain,
                                               const Iri& person) const;

 private:
  std::string render(std::string_view tmpl,
                     const std::map<std::string, std::string>& slots) const;
  std::string form_for(const Brain& brain, const Iri& s, const Iri& p,
                       const Term& o, Polarity polarity,
                       const ResponseContext& ctx) const;
  std::string require(std::string_view predicate, std::string_view form) const;

  TemplateTable templates_;
  Lexicon lexicon_;
};

std::string capitalize_first(std::string s);

}  // namespace tom
