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

#include "tom/generator.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "tom/error.h"

namespace tom {

extern const char* const kDefaultTemplatesText;

namespace {

std::string lower(std::string s) {
  for (auto& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

std::string strip_stop(std::string s) {
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string with_article(const std::string& noun) {
  if (noun.empty()) return noun;
  char c = static_cast<char>(std::tolower(static_cast<unsigned char>(noun[0])));
  bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return (vowel ? "an " : "a ") + noun;
}

}  // namespace

std::string capitalize_first(std::string s) {
  if (!s.empty()) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

// -- table ---------------------------------------------------------------------

TemplateTable TemplateTable::defaults() {
  static const TemplateTable table = parse(kDefaultTemplatesText);
  return table;
}

TemplateTable TemplateTable::parse(std::string_view text) {
  TemplateTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      throw ParseError(ErrorCode::kParseError, n,
                       "expected predicate<TAB>form<TAB>template");
    }
    t.rows_[{line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1)}] =
        line.substr(t2 + 1);
  }
  return t;
}

TemplateTable TemplateTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::optional<std::string> TemplateTable::find(std::string_view predicate,
                                               std::string_view form) const {
  auto it = rows_.find(std::make_pair(std::string(predicate), std::string(form)));
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

bool TemplateTable::has_predicate(std::string_view predicate) const {
  return find(predicate, "third").has_value();
}

std::vector<Iri> TemplateTable::uncovered(const Ontology& ontology) const {
  std::vector<Iri> out;
  for (const auto& [id, info] : ontology.predicates()) {
    if (!has_predicate(id.compact())) out.push_back(id);
  }
  return out;
}

// -- generator -----------------------------------------------------------------

Generator::Generator(TemplateTable templates, Lexicon lexicon)
    : templates_(std::move(templates)), lexicon_(std::move(lexicon)) {}

std::string Generator::require(std::string_view predicate,
                               std::string_view form) const {
  auto t = templates_.find(predicate, form);
  if (!t) {
    throw Error(ErrorCode::kMissingTemplate,
                std::string(predicate) + " " + std::string(form));
  }
  return *t;
}

std::string Generator::render(
    std::string_view tmpl,
    const std::map<std::string, std::string>& slots) const {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      out += tmpl[i++];
      continue;
    }
    auto close = tmpl.find('}', i);
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unterminated slot in " + std::string(tmpl));
    }
    std::string slot(tmpl.substr(i + 1, close - i - 1));
    std::string mod;
    if (auto colon = slot.find(':'); colon != std::string::npos) {
      mod = slot.substr(colon + 1);
      slot = slot.substr(0, colon);
    }
    auto it = slots.find(slot);
    if (it == slots.end()) {
      throw Error(ErrorCode::kInvalidArgument, "no value for {" + slot + "}");
    }
    std::string v = it->second;
    if (mod == "plural") {
      if (auto pl = lexicon_.find(lower(v), "plural")) v = *pl;
    } else if (mod == "gerund") {
      if (auto g = lexicon_.surface_for("gerund", lower(v))) {
        v = *g;
      } else {
        v += "ing";
      }
    } else if (mod == "a") {
      v = with_article(v);
    } else if (!mod.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown modifier " + mod);
    }
    out += v;
    i = close + 1;
  }
  return out;
}

std::string Generator::name_of(const Brain& brain, const Term& t) const {
  if (t.is_literal()) return t.as_literal().lexical;
  const Iri& iri = t.iri();
  if (auto l = brain.label_of(iri)) return *l;
  std::string local = iri.local();
  for (auto& c : local) {
    if (c == '-' || c == '_') c = ' ';
  }
  return local;
}

std::pair<std::string, std::string> Generator::pronouns(
    const Brain& brain, const Iri& person) const {
  auto g = lexicon_.find(lower(name_of(brain, Term(person))), "gender");
  if (g == "female") return {"she", "her"};
  if (g == "male") return {"he", "him"};
  return {"they", "them"};
}

std::string Generator::form_for(const Brain& brain, const Iri& s, const Iri& p,
                                const Term& o, Polarity polarity,
                                const ResponseContext& ctx) const {
  std::string key = p.compact();
  bool object_slot = templates_.find(key, "slot") == "object";
  bool second = object_slot ? (o.is_iri() && o.iri() == ctx.addressee)
                            : s == ctx.addressee;
  std::string neg = polarity == Polarity::kDeny ? "-neg" : "";
  std::vector<std::string> candidates;
  if (second) candidates.push_back("second" + neg);
  if (!object_slot && !brain.is_person(s) &&
      lexicon_.is(lower(name_of(brain, Term(s))), "plural")) {
    candidates.push_back("generic" + neg);
  }
  candidates.push_back("third" + neg);
  for (const auto& f : candidates) {
    if (templates_.find(key, f)) return f;
  }
  throw Error(ErrorCode::kMissingTemplate, key + " " + candidates.back());
}

std::string Generator::phrase_clause(const Brain& brain, const Iri& s,
                                     const Iri& p, const Term& o,
                                     Polarity polarity,
                                     const ResponseContext& ctx) const {
  std::string form = form_for(brain, s, p, o, polarity, ctx);
  std::map<std::string, std::string> slots{
      {"subject", name_of(brain, Term(s))}, {"object", name_of(brain, o)}};
  return strip_stop(render(require(p.compact(), form), slots));
}

std::string Generator::phrase_triple(const Brain& brain, const Iri& s,
                                     const Iri& p, const Term& o,
                                     const std::optional<Iri>& source,
                                     Polarity polarity,
                                     const ResponseContext& ctx) const {
  std::string form = form_for(brain, s, p, o, polarity, ctx);
  std::map<std::string, std::string> slots{
      {"subject", name_of(brain, Term(s))}, {"object", name_of(brain, o)}};
  bool cite = ctx.policy == SourcePolicy::kAttach && source &&
              *source != ctx.robot;
  if (!cite) {
    return capitalize_first(render(require(p.compact(), form), slots));
  }
  bool self = *source == ctx.addressee && s == ctx.addressee;
  slots["source"] = self ? "you" : name_of(brain, Term(*source));
  if (auto fixed = templates_.find(p.compact(), form + "+said")) {
    return capitalize_first(render(*fixed, slots));
  }
  return capitalize_first(strip_stop(render(require(p.compact(), form), slots)) +
                          ", " + slots["source"] + " said.");
}

std::vector<std::string> Generator::phrase_conflict(
    const Brain& brain, const ConflictReport& report,
    const ResponseContext& ctx) const {
  if (report.entries.size() < 2) {
    throw Error(ErrorCode::kPreconditionViolation,
                "a conflict needs two entries");
  }
  // Conflict lines stay in the third person.
  ResponseContext third{ctx.robot, ctx.robot, SourcePolicy::kBare};
  std::vector<std::string> lines{phrase_social("surprised")};
  for (const auto& e : report.entries) {
    std::string form = form_for(brain, report.subject, report.predicate,
                                e.value, e.polarity, third);
    std::map<std::string, std::string> slots{
        {"subject", name_of(brain, Term(report.subject))},
        {"object", name_of(brain, e.value)},
        {"source", name_of(brain, Term(e.source))}};
    std::string key = report.predicate.compact();
    if (auto fixed = templates_.find(key, form + "+says")) {
      lines.push_back(capitalize_first(render(*fixed, slots)));
    } else {
      lines.push_back(capitalize_first(
          strip_stop(render(require(key, form), slots)) + ", says " +
          slots["source"] + "."));
    }
  }
  return lines;
}

std::vector<std::string> Generator::phrase_answer(
    const Brain& brain, const QuestionParse& q,
    const std::vector<AnswerItem>& items, const ResponseContext& ctx) const {
  switch (q.kind) {
    case QuestionKind::kYesNoSeen:
      return {phrase_social(items.empty() ? "seen-no" : "seen-yes",
                            {{"noun", q.noun}})};
    case QuestionKind::kYesNoFact: {
      if (items.empty() || !q.target) {
        return {phrase_social("know-no", {{"name", q.target_name}})};
      }
      auto [subj, obj] = pronouns(brain, *q.target);
      return {phrase_social("know-yes", {{"subject-pronoun", subj},
                                         {"object-pronoun", obj}})};
    }
    case QuestionKind::kBelieve: {
      if (!q.target) return {phrase_social("unknown-answer")};
      auto obj = pronouns(brain, *q.target).second;
      bool yes = !items.empty() && items.front().polarity == Polarity::kConfirm;
      return {phrase_social(yes ? "believe-yes" : "believe-no",
                            {{"object-pronoun", obj}})};
    }
    default:
      break;
  }
  if (q.kind == QuestionKind::kWhat && !q.noun.empty()) {
    if (items.empty()) return {phrase_social("saw-none", {{"noun", q.noun}})};
    std::vector<std::string> labels;
    for (const auto& i : items) labels.push_back(name_of(brain, i.object));
    return {phrase_social("saw-list", {{"list", indefinite_list(labels)}})};
  }
  if (items.empty()) {
    if (q.predicate && q.target) {
      if (auto t = templates_.find(q.predicate->compact(), "unknown")) {
        return {capitalize_first(
            render(*t, {{"subject", name_of(brain, Term(*q.target))}}))};
      }
    }
    return {phrase_social("unknown-answer")};
  }
  std::vector<std::string> lines;
  for (const auto& i : items) {
    lines.push_back(phrase_triple(brain, i.subject, i.predicate, i.object,
                                  i.source, i.polarity, ctx));
  }
  return lines;
}

std::string Generator::phrase_gap_question(const Brain& brain,
                                           const Iri& person, const Iri& slot,
                                           bool name_prefixed,
                                           const ResponseContext&) const {
  std::string q = require(slot.compact(), "question");
  if (!name_prefixed) return q;
  if (!q.empty()) {
    q[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(q[0])));
  }
  return name_of(brain, Term(person)) + ", " + q;
}

std::string Generator::phrase_social(
    std::string_view kind,
    const std::map<std::string, std::string>& args) const {
  return render(require("social", kind), args);
}

std::string Generator::indefinite_list(
    const std::vector<std::string>& labels) const {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += i + 1 == labels.size() ? " and " : ", ";
    out += with_article(labels[i]);
  }
  return out;
}

}  // namespace tom
