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

#include "tom/parser.h"

#include <algorithm>
#include <cctype>

#include "tom/brain.h"
#include "tom/error.h"

namespace tom {

struct Parser::Phrase {
  Iri iri;
  std::string label;
  std::optional<Iri> type;
  bool person = false;
};

namespace {

using Toks = std::vector<Token>;

Toks words_of(const Toks& tokens) {
  Toks out;
  for (const auto& t : tokens) {
    if (!t.punct) out.push_back(t);
  }
  return out;
}

bool is_word(const Token& t, std::initializer_list<std::string_view> options) {
  return std::any_of(options.begin(), options.end(),
                     [&](std::string_view o) { return t.text == o; });
}

bool matches(const Toks& w, std::size_t at,
             std::initializer_list<std::string_view> seq) {
  if (at + seq.size() > w.size()) return false;
  std::size_t i = at;
  for (auto s : seq) {
    if (w[i++].text != s) return false;
  }
  return true;
}

Toks slice(const Toks& w, std::size_t from, std::size_t to) {
  to = std::min(to, w.size());
  if (from >= to) return {};
  return Toks(w.begin() + static_cast<long>(from),
              w.begin() + static_cast<long>(to));
}

std::string join(const Toks& w, char sep, bool surface) {
  std::string out;
  for (const auto& t : w) {
    if (!out.empty()) out += sep;
    out += surface ? t.surface : t.text;
  }
  return out;
}

std::string capitalize(std::string s) {
  if (!s.empty()) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

[[noreturn]] void unparsable(const Toks& w) {
  throw Error(ErrorCode::kUnparsableUtterance, "'" + join(w, ' ', true) + "'");
}

TriplePattern pat(PatternTerm s, PatternTerm p, PatternTerm o,
                  bool star = false) {
  return TriplePattern{std::move(s), std::move(p), std::move(o), star,
                       std::nullopt};
}

bool is_copula(const Token& t) { return is_word(t, {"is", "am", "are"}); }

}  // namespace

Parser::Parser(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}

InputClass Parser::classify(const std::vector<Token>& tokens) const {
  Toks w = words_of(tokens);
  bool question_mark = !tokens.empty() && tokens.back().text == "?";
  if (question_mark) return InputClass::kQuestion;
  if (!w.empty()) {
    if (lexicon_.is(w[0].text, "wh")) return InputClass::kQuestion;
    if (is_word(w[0], {"do", "does", "did", "have", "has", "can"}) &&
        w.size() > 1 && lexicon_.is(w[1].text, "pronoun")) {
      return InputClass::kQuestion;
    }
  }
  if (parse_social(tokens, 1.0)) return InputClass::kSocial;
  return InputClass::kStatement;
}

ParsedInput Parser::parse(const Utterance& u, const ParseContext& ctx) const {
  Toks tokens = tokenize(u.text);
  switch (classify(tokens)) {
    case InputClass::kQuestion:
      return parse_question(tokens, ctx);
    case InputClass::kSocial:
      return *parse_social(tokens, u.confidence);
    case InputClass::kStatement:
      break;
  }
  return parse_statement(tokens, char_length(u.text), ctx);
}

// -- social --------------------------------------------------------------------

std::optional<SocialParse> Parser::parse_social(
    const std::vector<Token>& tokens, double confidence) const {
  Toks w = words_of(tokens);
  if (w.empty()) return std::nullopt;
  if (matches(w, 0, {"my", "name", "is"}) && w.size() > 3) {
    return SocialParse{SocialKind::kNameIntro,
                       capitalize(join(slice(w, 3, w.size()), ' ', true)),
                       confidence};
  }
  if (matches(w, 0, {"call", "me"}) && w.size() > 2) {
    return SocialParse{SocialKind::kNameIntro,
                       capitalize(join(slice(w, 2, w.size()), ' ', true)),
                       confidence};
  }
  auto rest_is_names = [&](std::size_t from) {
    for (std::size_t i = from; i < w.size(); ++i) {
      if (!lexicon_.is(w[i].text, "name") &&
          !is_word(w[i], {"there", "everyone", "again"})) {
        return false;
      }
    }
    return true;
  };
  if (lexicon_.is(w[0].text, "greeting") && rest_is_names(1)) {
    return SocialParse{SocialKind::kGreeting, "", confidence};
  }
  if (lexicon_.is(w[0].text, "farewell") && rest_is_names(1)) {
    return SocialParse{SocialKind::kFarewell, "", confidence};
  }
  auto tail_in = [&](std::size_t from,
                     std::initializer_list<std::initializer_list<std::string_view>>
                         tails) {
    for (auto t : tails) {
      if (w.size() - from == t.size() && matches(w, from, t)) return true;
    }
    return false;
  };
  std::initializer_list<std::initializer_list<std::string_view>> yes_tails = {
      {"that", "is", "my", "name"}, {"that", "is", "right"},
      {"that", "is", "correct"}, {"you", "are", "right"}};
  std::initializer_list<std::initializer_list<std::string_view>> no_tails = {
      {"that", "is", "not", "my", "name"}, {"that", "is", "wrong"},
      {"you", "are", "wrong"}};
  if (lexicon_.is(w[0].text, "affirm") &&
      (w.size() == 1 || tail_in(1, yes_tails))) {
    return SocialParse{SocialKind::kAffirm, "", confidence};
  }
  if (tail_in(0, yes_tails)) {
    return SocialParse{SocialKind::kAffirm, "", confidence};
  }
  if (lexicon_.is(w[0].text, "deny") &&
      (w.size() == 1 || tail_in(1, no_tails))) {
    return SocialParse{SocialKind::kDeny, "", confidence};
  }
  if (tail_in(0, no_tails)) {
    return SocialParse{SocialKind::kDeny, "", confidence};
  }
  return std::nullopt;
}

// -- perspective ---------------------------------------------------------------

Perspective Parser::extract_perspective(const std::vector<Token>& tokens) const {
  Toks w = words_of(tokens);
  std::size_t start = 0;
  if (w.size() > 1 && (lexicon_.is(w[0].text, "affirm") ||
                       lexicon_.is(w[0].text, "deny"))) {
    start = 1;
  }
  int negations = 0;
  Perspective p;
  for (std::size_t i = start; i < w.size(); ++i) {
    const auto& t = w[i].text;
    if (lexicon_.is(t, "negation")) ++negations;
    if (auto c = lexicon_.find(t, "certainty"); c && !p.certainty) {
      bool needs_i = t == "think";
      if (!needs_i || (i > 0 && w[i - 1].text == "i")) {
        p.certainty = certainty_from_name(*c);
      }
    }
    if (auto e = lexicon_.find(t, "emotion")) {
      if (auto em = emotion_from_name(*e)) p.emotions.insert(*em);
    }
  }
  p.polarity = negations % 2 == 1 ? Polarity::kDeny : Polarity::kConfirm;
  if (!p.certainty) p.certainty = Certainty::kCertain;
  return p;
}

// -- deixis and entities -------------------------------------------------------

Iri Parser::resolve_deixis(std::string_view surface,
                           const ParseContext& ctx) const {
  std::string low(surface);
  for (auto& c : low) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (auto person = lexicon_.find(low, "pronoun")) {
    if (*person == "first") {
      if (!ctx.speaker) {
        throw Error(ErrorCode::kUnresolvedReference, "no speaker for " + low);
      }
      return *ctx.speaker;
    }
    if (*person == "second") return ctx.robot;
    auto gender = lexicon_.find(low, "gender");
    for (auto it = ctx.recent_persons.rbegin(); it != ctx.recent_persons.rend();
         ++it) {
      if (ctx.speaker && *it == *ctx.speaker) continue;
      std::string name = it->local();
      if (ctx.brain != nullptr) {
        if (auto l = ctx.brain->label_of(*it)) name = *l;
      }
      for (auto& c : name) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      auto known = lexicon_.find(name, "gender");
      if (!gender || !known || *gender == *known) return *it;
    }
    throw Error(ErrorCode::kUnresolvedReference, "no antecedent for " + low);
  }
  if (ctx.brain != nullptr) {
    if (auto p = ctx.brain->find_person_by_name(surface)) return *p;
  }
  throw Error(ErrorCode::kUnresolvedReference, std::string(surface));
}

std::optional<Parser::Phrase> Parser::entity(const Toks& toks_in,
                                             const ParseContext& ctx,
                                             bool person_slot) const {
  Toks toks = toks_in;
  while (!toks.empty() && lexicon_.is(toks.front().text, "determiner")) {
    toks.erase(toks.begin());
  }
  if (toks.empty()) return std::nullopt;
  if (toks.size() == 1 && lexicon_.is(toks[0].text, "pronoun")) {
    Iri who = resolve_deixis(toks[0].text, ctx);
    return Phrase{who, "", std::nullopt, true};
  }
  std::string spoken = join(toks, ' ', true);
  if (ctx.brain != nullptr) {
    if (auto p = ctx.brain->find_person_by_name(spoken)) {
      return Phrase{*p, "", std::nullopt, true};
    }
  }
  if (person_slot && toks.size() == 1 && !lexicon_.is(toks[0].text, "noun")) {
    bool capitalized =
        std::isupper(static_cast<unsigned char>(toks[0].surface[0])) != 0;
    if (capitalized || lexicon_.is(toks[0].text, "name")) {
      throw Error(ErrorCode::kUnresolvedReference, toks[0].surface);
    }
  }
  return thing(toks);
}

Parser::Phrase Parser::thing(const Toks& toks_in) const {
  Toks toks = toks_in;
  while (!toks.empty() && lexicon_.is(toks.front().text, "determiner")) {
    toks.erase(toks.begin());
  }
  if (toks.empty()) unparsable(toks_in);
  if (toks.size() == 1) {
    if (auto noun = lexicon_.find(toks[0].text, "noun")) {
      std::optional<Iri> type;
      if (auto cls = lexicon_.find(*noun, "class")) type = n2mu(*cls);
      return Phrase{world(*noun), *noun, type, false};
    }
    if (auto act = lexicon_.find(toks[0].text, "action")) {
      return Phrase{world(*act), *act, std::nullopt, false};
    }
  }
  return Phrase{world(join(toks, '-', false)), join(toks, ' ', false),
                std::nullopt, false};
}

Parser::Phrase Parser::place(const Toks& toks) const {
  if (toks.empty()) unparsable(toks);
  Toks core = toks;
  while (!core.empty() && lexicon_.is(core.front().text, "determiner")) {
    core.erase(core.begin());
  }
  if (core.empty()) unparsable(toks);
  std::string local;
  if (core.size() == 1) {
    if (auto p = lexicon_.find(core[0].text, "place")) local = *p;
  }
  if (local.empty()) {
    for (const auto& t : core) {
      if (!local.empty()) local += '-';
      local += capitalize(t.text);
    }
  }
  return Phrase{world(local), join(toks, ' ', true), n2mu("Location"), false};
}

// -- statements ----------------------------------------------------------------

ParsedInput Parser::parse_statement(const std::vector<Token>& tokens,
                                    std::size_t text_length,
                                    const ParseContext& ctx) const {
  Toks all = words_of(tokens);
  Perspective perspective = extract_perspective(tokens);
  Span full{0, text_length};

  Toks w = all;
  if (w.size() > 1 && (lexicon_.is(w[0].text, "affirm") ||
                       lexicon_.is(w[0].text, "deny"))) {
    w.erase(w.begin());
  }
  if (matches(w, 0, {"i", "think"}) && w.size() > 2) {
    w.erase(w.begin(), w.begin() + 2);
  }
  Toks c;
  for (const auto& t : w) {
    if (lexicon_.is(t.text, "negation") || lexicon_.is(t.text, "certainty") ||
        lexicon_.is(t.text, "intensifier")) {
      continue;
    }
    c.push_back(t);
  }
  if (c.empty()) unparsable(all);
  const std::size_t n = c.size();

  auto person_phrase = [&](const Toks& toks) {
    auto p = entity(toks, ctx, true);
    if (!p) unparsable(all);
    return *p;
  };
  auto finish = [&](const Phrase& s, const Iri& pred, const Term& o,
                    std::vector<InstanceHint> hints) -> ParsedInput {
    if (!s.person && !s.label.empty()) {
      hints.insert(hints.begin(), InstanceHint{s.iri, s.label, s.type});
    }
    return StatementParse{s.iri, pred, o, perspective, full, std::move(hints)};
  };
  auto hint_of = [](const Phrase& p) {
    std::vector<InstanceHint> h;
    if (!p.person && !p.label.empty()) h.push_back({p.iri, p.label, p.type});
    return h;
  };

  // "that is not a cat but a rabbit"
  if (n >= 4 && is_word(c[0], {"that", "this", "it"}) && c[1].text == "is") {
    auto but = std::find_if(c.begin(), c.end(),
                            [](const Token& t) { return t.text == "but"; });
    if (but != c.end() && perspective.polarity == Polarity::kDeny) {
      std::size_t b = static_cast<std::size_t>(but - c.begin());
      Phrase wrong = thing(slice(c, 2, b));
      Phrase right = thing(slice(c, b + 1, n));
      CorrectionParse corr;
      corr.wrong = wrong.label;
      corr.right = right.label;
      corr.wrong_class = wrong.type.value_or(n2mu(capitalize(wrong.label)));
      corr.right_class = right.type.value_or(n2mu(capitalize(right.label)));
      corr.wrong_span = Span{0, c[b - 1].end};
      corr.full_span = full;
      corr.perspective = perspective;
      return corr;
    }
  }

  // "X is from P"
  for (std::size_t k = 2; k + 1 < n; ++k) {
    if (c[k].text == "from" && is_copula(c[k - 1])) {
      Phrase s = person_phrase(slice(c, 0, k - 1));
      Toks obj = slice(c, k + 1, n);
      if (ctx.brain != nullptr) {
        if (auto p = ctx.brain->find_person_by_name(join(obj, ' ', true))) {
          return finish(s, n2mu("isFrom"), *p, {});
        }
      }
      Phrase o = place(obj);
      return finish(s, n2mu("isFrom"), o.iri, hint_of(o));
    }
  }
  // "X is located in P"
  for (std::size_t k = 1; k + 2 < n; ++k) {
    if (is_copula(c[k]) && c[k + 1].text == "located" && c[k + 2].text == "in") {
      Toks subj = slice(c, 0, k);
      std::optional<Phrase> s;
      if (subj.size() == 1 && lexicon_.is(subj[0].text, "pronoun")) {
        s = entity(subj, ctx, false);
      } else {
        s = place(subj);
      }
      Phrase o = place(slice(c, k + 3, n));
      return finish(*s, n2mu("isLocatedIn"), o.iri, hint_of(o));
    }
  }
  // "X 's name is Y", "her name is Y"
  for (std::size_t k = 0; k + 2 < n; ++k) {
    if (c[k].text == "name" && c[k + 1].text == "is" && k + 2 < n) {
      Toks owner = slice(c, 0, k);
      if (!owner.empty() && owner.back().text == "'s") owner.pop_back();
      if (owner.size() == 1 && lexicon_.is(owner[0].text, "pronoun")) {
        Iri who = resolve_deixis(owner[0].text, ctx);
        return finish(Phrase{who, "", std::nullopt, true}, n2mu("hasName"),
                      Term::literal(join(slice(c, k + 2, n), ' ', true)), {});
      }
      Phrase s = person_phrase(owner);
      return finish(s, n2mu("hasName"),
                    Term::literal(join(slice(c, k + 2, n), ' ', true)), {});
    }
  }
  // "X is a N"
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    if (is_copula(c[k]) && k + 2 <= n - 0 && k + 1 < n &&
        is_word(c[k + 1], {"a", "an"})) {
      Phrase s = person_phrase(slice(c, 0, k));
      auto o = entity(slice(c, k + 2, n), ctx, false);
      if (!o) unparsable(all);
      return finish(s, n2mu("hasOccupation"), o->iri, hint_of(*o));
    }
  }
  // "X likes Y", "X sees Y", "X does Y"
  for (std::size_t k = 1; k < n; ++k) {
    auto verb = lexicon_.find(c[k].text, "verb");
    if (!verb) continue;
    // "do" as auxiliary in "I do like cats"
    if (*verb == "does" && k + 1 < n && lexicon_.is(c[k + 1].text, "verb")) {
      continue;
    }
    if (k + 1 >= n) break;
    Toks subj = slice(c, 0, k);
    if (!subj.empty() && is_word(subj.back(), {"do", "does", "did"})) {
      subj.pop_back();
    }
    bool person_slot = *verb != "does";
    auto s = entity(subj, ctx, person_slot);
    if (!s) unparsable(all);
    Toks rest = slice(c, k + 1, n);
    auto o = entity(rest, ctx, false);
    if (!o) unparsable(all);
    return finish(*s, n2mu(*verb), o->iri, hint_of(*o));
  }
  // "X is laughing"
  if (n >= 3 && is_copula(c[n - 2])) {
    if (auto g = lexicon_.find(c[n - 1].text, "gerund")) {
      Phrase actor = person_phrase(slice(c, 0, n - 2));
      Phrase event{world(*g), *g, sem("Event"), false};
      std::vector<InstanceHint> hints{{event.iri, event.label, event.type}};
      if (!actor.person && !actor.label.empty()) {
        hints.push_back({actor.iri, actor.label, actor.type});
      }
      return StatementParse{event.iri, sem("hasActor"), actor.iri, perspective,
                            full, hints};
    }
  }
  // "A rabbit bites", "Rabbits cuddle"
  if (n >= 2) {
    auto act = lexicon_.find(c[n - 1].text, "action");
    if (act) {
      auto s = entity(slice(c, 0, n - 1), ctx, false);
      if (!s) unparsable(all);
      Phrase o{world(*act), *act, std::nullopt, false};
      return finish(*s, n2mu("does"), o.iri, hint_of(o));
    }
  }
  unparsable(all);
}

// -- questions -----------------------------------------------------------------

QuestionParse Parser::parse_question(const std::vector<Token>& tokens,
                                     const ParseContext& ctx) const {
  Toks all = words_of(tokens);
  Toks w;
  for (const auto& t : all) {
    if (!lexicon_.is(t.text, "intensifier")) w.push_back(t);
  }
  const std::size_t n = w.size();
  QuestionParse q;

  auto person_target = [&](const Toks& toks) {
    auto p = entity(toks, ctx, true);
    if (!p) unparsable(all);
    return p->iri;
  };
  auto seen_patterns = [&](const Iri& cls) {
    return std::vector<TriplePattern>{
        pat(var("o"), Term(rdf("type")), Term(cls)),
        pat(var("o"), Term(grasp("denotedBy")), var("s"))};
  };

  // where is X from
  if (n >= 4 && w[0].text == "where" && is_copula(w[1]) &&
      w[n - 1].text == "from") {
    q.kind = QuestionKind::kWhere;
    q.target = person_target(slice(w, 2, n - 1));
    q.predicate = n2mu("isFrom");
    q.patterns = {pat(Term(*q.target), Term(n2mu("isFrom")), var("x"))};
    return q;
  }
  if (matches(w, 0, {"do", "you", "know"}) ||
      matches(w, 0, {"did", "you", "know"})) {
    q.probe = true;
    // do you know where X is from
    if (n >= 7 && w[3].text == "where" && w[n - 1].text == "from" &&
        is_copula(w[n - 2])) {
      q.kind = QuestionKind::kWhere;
      q.target = person_target(slice(w, 4, n - 2));
      q.predicate = n2mu("isFrom");
      q.patterns = {pat(Term(*q.target), Term(n2mu("isFrom")), var("x"))};
      return q;
    }
    // do you know X
    Toks who = slice(w, 3, n);
    if (who.empty()) unparsable(all);
    q.kind = QuestionKind::kYesNoFact;
    q.target_name = join(who, ' ', true);
    try {
      q.target = person_target(who);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnresolvedReference) throw;
    }
    if (q.target) {
      q.patterns = {pat(Term(*q.target), Term(rdf("type")), Term(n2mu("Person")))};
    }
    return q;
  }
  // do you believe X
  if (matches(w, 0, {"do", "you", "believe"}) && n >= 4) {
    q.kind = QuestionKind::kBelieve;
    q.probe = true;
    q.target_name = join(slice(w, 3, n), ' ', true);
    q.target = person_target(slice(w, 3, n));
    return q;
  }
  // have you seen a cat
  if (matches(w, 0, {"have", "you", "seen"}) && n >= 4) {
    q.kind = QuestionKind::kYesNoSeen;
    q.probe = true;
    Phrase thing_seen = thing(slice(w, 3, n));
    q.noun = thing_seen.label;
    Iri cls = thing_seen.type.value_or(n2mu(capitalize(thing_seen.label)));
    q.object = cls;
    q.patterns = seen_patterns(cls);
    return q;
  }
  // what animals did you see
  if (n >= 5 && w[0].text == "what" && matches(w, n - 3, {"did", "you", "see"})) {
    q.kind = QuestionKind::kWhat;
    Phrase kind = thing(slice(w, 1, n - 3));
    q.noun = kind.label;
    Iri cls = kind.type.value_or(n2mu(capitalize(kind.label)));
    q.object = cls;
    q.predicate = n2mu("sees");
    q.patterns = {pat(var("o"), Term(rdf("type")), var("c")),
                  pat(var("c"), Term(rdfs("subClassOf")), Term(cls), true),
                  pat(var("o"), Term(grasp("denotedBy")), var("s"))};
    return q;
  }
  // what does X do / like / see
  if (n >= 4 && w[0].text == "what" && is_word(w[1], {"does", "do", "did"})) {
    auto verb = lexicon_.find(w[n - 1].text, "verb");
    if (verb) {
      q.kind = QuestionKind::kWhat;
      auto subject = entity(slice(w, 2, n - 1), ctx, false);
      if (!subject) unparsable(all);
      q.target = subject->iri;
      q.predicate = n2mu(*verb);
      q.patterns = {pat(Term(*q.target), Term(*q.predicate), var("x"))};
      return q;
    }
  }
  // who likes X, who is from X, who bites
  if (n >= 2 && w[0].text == "who") {
    q.kind = QuestionKind::kWho;
    if (n >= 4 && is_copula(w[1]) && w[2].text == "from") {
      Phrase p = place(slice(w, 3, n));
      q.predicate = n2mu("isFrom");
      q.object = p.iri;
    } else if (auto verb = lexicon_.find(w[1].text, "verb"); verb && n >= 3) {
      auto o = entity(slice(w, 2, n), ctx, false);
      if (!o) unparsable(all);
      q.predicate = n2mu(*verb);
      q.object = o->iri;
    } else if (auto act = lexicon_.find(w[1].text, "action"); act && n == 2) {
      q.predicate = n2mu("does");
      q.object = world(*act);
    } else {
      unparsable(all);
    }
    q.patterns = {pat(var("x"), Term(*q.predicate), Term(*q.object))};
    return q;
  }
  unparsable(all);
}

}  // namespace tom
