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

#include "tom/brain.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "tom/error.h"
#include "tom/lookup.h"

namespace tom {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string label_from_local(const std::string& local) {
  std::string out = local;
  std::replace(out.begin(), out.end(), '-', ' ');
  return out;
}

Certainty certainty_for_confidence(double c) {
  if (c >= 0.9) return Certainty::kCertain;
  if (c >= 0.7) return Certainty::kProbable;
  if (c >= 0.5) return Certainty::kPossible;
  return Certainty::kUncertain;
}

const Iri& signal_order_predicate() {
  static const Iri p = n2mu("signalOrder");
  return p;
}

}  // namespace

Brain::Brain() : Brain(Ontology::social()) {}

Brain::Brain(Ontology ontology)
    : ontology_(std::move(ontology)),
      prefixes_(PrefixTable::defaults()),
      robot_(friends("Leolani")) {
  insert_all(ontology_.to_triples());
  ensure_instance(robot_, "Leolani", n2mu("Robot"));
}

void Brain::insert_all(const std::vector<Triple>& triples) {
  for (const auto& t : triples) store_.insert(t);
}

int Brain::next_signal(const Iri& signal_id) {
  int n = ++signal_counter_;
  signal_order_[signal_id] = n;
  store_.insert({signal_id, signal_order_predicate(),
                 Term::literal(std::to_string(n))});
  return n;
}

// -- instances -----------------------------------------------------------------

void Brain::ensure_instance(const Iri& iri,
                            const std::optional<std::string>& label,
                            const std::optional<Iri>& type) {
  if (label && !store_.first_object(iri, rdfs("label"))) {
    store_.insert({iri, rdfs("label"), Term::literal(*label)});
  }
  if (type) store_.insert({iri, rdf("type"), *type});
}

Iri Brain::register_person(std::string_view name) {
  if (name.empty()) throw Error(ErrorCode::kInvalidArgument, "empty name");
  std::string local(name);
  std::replace(local.begin(), local.end(), ' ', '-');
  Iri iri = friends(local);
  ensure_instance(iri, std::string(name), n2mu("Person"));
  return iri;
}

bool Brain::is_person(const Iri& iri) const {
  return store_.contains({iri, rdf("type"), n2mu("Person")});
}

std::optional<Iri> Brain::find_person_by_name(std::string_view name) const {
  const std::string want = lower(name);
  for (const auto& p : persons()) {
    for (const auto& l : store_.objects(p, rdfs("label"))) {
      if (l.is_literal() && lower(l.as_literal().lexical) == want) return p;
    }
    if (lower(p.local()) == want) return p;
  }
  return std::nullopt;
}

std::vector<Iri> Brain::persons() const {
  return store_.subjects(rdf("type"), n2mu("Person"));
}

Instance Brain::instance(const Iri& iri) const {
  return read_instance(store_, iri);
}

std::optional<std::string> Brain::label_of(const Iri& iri) const {
  auto l = store_.first_object(iri, rdfs("label"));
  if (l && l->is_literal()) return l->as_literal().lexical;
  return std::nullopt;
}

// -- signals -------------------------------------------------------------------

ChatRecord Brain::open_chat(const Iri& addressee, const Date& date) {
  ChatRecord chat{chat_id(static_cast<int>(chats_.size()) + 1),
                  static_cast<int>(chats_.size()) + 1, addressee, date};
  chats_.push_back(chat);
  insert_all(to_triples(chat));
  return chat;
}

int Brain::chat_count(const Iri& addressee) const {
  return static_cast<int>(std::count_if(
      chats_.begin(), chats_.end(),
      [&](const ChatRecord& c) { return c.addressee == addressee; }));
}

TurnRecord Brain::record_turn(const ChatRecord& chat, const Iri& speaker,
                              std::string text, const Date& date) {
  int index = ++turns_per_chat_[chat.number];
  TurnRecord turn{turn_id(chat.number, index), chat.number, index, speaker,
                  date, std::move(text)};
  turns_.push_back(turn);
  insert_all(to_triples(turn));
  store_.insert(turn_text_triple(turn));
  signal_dates_[turn.id] = date;
  next_signal(turn.id);
  return turn;
}

Mention Brain::mention_for_turn(const TurnRecord& turn, Span span,
                                const Iri& denotes, const Iri& source) {
  if (span.start > span.end || span.end > char_length(turn.text)) {
    throw Error(ErrorCode::kSpanOutOfBounds,
                std::to_string(span.start) + "-" + std::to_string(span.end) +
                    " on " + std::to_string(char_length(turn.text)) +
                    " characters");
  }
  Mention m{turn_mention_id(turn.chat, turn.index, span), denotes, turn.id,
            source, span};
  if (const Mention* existing = mention(m.id)) {
    if (existing->denotes != denotes) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "span " + m.id.compact() + " already denotes " +
                      existing->denotes.compact());
    }
    return *existing;
  }
  add_mention(m);
  return m;
}

void Brain::add_mention(const Mention& m) {
  mention_index_[m.id] = mentions_.size();
  mentions_by_denotes_[m.denotes].push_back(mentions_.size());
  mentions_.push_back(m);
  insert_all(to_triples(m));
}

const Mention* Brain::mention(const Iri& id) const {
  auto it = mention_index_.find(id);
  return it == mention_index_.end() ? nullptr : &mentions_[it->second];
}

Attribution Brain::attach_attribution(const Mention& m,
                                      const Perspective& perspective) {
  if (mention(m.id) == nullptr) {
    throw Error(ErrorCode::kPreconditionViolation,
                "mention not registered: " + m.id.compact());
  }
  int k = ++attribution_counts_[{m.attributed_to, m.denotes}];
  Attribution a{attribution_id(m.id, k), m.id, k, perspective};
  attributions_by_mention_[m.id].push_back(attributions_.size());
  attributions_.push_back(a);
  insert_all(to_triples(a));
  return a;
}

Assertion Brain::assert_statement(const Iri& speaker, const ChatRecord& chat,
                                  std::string text, Span span, const Iri& s,
                                  const Iri& p, const Term& o,
                                  const Perspective& perspective,
                                  const Date& date) {
  std::size_t length = char_length(text);
  if (span.start > span.end || span.end > length) {
    throw Error(ErrorCode::kSpanOutOfBounds,
                std::to_string(span.start) + "-" + std::to_string(span.end));
  }
  TurnRecord turn = record_turn(chat, speaker, std::move(text), date);
  return assert_in_turn(turn, span, s, p, o, perspective);
}

Assertion Brain::assert_in_turn(const TurnRecord& turn, Span span,
                                const Iri& s, const Iri& p, const Term& o,
                                const Perspective& perspective) {
  auto minted = claim_registry_.mint(s, p, o);
  if (minted.is_new) insert_all(to_triples(minted.claim));

  auto note_instance = [&](const Iri& x) {
    if (ontology_.cls(x) != nullptr) return;
    ensure_instance(x, label_from_local(x.local()), std::nullopt);
  };
  note_instance(s);
  if (p == sem("hasActor")) ensure_instance(s, std::nullopt, sem("Event"));
  if (o.is_iri()) note_instance(o.iri());

  Mention m = mention_for_turn(turn, span, minted.claim.id, turn.speaker);
  if (ontology_.cls(s) == nullptr) store_.insert({s, grasp("denotedIn"), m.id});
  if (o.is_iri() && ontology_.cls(o.iri()) == nullptr) {
    store_.insert({o.iri(), grasp("denotedIn"), m.id});
  }
  Attribution a = attach_attribution(m, perspective);
  if (perspective.polarity != Polarity::kDeny) store_.insert({s, p, o});
  return Assertion{minted.claim, minted.is_new, turn, m, a};
}

PerceptResult Brain::record_percept(PerceptKind kind, const Iri& raw_label,
                                    double confidence, const Iri& denotes,
                                    const std::vector<Iri>& seen,
                                    const std::optional<Perspective>& robot_view,
                                    const Date& date) {
  if (confidence < 0.0 || confidence > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "confidence outside [0,1]");
  }
  int n = 1 + static_cast<int>(std::count_if(
                  percepts_.begin(), percepts_.end(),
                  [&](const PerceptRecord& r) { return r.kind == kind; }));
  PerceptRecord record{percept_id(kind, n), n, kind, raw_label, confidence,
                       date};
  percepts_.push_back(record);
  insert_all(to_triples(record));
  signal_dates_[record.id] = date;
  next_signal(record.id);

  Mention m{percept_mention_id(kind, n), denotes, record.id, robot_,
            std::nullopt};
  add_mention(m);
  for (const auto& x : seen) store_.insert({x, grasp("denotedBy"), m.id});

  PerceptResult out{record, m, std::nullopt};
  if (robot_view) out.attribution = attach_attribution(m, *robot_view);
  return out;
}

PerceptResult Brain::observe_object(const Iri& track, const Iri& cls,
                                    double confidence, const Date& date) {
  ensure_instance(track, std::nullopt, cls);
  auto minted = claim_registry_.mint(track, rdf("type"), cls);
  if (minted.is_new) insert_all(to_triples(minted.claim));
  Perspective view{Polarity::kConfirm, certainty_for_confidence(confidence),
                   {}};
  return record_percept(PerceptKind::kObject, cls, confidence,
                        minted.claim.id, {track}, view, date);
}

void Brain::retype(const Iri& track, const Iri& from, const Iri& to) {
  store_.erase({track, rdf("type"), from});
  store_.insert({track, rdf("type"), to});
}

}  // namespace tom
