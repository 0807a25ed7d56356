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

// GRaSP records: claims, chats, turns, mentions, attributions, percepts and
// their projection to triples. Each record can be read back from the triples
// it emits.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tom/term.h"

namespace tom {

class TripleStore;

enum class Polarity { kConfirm, kDeny };
enum class Certainty { kCertain, kProbable, kPossible, kUncertain };
enum class Emotion { kSurprise, kSad, kHappy, kAnger, kFear, kDisgust };

Iri to_iri(Polarity p);
Iri to_iri(Certainty c);
Iri to_iri(Emotion e);
std::string_view name_of(Polarity p);
std::string_view name_of(Certainty c);
std::string_view name_of(Emotion e);
std::optional<Polarity> polarity_from_name(std::string_view name);
std::optional<Certainty> certainty_from_name(std::string_view name);
std::optional<Emotion> emotion_from_name(std::string_view name);

// The perspective a source takes on a mention: at most one polarity, at most
// one certainty, any number of emotions.
struct Perspective {
  std::optional<Polarity> polarity;
  std::optional<Certainty> certainty;
  std::set<Emotion> emotions;

  std::vector<Iri> values() const;
  // "CONFIRM,UNCERTAIN,SURPRISE"
  std::string render() const;
  // Parses the comma list used by scenario files. Throws kInvalidArgument on
  // unknown tokens or a second polarity/certainty.
  static Perspective parse(std::string_view list);

  friend bool operator==(const Perspective&, const Perspective&) = default;
};

// A calendar day as YYYYMMDD.
class Date {
 public:
  Date() : value_("20180512") {}
  explicit Date(std::string_view yyyymmdd);
  const std::string& str() const { return value_; }
  Iri iri() const { return time_iri(value_); }
  friend auto operator<=>(const Date&, const Date&) = default;

 private:
  std::string value_;
};

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

// Number of UTF-8 code points; mention offsets count characters.
std::size_t char_length(std::string_view text);

struct Instance {
  Iri iri;
  std::vector<std::string> labels;
  std::vector<Iri> types;
  friend bool operator==(const Instance&, const Instance&) = default;
};

struct EventRecord {
  Iri iri;
  std::optional<Iri> actor;
  std::optional<Iri> place;
  std::optional<Date> time;
  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

struct Claim {
  Iri id;
  Iri subject;
  Iri predicate;
  Term object;
  int number = 0;
  Triple triple() const { return Triple{subject, predicate, object}; }
  friend bool operator==(const Claim&, const Claim&) = default;
};

struct ChatRecord {
  Iri id;
  int number = 0;
  Iri addressee;
  Date date;
  friend bool operator==(const ChatRecord&, const ChatRecord&) = default;
};

struct TurnRecord {
  Iri id;
  int chat = 0;
  int index = 0;
  Iri speaker;
  Date date;
  std::string text;
  friend bool operator==(const TurnRecord&, const TurnRecord&) = default;
};

enum class PerceptKind { kFace, kObject };

struct PerceptRecord {
  Iri id;
  int number = 0;
  PerceptKind kind = PerceptKind::kObject;
  Iri raw_label;
  double confidence = 0.0;
  Date time;
  friend bool operator==(const PerceptRecord&, const PerceptRecord&) = default;
};

// A call to an external factual service.
struct LookupRecord {
  Iri id;
  int number = 0;
  Iri service;
  Date time;
  friend bool operator==(const LookupRecord&, const LookupRecord&) = default;
};

struct Mention {
  Iri id;
  Iri denotes;
  Iri derived_from;
  Iri attributed_to;
  std::optional<Span> span;
  friend bool operator==(const Mention&, const Mention&) = default;
};

struct Attribution {
  Iri id;
  Iri for_mention;
  int index = 0;
  Perspective perspective;
  friend bool operator==(const Attribution&, const Attribution&) = default;
};

// -- identifier grammar ------------------------------------------------------

Iri chat_id(int chat);
Iri turn_id(int chat, int turn);
Iri turn_mention_id(int chat, int turn, Span span);
Iri attribution_id(const Iri& mention, int k);
Iri claim_id(int n);
Iri percept_id(PerceptKind kind, int n);
Iri percept_mention_id(PerceptKind kind, int n);
Iri lookup_id(int n);
Iri lookup_mention_id(int n);

struct TurnRef {
  int chat = 0;
  int turn = 0;
};
std::optional<int> parse_chat_id(const Iri& id);
std::optional<TurnRef> parse_turn_id(const Iri& id);
std::optional<std::pair<TurnRef, Span>> parse_turn_mention_id(const Iri& id);
std::optional<int> parse_attribution_index(const Iri& id);
std::optional<int> parse_claim_number(const Iri& id);
std::optional<std::pair<PerceptKind, int>> parse_percept_id(const Iri& id);
std::optional<int> parse_lookup_id(const Iri& id);

// True if `id` matches one of the generated id shapes.
bool is_generated_id(const Iri& id);

// -- projection ----------------------------------------------------------------

std::vector<Triple> to_triples(const Instance& r);
std::vector<Triple> to_triples(const EventRecord& r);
std::vector<Triple> to_triples(const Claim& r);
std::vector<Triple> to_triples(const ChatRecord& r);
// The three GRaSP triples of a turn. The raw text travels separately, see
// turn_text_triple().
std::vector<Triple> to_triples(const TurnRecord& r);
Triple turn_text_triple(const TurnRecord& r);
std::vector<Triple> to_triples(const Mention& r);
std::vector<Triple> to_triples(const Attribution& r);
std::vector<Triple> to_triples(const PerceptRecord& r);
std::vector<Triple> to_triples(const LookupRecord& r);

// Read-back from a store holding a record's triples. nullopt if the subject
// is not typed as that record.
std::optional<Claim> read_claim(const TripleStore& store, const Iri& id);
std::optional<ChatRecord> read_chat(const TripleStore& store, const Iri& id);
std::optional<TurnRecord> read_turn(const TripleStore& store, const Iri& id);
std::optional<Mention> read_mention(const TripleStore& store, const Iri& id);
std::optional<Attribution> read_attribution(const TripleStore& store,
                                            const Iri& id);
std::optional<PerceptRecord> read_percept(const TripleStore& store,
                                          const Iri& id);
std::optional<LookupRecord> read_lookup(const TripleStore& store,
                                        const Iri& id);
std::optional<EventRecord> read_event(const TripleStore& store, const Iri& id);
// Labels and types only; denotedIn/denotedBy links belong to mentions.
Instance read_instance(const TripleStore& store, const Iri& id);

// Deduplicating claim registry: one claim id per canonical triple.
class ClaimRegistry {
 public:
  struct Minted {
    Claim claim;
    bool is_new = false;
  };

  Minted mint(const Iri& subject, const Iri& predicate, const Term& object);
  // Registers an existing claim (used when reading a dump back).
  void adopt(const Claim& claim);

  const Claim* find(const Triple& t) const;
  const Claim* find(const Iri& id) const;
  const std::vector<Claim>& all() const { return claims_; }
  std::size_t size() const { return claims_.size(); }

  friend bool operator==(const ClaimRegistry& a, const ClaimRegistry& b) {
    return a.claims_ == b.claims_;
  }

 private:
  std::vector<Claim> claims_;
  std::map<std::string, std::size_t> by_triple_;
  std::map<std::string, std::size_t> by_id_;
  int next_ = 1;
};

inline Claim mint_claim(const Iri& subject, const Iri& predicate,
                        const Term& object, ClaimRegistry& registry) {
  return registry.mint(subject, predicate, object).claim;
}

}  // namespace tom
