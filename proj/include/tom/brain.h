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

// The brain: one triple store holding instances, claims, perspectives and the
// ontology, with registries for every GRaSP record, the social analyses
// (conflicts, gaps, trust) and the dump format.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tom/grasp.h"
#include "tom/ontology.h"
#include "tom/store.h"
#include "tom/term.h"

namespace tom {

class LookupClient;

struct Assertion {
  Claim claim;
  bool claim_is_new = false;
  TurnRecord turn;
  Mention mention;
  Attribution attribution;
};

struct PerceptResult {
  PerceptRecord record;
  Mention mention;
  std::optional<Attribution> attribution;
};

struct ClaimView {
  Claim claim;
  std::vector<Mention> mentions;
  std::vector<Attribution> attributions;
};

struct PerspectiveEntry {
  Iri source;
  Attribution attribution;
  Date date;
};

struct ConflictEntry {
  Term value;
  Iri source;
  Polarity polarity = Polarity::kConfirm;
  Date date;
  Iri claim;
};

struct ConflictReport {
  enum class Kind { kValue, kPerspective };
  Kind kind = Kind::kValue;
  Iri subject;
  Iri predicate;
  std::vector<ConflictEntry> entries;
};

struct LookupResult {
  Term value;
  std::string provenance;
  Claim claim;
  Mention mention;
  Attribution attribution;
};

class Brain {
 public:
  // Social ontology, default prefixes, the robot registered.
  Brain();
  explicit Brain(Ontology ontology);

  const TripleStore& store() const { return store_; }
  const Ontology& ontology() const { return ontology_; }
  const PrefixTable& prefixes() const { return prefixes_; }
  const Iri& robot() const { return robot_; }

  // -- instances ---------------------------------------------------------------

  // Adds a label and/or type to an instance; no-op for parts already present.
  void ensure_instance(const Iri& iri, const std::optional<std::string>& label,
                       const std::optional<Iri>& type);
  // leolaniFriends:<Name>, typed n2mu:Person and labelled.
  Iri register_person(std::string_view name);
  bool is_person(const Iri& iri) const;
  std::optional<Iri> find_person_by_name(std::string_view name) const;
  std::vector<Iri> persons() const;
  Instance instance(const Iri& iri) const;
  std::optional<std::string> label_of(const Iri& iri) const;

  // -- signals -----------------------------------------------------------------

  ChatRecord open_chat(const Iri& addressee, const Date& date);
  const std::vector<ChatRecord>& chats() const { return chats_; }
  // Chats with this addressee, in order.
  int chat_count(const Iri& addressee) const;

  TurnRecord record_turn(const ChatRecord& chat, const Iri& speaker,
                         std::string text, const Date& date);
  const std::vector<TurnRecord>& turns() const { return turns_; }

  // Throws kSpanOutOfBounds when the span does not fit the turn text.
  Mention mention_for_turn(const TurnRecord& turn, Span span,
                           const Iri& denotes, const Iri& source);
  Attribution attach_attribution(const Mention& mention,
                                 const Perspective& perspective);

  // Records a turn in `chat` and asserts the claim through it.
  Assertion assert_statement(const Iri& speaker, const ChatRecord& chat,
                             std::string text, Span span, const Iri& s,
                             const Iri& p, const Term& o,
                             const Perspective& perspective,
                             const Date& date);
  // Asserts through an already recorded turn.
  Assertion assert_in_turn(const TurnRecord& turn, Span span, const Iri& s,
                           const Iri& p, const Term& o,
                           const Perspective& perspective);

  // A sensor signal. The mention denotes `denotes` (a claim or an instance)
  // and every instance in `seen` gains grasp:denotedBy. The robot is the
  // source; `robot_view`, if set, becomes its attribution.
  PerceptResult record_percept(PerceptKind kind, const Iri& raw_label,
                               double confidence, const Iri& denotes,
                               const std::vector<Iri>& seen,
                               const std::optional<Perspective>& robot_view,
                               const Date& date);
  // Robot's typing of an object track from a sensor hypothesis: claim
  // (track rdf:type cls), the direct type triple and a sensor mention.
  PerceptResult observe_object(const Iri& track, const Iri& cls,
                               double confidence, const Date& date);
  // Replaces the direct rdf:type triple of `track` (other types kept).
  void retype(const Iri& track, const Iri& from, const Iri& to);

  // -- reads -------------------------------------------------------------------

  const ClaimRegistry& claims() const { return claim_registry_; }
  const std::vector<Mention>& mentions() const { return mentions_; }
  const std::vector<Attribution>& attributions() const {
    return attributions_;
  }
  const std::vector<PerceptRecord>& percepts() const { return percepts_; }
  const std::vector<LookupRecord>& lookups() const { return lookups_; }
  const Mention* mention(const Iri& id) const;

  std::vector<BindingSet> select(const std::vector<TriplePattern>& patterns,
                                 std::size_t cap = kDefaultResultCap) const {
    return store_.select(patterns, cap);
  }
  bool ask(const std::vector<TriplePattern>& patterns) const {
    return store_.ask(patterns);
  }
  std::size_t count(const std::vector<TriplePattern>& patterns) const {
    return store_.count(patterns);
  }

  // Claims with `instance` as subject or object, by claim number.
  std::vector<ClaimView> claims_about(const Iri& instance) const;
  // Chronological; throws kUnknownClaim.
  std::vector<PerspectiveEntry> perspectives_on(const Iri& claim) const;
  // Latest attribution of `source` on `claim`, if any.
  std::optional<PerspectiveEntry> latest_from(const Iri& source,
                                              const Iri& claim) const;

  // Throws kUnknownPredicate when `predicate` is not in the ontology.
  std::optional<ConflictReport> detect_value_conflicts(
      const Iri& subject, const Iri& predicate) const;
  // Throws kUnknownClaim.
  std::optional<ConflictReport> detect_perspective_conflicts(
      const Iri& claim) const;
  // Every open conflict in the brain (value conflicts first).
  std::vector<ConflictReport> all_conflicts() const;
  // Throws kNotAPerson.
  std::vector<Iri> detect_gaps(const Iri& person) const;
  // Throws kUnknownClaim.
  bool believes(const Iri& source, const Iri& claim) const;

  // Lookup first, then a single write. nullopt when the client has no value.
  std::optional<LookupResult> external_lookup(const Iri& subject,
                                              const Iri& predicate,
                                              LookupClient& client,
                                              const Date& date);

  // -- dump ----------------------------------------------------------------------

  std::string serialize() const;
  // Throws ParseError (with line number) on malformed input.
  static Brain deserialize(std::string_view text);

  friend bool operator==(const Brain& a, const Brain& b);

  // Every registry record's triples are in the store.
  bool registries_consistent() const;

 private:
  struct OrderKey {
    Date date;
    int signal = 0;
    int k = 0;
    friend auto operator<=>(const OrderKey&, const OrderKey&) = default;
  };

  void insert_all(const std::vector<Triple>& triples);
  void add_mention(const Mention& m);
  int next_signal(const Iri& signal_id);
  OrderKey order_of(const Attribution& a) const;
  std::vector<const Attribution*> attributions_on(const Iri& claim) const;
  const Claim& require_claim(const Iri& claim) const;
  void rebuild_from_store();

  TripleStore store_;
  Ontology ontology_;
  PrefixTable prefixes_;
  Iri robot_;

  ClaimRegistry claim_registry_;
  std::vector<ChatRecord> chats_;
  std::vector<TurnRecord> turns_;
  std::map<int, int> turns_per_chat_;
  std::vector<Mention> mentions_;
  std::map<Iri, std::size_t> mention_index_;
  std::map<Iri, std::vector<std::size_t>> mentions_by_denotes_;
  std::vector<Attribution> attributions_;
  std::map<Iri, std::vector<std::size_t>> attributions_by_mention_;
  std::map<std::pair<Iri, Iri>, int> attribution_counts_;
  std::vector<PerceptRecord> percepts_;
  std::vector<LookupRecord> lookups_;
  std::map<Iri, int> signal_order_;
  std::map<Iri, Date> signal_dates_;
  int signal_counter_ = 0;
};

// Header block plus canonical triples, for any store.
std::string serialize_store(const TripleStore& store,
                            const PrefixTable& prefixes);
// Parses a dump into prefixes and a store. Throws ParseError.
void parse_dump(std::string_view text, PrefixTable& prefixes,
                TripleStore& store);

}  // namespace tom
