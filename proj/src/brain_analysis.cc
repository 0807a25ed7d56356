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

#include <algorithm>
#include <map>

#include "tom/brain.h"
#include "tom/error.h"
#include "tom/lookup.h"

namespace tom {

Brain::OrderKey Brain::order_of(const Attribution& a) const {
  OrderKey key;
  key.k = a.index;
  if (const Mention* m = mention(a.for_mention)) {
    if (auto it = signal_dates_.find(m->derived_from);
        it != signal_dates_.end()) {
      key.date = it->second;
    }
    if (auto it = signal_order_.find(m->derived_from);
        it != signal_order_.end()) {
      key.signal = it->second;
    }
  }
  return key;
}

std::vector<const Attribution*> Brain::attributions_on(
    const Iri& claim) const {
  std::vector<const Attribution*> out;
  auto denoting = mentions_by_denotes_.find(claim);
  if (denoting == mentions_by_denotes_.end()) return out;
  for (std::size_t mi : denoting->second) {
    const Mention& m = mentions_[mi];
    auto it = attributions_by_mention_.find(m.id);
    if (it == attributions_by_mention_.end()) continue;
    for (std::size_t i : it->second) out.push_back(&attributions_[i]);
  }
  std::sort(out.begin(), out.end(),
            [this](const Attribution* a, const Attribution* b) {
              auto ka = order_of(*a);
              auto kb = order_of(*b);
              if (ka != kb) return ka < kb;
              return a->id < b->id;
            });
  return out;
}

const Claim& Brain::require_claim(const Iri& claim) const {
  const Claim* c = claim_registry_.find(claim);
  if (c == nullptr) throw Error(ErrorCode::kUnknownClaim, claim.compact());
  return *c;
}

std::vector<ClaimView> Brain::claims_about(const Iri& instance) const {
  std::vector<ClaimView> out;
  for (const auto& c : claim_registry_.all()) {
    bool about = c.subject == instance ||
                 (c.object.is_iri() && c.object.iri() == instance);
    if (!about) continue;
    ClaimView view{c, {}, {}};
    if (auto it = mentions_by_denotes_.find(c.id);
        it != mentions_by_denotes_.end()) {
      for (std::size_t mi : it->second) view.mentions.push_back(mentions_[mi]);
    }
    for (const Attribution* a : attributions_on(c.id)) {
      view.attributions.push_back(*a);
    }
    out.push_back(std::move(view));
  }
  return out;
}

std::vector<PerspectiveEntry> Brain::perspectives_on(const Iri& claim) const {
  require_claim(claim);
  std::vector<PerspectiveEntry> out;
  for (const Attribution* a : attributions_on(claim)) {
    const Mention* m = mention(a->for_mention);
    out.push_back({m->attributed_to, *a, order_of(*a).date});
  }
  return out;
}

std::optional<PerspectiveEntry> Brain::latest_from(const Iri& source,
                                                   const Iri& claim) const {
  std::optional<PerspectiveEntry> latest;
  for (const Attribution* a : attributions_on(claim)) {
    const Mention* m = mention(a->for_mention);
    if (m->attributed_to == source) {
      latest = PerspectiveEntry{source, *a, order_of(*a).date};
    }
  }
  return latest;
}

namespace {

// Latest attribution per source, ordered by when that latest one happened.
std::vector<PerspectiveEntry> latest_per_source(
    const std::vector<PerspectiveEntry>& chronological) {
  std::map<Iri, std::size_t> last;
  for (std::size_t i = 0; i < chronological.size(); ++i) {
    last[chronological[i].source] = i;
  }
  std::vector<std::size_t> idx;
  for (auto& [src, i] : last) idx.push_back(i);
  std::sort(idx.begin(), idx.end());
  std::vector<PerspectiveEntry> out;
  for (auto i : idx) out.push_back(chronological[i]);
  return out;
}

}  // namespace

std::optional<ConflictReport> Brain::detect_value_conflicts(
    const Iri& subject, const Iri& predicate) const {
  const PredicateInfo* info = ontology_.predicate(predicate);
  if (info == nullptr) {
    throw Error(ErrorCode::kUnknownPredicate, predicate.compact());
  }
  if (info->cardinality != Cardinality::kOne) return std::nullopt;

  struct Candidate {
    std::size_t first;
    ConflictEntry entry;
  };
  std::vector<Candidate> values;
  for (const auto& c : claim_registry_.all()) {
    if (c.subject != subject || c.predicate != predicate) continue;
    auto chronological = perspectives_on(c.id);
    std::optional<PerspectiveEntry> support;
    for (const auto& e : latest_per_source(chronological)) {
      if (e.attribution.perspective.polarity != Polarity::kDeny) support = e;
    }
    if (!support) continue;
    std::size_t first = 0;
    if (!chronological.empty()) {
      first = static_cast<std::size_t>(
          order_of(chronological.front().attribution).signal);
    }
    values.push_back(
        {first,
         ConflictEntry{c.object, support->source,
                       support->attribution.perspective.polarity.value_or(
                           Polarity::kConfirm),
                       support->date, c.id}});
  }
  if (values.size() < 2) return std::nullopt;
  std::stable_sort(values.begin(), values.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.first < b.first;
                   });
  ConflictReport report{ConflictReport::Kind::kValue, subject, predicate, {}};
  for (auto& v : values) report.entries.push_back(v.entry);
  return report;
}

std::optional<ConflictReport> Brain::detect_perspective_conflicts(
    const Iri& claim) const {
  const Claim& c = require_claim(claim);
  bool confirm = false;
  bool deny = false;
  ConflictReport report{ConflictReport::Kind::kPerspective, c.subject,
                        c.predicate, {}};
  for (const auto& e : latest_per_source(perspectives_on(claim))) {
    auto pol = e.attribution.perspective.polarity;
    if (!pol) continue;
    confirm |= *pol == Polarity::kConfirm;
    deny |= *pol == Polarity::kDeny;
    report.entries.push_back({c.object, e.source, *pol, e.date, c.id});
  }
  if (!(confirm && deny)) return std::nullopt;
  return report;
}

std::vector<ConflictReport> Brain::all_conflicts() const {
  std::vector<ConflictReport> out;
  std::vector<std::pair<Iri, Iri>> seen;
  for (const auto& c : claim_registry_.all()) {
    const PredicateInfo* info = ontology_.predicate(c.predicate);
    if (info == nullptr || info->cardinality != Cardinality::kOne) continue;
    std::pair<Iri, Iri> key{c.subject, c.predicate};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    if (auto r = detect_value_conflicts(c.subject, c.predicate)) {
      out.push_back(std::move(*r));
    }
  }
  for (const auto& c : claim_registry_.all()) {
    if (auto r = detect_perspective_conflicts(c.id)) out.push_back(std::move(*r));
  }
  return out;
}

std::vector<Iri> Brain::detect_gaps(const Iri& person) const {
  if (!is_person(person)) {
    throw Error(ErrorCode::kNotAPerson, person.compact());
  }
  std::vector<Iri> gaps;
  for (const auto& slot : ontology_.gap_slots()) {
    bool filled = !store_.match(person, slot, std::nullopt).empty();
    for (const auto& c : claim_registry_.all()) {
      if (filled) break;
      filled = c.subject == person && c.predicate == slot;
    }
    if (!filled) gaps.push_back(slot);
  }
  return gaps;
}

bool Brain::believes(const Iri& source, const Iri& claim) const {
  require_claim(claim);
  auto latest = latest_from(source, claim);
  if (!latest) return false;
  const auto& p = latest->attribution.perspective;
  return p.polarity != Polarity::kDeny && p.certainty != Certainty::kUncertain;
}

std::optional<LookupResult> Brain::external_lookup(const Iri& subject,
                                                   const Iri& predicate,
                                                   LookupClient& client,
                                                   const Date& date) {
  // The client runs before anything is written.
  auto answer = client.lookup(subject, predicate);
  if (!answer) return std::nullopt;

  Iri service = service_iri(answer->provenance);
  ensure_instance(service, answer->provenance, prov("Agent"));
  int n = static_cast<int>(lookups_.size()) + 1;
  LookupRecord record{lookup_id(n), n, service, date};
  lookups_.push_back(record);
  insert_all(to_triples(record));
  signal_dates_[record.id] = date;
  next_signal(record.id);

  auto minted = claim_registry_.mint(subject, predicate, answer->value);
  if (minted.is_new) insert_all(to_triples(minted.claim));
  Mention m{lookup_mention_id(n), minted.claim.id, record.id, service,
            std::nullopt};
  add_mention(m);
  store_.insert({subject, grasp("denotedIn"), m.id});
  if (answer->value.is_iri()) {
    store_.insert({answer->value.iri(), grasp("denotedIn"), m.id});
  }
  Attribution a = attach_attribution(
      m, Perspective{Polarity::kConfirm, Certainty::kCertain, {}});
  store_.insert({subject, predicate, answer->value});
  return LookupResult{answer->value, answer->provenance, minted.claim, m, a};
}

}  // namespace tom
