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

#include "tom/ontology.h"

#include <algorithm>
#include <set>

#include "tom/error.h"
#include "tom/store.h"

namespace tom {

Ontology Ontology::social() {
  Ontology o;
  o.add_class(n2mu("Person"), std::nullopt, "person");
  o.add_class(n2mu("Robot"), std::nullopt, "robot");
  o.add_class(n2mu("Location"), std::nullopt, "location");
  o.add_class(n2mu("Object"), std::nullopt, "object");
  o.add_class(n2mu("Animal"), std::nullopt, "animal");
  o.add_class(n2mu("Cat"), n2mu("Animal"), "cat");
  o.add_class(n2mu("Rabbit"), n2mu("Animal"), "rabbit");
  o.add_class(n2mu("Panda"), n2mu("Animal"), "panda");

  const Iri thing = owl("Thing");
  o.add_predicate({n2mu("hasName"), Cardinality::kOne, n2mu("Person"),
                   rdfs("Literal")});
  o.add_predicate({n2mu("isFrom"), Cardinality::kOne, n2mu("Person"),
                   n2mu("Location")});
  o.add_predicate({n2mu("hasOccupation"), Cardinality::kOne, n2mu("Person"),
                   thing});
  o.add_predicate({n2mu("likes"), Cardinality::kOne, n2mu("Person"), thing});
  o.add_predicate({n2mu("does"), Cardinality::kMany, thing, thing});
  o.add_predicate({n2mu("sees"), Cardinality::kMany, n2mu("Person"), thing});
  o.add_predicate({n2mu("isLocatedIn"), Cardinality::kOne, n2mu("Location"),
                   n2mu("Location")});
  o.add_predicate({sem("hasActor"), Cardinality::kMany, sem("Event"),
                   n2mu("Person")});
  o.set_gap_slots({n2mu("isFrom"), n2mu("hasOccupation"), n2mu("likes")});
  return o;
}

void Ontology::add_class(const Iri& id, const std::optional<Iri>& parent,
                         std::string label) {
  if (parent) {
    for (std::optional<Iri> cur = parent; cur;) {
      if (*cur == id) {
        throw Error(ErrorCode::kInvalidArgument,
                    "subclass cycle through " + id.compact());
      }
      auto it = classes_.find(*cur);
      cur = it == classes_.end() ? std::nullopt : it->second.parent;
    }
  }
  classes_[id] = ClassInfo{id, parent, std::move(label)};
}

void Ontology::add_predicate(PredicateInfo info) {
  predicates_[info.id] = std::move(info);
}

void Ontology::set_gap_slots(std::vector<Iri> slots) {
  for (const auto& s : slots) {
    if (predicates_.count(s) == 0) {
      throw Error(ErrorCode::kUnknownPredicate, s.compact());
    }
  }
  gap_slots_ = std::move(slots);
}

const PredicateInfo* Ontology::predicate(const Iri& id) const {
  auto it = predicates_.find(id);
  return it == predicates_.end() ? nullptr : &it->second;
}

const ClassInfo* Ontology::cls(const Iri& id) const {
  auto it = classes_.find(id);
  return it == classes_.end() ? nullptr : &it->second;
}

std::optional<Iri> Ontology::class_by_label(std::string_view label) const {
  for (const auto& [id, info] : classes_) {
    if (info.label == label) return id;
  }
  return std::nullopt;
}

bool Ontology::is_subclass_of(const Iri& sub, const Iri& super) const {
  std::set<Iri> seen;
  for (std::optional<Iri> cur = sub; cur && seen.insert(*cur).second;) {
    if (*cur == super) return true;
    auto it = classes_.find(*cur);
    cur = it == classes_.end() ? std::nullopt : it->second.parent;
  }
  return false;
}

bool Ontology::acyclic() const {
  for (const auto& [id, info] : classes_) {
    std::set<Iri> seen{id};
    for (auto cur = info.parent; cur;) {
      if (!seen.insert(*cur).second) return false;
      auto it = classes_.find(*cur);
      cur = it == classes_.end() ? std::nullopt : it->second.parent;
    }
  }
  return true;
}

std::vector<Triple> Ontology::to_triples() const {
  std::vector<Triple> out;
  for (const auto& [id, info] : classes_) {
    out.push_back({id, rdf("type"), rdfs("Class")});
    out.push_back({id, rdfs("label"), Term::literal(info.label)});
    if (info.parent) out.push_back({id, rdfs("subClassOf"), *info.parent});
  }
  for (const auto& [id, info] : predicates_) {
    out.push_back({id, rdf("type"), rdf("Property")});
    if (info.cardinality == Cardinality::kOne) {
      out.push_back({id, rdf("type"), owl("FunctionalProperty")});
    }
    out.push_back({id, rdfs("domain"), info.domain});
    out.push_back({id, rdfs("range"), info.range});
  }
  for (std::size_t i = 0; i < gap_slots_.size(); ++i) {
    out.push_back(
        {gap_slots_[i], n2mu("gapRank"), Term::literal(std::to_string(i + 1))});
  }
  return out;
}

Ontology Ontology::from_store(const TripleStore& store) {
  Ontology o;
  auto iri_of = [&](const Iri& s, const Iri& p) -> std::optional<Iri> {
    auto t = store.first_object(s, p);
    if (t && t->is_iri()) return t->iri();
    return std::nullopt;
  };
  // Parents first so the cycle check sees a consistent chain.
  std::vector<Iri> class_ids = store.subjects(rdf("type"), rdfs("Class"));
  for (const auto& id : class_ids) {
    auto label = store.first_object(id, rdfs("label"));
    o.classes_[id] = ClassInfo{
        id, iri_of(id, rdfs("subClassOf")),
        label && label->is_literal() ? label->as_literal().lexical : ""};
  }
  if (!o.acyclic()) {
    throw Error(ErrorCode::kParseError, "subclass cycle in ontology");
  }
  for (const auto& id : store.subjects(rdf("type"), rdf("Property"))) {
    PredicateInfo info{id,
                       store.contains({id, rdf("type"), owl("FunctionalProperty")})
                           ? Cardinality::kOne
                           : Cardinality::kMany,
                       iri_of(id, rdfs("domain")).value_or(owl("Thing")),
                       iri_of(id, rdfs("range")).value_or(owl("Thing"))};
    o.predicates_[id] = info;
  }
  std::vector<std::pair<int, Iri>> ranked;
  for (const auto& t : store.match(std::nullopt, n2mu("gapRank"), std::nullopt)) {
    if (t.object.is_literal()) {
      ranked.emplace_back(std::stoi(t.object.as_literal().lexical), t.subject);
    }
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<Iri> slots;
  for (auto& [rank, id] : ranked) slots.push_back(id);
  o.set_gap_slots(std::move(slots));
  return o;
}

}  // namespace tom
