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

// The social ontology: classes with subclass edges, predicates with
// cardinality/domain/range, and the ordered person gap slots.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tom/term.h"

namespace tom {

class TripleStore;

enum class Cardinality { kOne, kMany };

struct PredicateInfo {
  Iri id;
  Cardinality cardinality = Cardinality::kMany;
  Iri domain;
  Iri range;
  friend bool operator==(const PredicateInfo&, const PredicateInfo&) = default;
};

struct ClassInfo {
  Iri id;
  std::optional<Iri> parent;
  std::string label;
  friend bool operator==(const ClassInfo&, const ClassInfo&) = default;
};

class Ontology {
 public:
  // Person, Robot, Location, Object, Animal and the animal kinds; the n2mu
  // predicates plus sem:hasActor; gap slots isFrom, hasOccupation, likes.
  static Ontology social();

  // Throws kInvalidArgument if the edge would close a cycle.
  void add_class(const Iri& id, const std::optional<Iri>& parent,
                 std::string label);
  void add_predicate(PredicateInfo info);
  // Every slot must already be a known predicate.
  void set_gap_slots(std::vector<Iri> slots);

  const PredicateInfo* predicate(const Iri& id) const;
  const ClassInfo* cls(const Iri& id) const;
  // Class whose label matches (case-sensitive, labels are lowercase).
  std::optional<Iri> class_by_label(std::string_view label) const;
  bool is_subclass_of(const Iri& sub, const Iri& super) const;
  bool acyclic() const;

  const std::map<Iri, ClassInfo>& classes() const { return classes_; }
  const std::map<Iri, PredicateInfo>& predicates() const {
    return predicates_;
  }
  const std::vector<Iri>& gap_slots() const { return gap_slots_; }

  std::vector<Triple> to_triples() const;
  // Rebuilds the ontology from the triples to_triples() emitted.
  static Ontology from_store(const TripleStore& store);

  friend bool operator==(const Ontology&, const Ontology&) = default;

 private:
  std::map<Iri, ClassInfo> classes_;
  std::map<Iri, PredicateInfo> predicates_;
  std::vector<Iri> gap_slots_;
};

}  // namespace tom
