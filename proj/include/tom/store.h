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

// Dictionary-encoded triple store with three permutation indexes and a
// basic-graph-pattern evaluator.
//
// Query semantics (shared with the brute-force oracle in the tests):
//  - a conjunction of triple patterns, set semantics over binding sets;
//  - a ground `rdf:type` predicate matches through the reflexive-transitive
//    closure of the stored `rdfs:subClassOf` edges;
//  - a pattern flagged `star` matches the reflexive-transitive closure of
//    its (ground) predicate; zero-length matches range over the nodes of
//    that predicate's stored edges;
//  - `grasp:hasAttribution` is the inverse of `grasp:isAttributionFor`;
//  - an optional partition restricts matches to triples whose subject falls
//    into that logical partition.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tom/term.h"

namespace tom {

enum class Partition { kInstances, kClaims, kPerspectives, kOntology };

std::string_view partition_name(Partition p);

// Partition membership is a function of the subject and its stored types.
Partition classify_partition(const Iri& subject, const std::vector<Iri>& types);

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Term, Variable>;

inline PatternTerm var(std::string name) { return Variable{std::move(name)}; }

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
  bool star = false;
  std::optional<Partition> partition;

  std::string render() const;
};

using BindingSet = std::map<std::string, Term>;

inline constexpr std::size_t kDefaultResultCap = 10000;

class TripleStore {
 public:
  using Id = std::uint32_t;

  // Returns true if the triple was new.
  bool insert(const Triple& t);
  // Returns true if the triple was present.
  bool erase(const Triple& t);
  bool contains(const Triple& t) const;
  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }

  // All triples in canonical order.
  std::vector<Triple> triples() const;

  // Index-backed lookups; nullopt components are wildcards.
  std::vector<Triple> match(const std::optional<Iri>& s,
                            const std::optional<Iri>& p,
                            const std::optional<Term>& o) const;
  std::vector<Term> objects(const Iri& s, const Iri& p) const;
  std::vector<Iri> subjects(const Iri& p, const Term& o) const;
  std::optional<Term> first_object(const Iri& s, const Iri& p) const;

  // Each index reconstructs the same triple set.
  bool indexes_coherent() const;

  Partition partition_of(const Iri& subject) const;

  std::vector<BindingSet> select(const std::vector<TriplePattern>& patterns,
                                 std::size_t cap = kDefaultResultCap) const;
  bool ask(const std::vector<TriplePattern>& patterns) const;
  std::size_t count(const std::vector<TriplePattern>& patterns) const;

  friend bool operator==(const TripleStore& a, const TripleStore& b) {
    return a.triples() == b.triples();
  }

 private:
  using Key = std::array<Id, 3>;

  std::optional<Id> find_id(const Term& t) const;
  Id intern(const Term& t);
  const Term& term(Id id) const { return terms_[id]; }

  void scan(std::optional<Id> s, std::optional<Id> p, std::optional<Id> o,
            std::vector<Key>& out) const;
  std::set<Id> superclasses(Id cls) const;
  std::set<Id> subclasses(Id cls) const;
  std::set<Id> forward_closure(Id start, Id pred) const;
  std::set<Id> backward_closure(Id start, Id pred) const;
  bool is_edge_node(Id node, Id pred) const;

  struct Compiled;
  void match_pattern(const Compiled& pat, const std::vector<std::optional<Id>>& row,
                     std::vector<Key>& out) const;
  bool subject_in_partition(Id s, Partition part) const;

  std::vector<Term> terms_;
  std::unordered_map<std::string, Id> ids_;
  std::set<Key> spo_;
  std::set<Key> pos_;
  std::set<Key> osp_;
};

}  // namespace tom
