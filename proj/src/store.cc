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

#include "tom/store.h"

#include <algorithm>
#include <limits>

#include "tom/error.h"

namespace tom {

std::string_view partition_name(Partition p) {
  switch (p) {
    case Partition::kInstances: return "instances";
    case Partition::kClaims: return "claims";
    case Partition::kPerspectives: return "perspectives";
    case Partition::kOntology: return "ontology";
  }
  return "instances";
}

Partition classify_partition(const Iri& subject,
                             const std::vector<Iri>& types) {
  for (const auto& t : types) {
    if (t == grasp("Statement")) return Partition::kClaims;
  }
  for (const auto& t : types) {
    if (t == grasp("Turn") || t == grasp("Chat") || t == grasp("Mention") ||
        t == grasp("Attribution") || t == prov("Activity") ||
        t.prefix() == ns::kSensor) {
      return Partition::kPerspectives;
    }
  }
  for (const auto& t : types) {
    if (t == rdfs("Class") || t == rdf("Property") ||
        t == owl("FunctionalProperty")) {
      return Partition::kOntology;
    }
  }
  if (subject.prefix() == ns::kN2mu) return Partition::kOntology;
  return Partition::kInstances;
}

std::string TriplePattern::render() const {
  auto one = [](const PatternTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) return "?" + v->name;
    return std::get<Term>(t).render();
  };
  std::string p = one(predicate);
  if (star) p += "*";
  return one(subject) + " " + p + " " + one(object);
}

// -- storage ---------------------------------------------------------------

std::optional<TripleStore::Id> TripleStore::find_id(const Term& t) const {
  auto it = ids_.find(t.render());
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

TripleStore::Id TripleStore::intern(const Term& t) {
  auto key = t.render();
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  auto id = static_cast<Id>(terms_.size());
  terms_.push_back(t);
  ids_.emplace(std::move(key), id);
  return id;
}

bool TripleStore::insert(const Triple& t) {
  Id s = intern(t.subject);
  Id p = intern(t.predicate);
  Id o = intern(t.object);
  if (!spo_.insert({s, p, o}).second) return false;
  pos_.insert({p, o, s});
  osp_.insert({o, s, p});
  return true;
}

bool TripleStore::erase(const Triple& t) {
  auto s = find_id(t.subject);
  auto p = find_id(t.predicate);
  auto o = find_id(t.object);
  if (!s || !p || !o) return false;
  if (spo_.erase({*s, *p, *o}) == 0) return false;
  pos_.erase({*p, *o, *s});
  osp_.erase({*o, *s, *p});
  return true;
}

bool TripleStore::contains(const Triple& t) const {
  auto s = find_id(t.subject);
  auto p = find_id(t.predicate);
  auto o = find_id(t.object);
  return s && p && o && spo_.count({*s, *p, *o}) > 0;
}

std::vector<Triple> TripleStore::triples() const {
  std::vector<Triple> out;
  out.reserve(spo_.size());
  for (const auto& [s, p, o] : spo_) {
    out.push_back(Triple{term(s).iri(), term(p).iri(), term(o)});
  }
  std::sort(out.begin(), out.end(), TripleLess{});
  return out;
}

void TripleStore::scan(std::optional<Id> s, std::optional<Id> p,
                       std::optional<Id> o, std::vector<Key>& out) const {
  constexpr Id kMax = std::numeric_limits<Id>::max();
  auto range = [&](const std::set<Key>& index, Id a, std::optional<Id> b,
                   auto&& emit) {
    auto lo = index.lower_bound({a, b.value_or(0), 0});
    auto hi = b ? index.upper_bound({a, *b, kMax})
                : index.upper_bound({a, kMax, kMax});
    for (auto it = lo; it != hi; ++it) emit(*it);
  };
  if (s) {
    if (p) {
      range(spo_, *s, p, [&](const Key& k) {
        if (!o || k[2] == *o) out.push_back(k);
      });
    } else if (o) {
      range(osp_, *o, s, [&](const Key& k) { out.push_back({k[1], k[2], k[0]}); });
    } else {
      range(spo_, *s, std::nullopt, [&](const Key& k) { out.push_back(k); });
    }
  } else if (p) {
    range(pos_, *p, o, [&](const Key& k) { out.push_back({k[2], k[0], k[1]}); });
  } else if (o) {
    range(osp_, *o, std::nullopt,
          [&](const Key& k) { out.push_back({k[1], k[2], k[0]}); });
  } else {
    out.insert(out.end(), spo_.begin(), spo_.end());
  }
}

std::vector<Triple> TripleStore::match(const std::optional<Iri>& s,
                                       const std::optional<Iri>& p,
                                       const std::optional<Term>& o) const {
  std::optional<Id> si, pi, oi;
  if (s && !(si = find_id(*s))) return {};
  if (p && !(pi = find_id(*p))) return {};
  if (o && !(oi = find_id(*o))) return {};
  std::vector<Key> keys;
  scan(si, pi, oi, keys);
  std::vector<Triple> out;
  out.reserve(keys.size());
  for (const auto& [a, b, c] : keys) {
    out.push_back(Triple{term(a).iri(), term(b).iri(), term(c)});
  }
  std::sort(out.begin(), out.end(), TripleLess{});
  return out;
}

std::vector<Term> TripleStore::objects(const Iri& s, const Iri& p) const {
  std::vector<Term> out;
  for (auto& t : match(s, p, std::nullopt)) out.push_back(std::move(t.object));
  return out;
}

std::vector<Iri> TripleStore::subjects(const Iri& p, const Term& o) const {
  std::vector<Iri> out;
  for (auto& t : match(std::nullopt, p, o)) out.push_back(std::move(t.subject));
  return out;
}

std::optional<Term> TripleStore::first_object(const Iri& s,
                                              const Iri& p) const {
  auto objs = objects(s, p);
  if (objs.empty()) return std::nullopt;
  return objs.front();
}

bool TripleStore::indexes_coherent() const {
  std::set<Key> from_pos, from_osp;
  for (const auto& [p, o, s] : pos_) from_pos.insert({s, p, o});
  for (const auto& [o, s, p] : osp_) from_osp.insert({s, p, o});
  return from_pos == spo_ && from_osp == spo_;
}

Partition TripleStore::partition_of(const Iri& subject) const {
  std::vector<Iri> types;
  for (const auto& t : objects(subject, rdf("type"))) {
    if (t.is_iri()) types.push_back(t.iri());
  }
  return classify_partition(subject, types);
}

bool TripleStore::subject_in_partition(Id s, Partition part) const {
  const Term& t = term(s);
  if (!t.is_iri()) return part == Partition::kInstances;
  return partition_of(t.iri()) == part;
}

// -- closures --------------------------------------------------------------

bool TripleStore::is_edge_node(Id node, Id pred) const {
  std::vector<Key> keys;
  scan(node, pred, std::nullopt, keys);
  if (!keys.empty()) return true;
  scan(std::nullopt, pred, node, keys);
  return !keys.empty();
}

std::set<TripleStore::Id> TripleStore::forward_closure(Id start,
                                                       Id pred) const {
  std::set<Id> seen;
  std::vector<Id> frontier{start};
  while (!frontier.empty()) {
    Id cur = frontier.back();
    frontier.pop_back();
    std::vector<Key> keys;
    scan(cur, pred, std::nullopt, keys);
    for (const auto& k : keys) {
      if (seen.insert(k[2]).second) frontier.push_back(k[2]);
    }
  }
  if (is_edge_node(start, pred)) seen.insert(start);
  return seen;
}

std::set<TripleStore::Id> TripleStore::backward_closure(Id start,
                                                        Id pred) const {
  std::set<Id> seen;
  std::vector<Id> frontier{start};
  while (!frontier.empty()) {
    Id cur = frontier.back();
    frontier.pop_back();
    std::vector<Key> keys;
    scan(std::nullopt, pred, cur, keys);
    for (const auto& k : keys) {
      if (seen.insert(k[0]).second) frontier.push_back(k[0]);
    }
  }
  if (is_edge_node(start, pred)) seen.insert(start);
  return seen;
}

std::set<TripleStore::Id> TripleStore::superclasses(Id cls) const {
  std::set<Id> out;
  if (auto sub = find_id(rdfs("subClassOf"))) out = forward_closure(cls, *sub);
  out.insert(cls);
  return out;
}

std::set<TripleStore::Id> TripleStore::subclasses(Id cls) const {
  std::set<Id> out;
  if (auto sub = find_id(rdfs("subClassOf"))) out = backward_closure(cls, *sub);
  out.insert(cls);
  return out;
}

// -- evaluation ------------------------------------------------------------

namespace {

// A compiled position: a constant id, a variable slot, or a constant that
// is absent from the dictionary (the pattern cannot match).
struct Slot {
  enum Kind { kConst, kVar, kMissing } kind = kMissing;
  std::uint32_t value = 0;
};

}  // namespace

struct TripleStore::Compiled {
  std::array<Slot, 3> slots;
  enum Mode { kPlain, kType, kStar } mode = kPlain;
  std::optional<Partition> partition;
};

void TripleStore::match_pattern(const Compiled& pat,
                                const std::vector<std::optional<Id>>& row,
                                std::vector<Key>& out) const {
  std::array<std::optional<Id>, 3> bound;
  for (int i = 0; i < 3; ++i) {
    const Slot& slot = pat.slots[i];
    if (slot.kind == Slot::kMissing) return;
    if (slot.kind == Slot::kConst) bound[i] = slot.value;
    else bound[i] = row[slot.value];
  }
  const auto& [s, p, o] = bound;

  std::vector<Key> raw;
  switch (pat.mode) {
    case Compiled::kPlain:
      scan(s, p, o, raw);
      break;
    case Compiled::kType: {
      if (o) {
        for (Id sub : subclasses(*o)) {
          std::vector<Key> keys;
          scan(s, p, sub, keys);
          for (const auto& k : keys) raw.push_back({k[0], *p, *o});
        }
      } else {
        std::vector<Key> keys;
        scan(s, p, std::nullopt, keys);
        for (const auto& k : keys) {
          for (Id sup : superclasses(k[2])) raw.push_back({k[0], *p, sup});
        }
      }
      break;
    }
    case Compiled::kStar: {
      if (s) {
        for (Id x : forward_closure(*s, *p)) {
          if (!o || x == *o) raw.push_back({*s, *p, x});
        }
      } else if (o) {
        for (Id x : backward_closure(*o, *p)) raw.push_back({x, *p, *o});
      } else {
        std::set<Id> nodes;
        std::vector<Key> keys;
        scan(std::nullopt, p, std::nullopt, keys);
        for (const auto& k : keys) {
          nodes.insert(k[0]);
          nodes.insert(k[2]);
        }
        for (Id n : nodes) {
          for (Id x : forward_closure(n, *p)) raw.push_back({n, *p, x});
        }
      }
      break;
    }
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (const auto& k : raw) {
    if (pat.partition && !subject_in_partition(k[0], *pat.partition)) continue;
    out.push_back(k);
  }
}

std::vector<BindingSet> TripleStore::select(
    const std::vector<TriplePattern>& patterns, std::size_t cap) const {
  if (patterns.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty pattern list");
  }
  std::vector<std::string> var_names;
  auto var_slot = [&](const std::string& name) {
    auto it = std::find(var_names.begin(), var_names.end(), name);
    if (it != var_names.end()) {
      return static_cast<std::uint32_t>(it - var_names.begin());
    }
    var_names.push_back(name);
    return static_cast<std::uint32_t>(var_names.size() - 1);
  };

  const Term rdf_type = rdf("type");
  const Term has_attr = grasp("hasAttribution");
  std::vector<Compiled> compiled;
  for (const auto& pat : patterns) {
    std::array<const PatternTerm*, 3> pos{&pat.subject, &pat.predicate,
                                          &pat.object};
    const auto* pred_term = std::get_if<Term>(&pat.predicate);
    bool inverse = pred_term && *pred_term == has_attr && !pat.star;
    if (inverse) std::swap(pos[0], pos[2]);
    Compiled c;
    c.partition = pat.partition;
    for (int i = 0; i < 3; ++i) {
      if (const auto* v = std::get_if<Variable>(pos[i])) {
        c.slots[i] = Slot{Slot::kVar, var_slot(v->name)};
      } else {
        Term t = std::get<Term>(*pos[i]);
        if (i == 1 && inverse) t = grasp("isAttributionFor");
        if (auto id = find_id(t)) c.slots[i] = Slot{Slot::kConst, *id};
      }
    }
    if (pat.star) {
      if (!pred_term) {
        throw Error(ErrorCode::kInvalidArgument,
                    "closure patterns need a ground predicate");
      }
      c.mode = Compiled::kStar;
    } else if (pred_term && *pred_term == rdf_type) {
      c.mode = Compiled::kType;
    }
    compiled.push_back(c);
  }

  // Greedy join order: the pattern with the most bound positions next.
  std::vector<bool> done(compiled.size(), false);
  std::vector<bool> var_bound(var_names.size(), false);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < compiled.size(); ++step) {
    int best = -1, best_score = -1;
    for (std::size_t i = 0; i < compiled.size(); ++i) {
      if (done[i]) continue;
      int score = 0;
      for (const auto& slot : compiled[i].slots) {
        if (slot.kind != Slot::kVar || var_bound[slot.value]) ++score;
      }
      if (score > best_score) {
        best_score = score;
        best = static_cast<int>(i);
      }
    }
    done[best] = true;
    order.push_back(best);
    for (const auto& slot : compiled[best].slots) {
      if (slot.kind == Slot::kVar) var_bound[slot.value] = true;
    }
  }

  using Row = std::vector<std::optional<Id>>;
  std::vector<Row> rows{Row(var_names.size())};
  for (std::size_t idx : order) {
    const Compiled& pat = compiled[idx];
    std::vector<Row> next;
    for (const Row& row : rows) {
      std::vector<Key> keys;
      match_pattern(pat, row, keys);
      for (const auto& k : keys) {
        Row extended = row;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          const Slot& slot = pat.slots[i];
          if (slot.kind != Slot::kVar) continue;
          auto& cell = extended[slot.value];
          if (cell && *cell != k[i]) ok = false;
          else cell = k[i];
        }
        if (ok) next.push_back(std::move(extended));
      }
    }
    rows = std::move(next);
    if (rows.empty()) break;
  }

  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  if (rows.size() > cap) {
    throw Error(ErrorCode::kResultCapExceeded,
                std::to_string(rows.size()) + " results exceed cap " +
                    std::to_string(cap));
  }
  std::vector<BindingSet> out;
  out.reserve(rows.size());
  for (const Row& row : rows) {
    BindingSet b;
    for (std::size_t i = 0; i < var_names.size(); ++i) {
      b.emplace(var_names[i], term(*row[i]));
    }
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const BindingSet& a, const BindingSet& b) {
    // Same variable set on both sides, so the maps iterate in lockstep.
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
      if (auto c = compare_terms(ia->second, ib->second); c != 0) return c < 0;
    }
    return false;
  });
  return out;
}

bool TripleStore::ask(const std::vector<TriplePattern>& patterns) const {
  return !select(patterns, std::numeric_limits<std::size_t>::max()).empty();
}

std::size_t TripleStore::count(
    const std::vector<TriplePattern>& patterns) const {
  return select(patterns).size();
}

}  // namespace tom
