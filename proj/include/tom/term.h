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

// Value types for the knowledge graph: compact identifiers, literals,
// terms, triples and the prefix table that maps namespace tokens to
// absolute namespace strings.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tom {

// Namespace tokens used throughout the brain.
namespace ns {
inline constexpr std::string_view kGrasp = "grasp";
inline constexpr std::string_view kSem = "sem";
inline constexpr std::string_view kProv = "prov";
inline constexpr std::string_view kRdf = "rdf";
inline constexpr std::string_view kRdfs = "rdfs";
inline constexpr std::string_view kOwl = "owl";
inline constexpr std::string_view kXsd = "xsd";
inline constexpr std::string_view kWorld = "leolaniWorld";
inline constexpr std::string_view kTalk = "leolaniTalk";
inline constexpr std::string_view kFriends = "leolaniFriends";
inline constexpr std::string_view kTime = "leolaniTime";
inline constexpr std::string_view kSensor = "leolaniSensor";
inline constexpr std::string_view kN2mu = "n2mu";
}  // namespace ns

// A compact identifier `prefix:local`. Expansion to an absolute identifier
// goes through a PrefixTable.
class Iri {
 public:
  Iri() = default;
  // Throws kMalformedCompactForm when `local` is empty or has whitespace, or
  // when `prefix` is empty or contains ':'.
  Iri(std::string_view prefix, std::string_view local);

  // Parses "prefix:local" (splitting at the first ':').
  static Iri parse(std::string_view compact);

  const std::string& prefix() const { return prefix_; }
  const std::string& local() const { return local_; }
  std::string compact() const { return prefix_ + ":" + local_; }
  bool empty() const { return local_.empty(); }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri& a, const Iri& b) {
    return a.compact() <=> b.compact();
  }

 private:
  std::string prefix_;
  std::string local_;
};

struct Literal {
  std::string lexical;
  std::optional<Iri> datatype;

  friend bool operator==(const Literal&, const Literal&) = default;
};

class Term {
 public:
  Term() = default;
  Term(Iri iri) : value_(std::move(iri)) {}  // NOLINT(implicit)
  Term(Literal literal) : value_(std::move(literal)) {}  // NOLINT(implicit)

  static Term literal(std::string lexical) {
    return Term(Literal{std::move(lexical), std::nullopt});
  }

  bool is_iri() const { return std::holds_alternative<Iri>(value_); }
  bool is_literal() const { return std::holds_alternative<Literal>(value_); }
  const Iri& iri() const { return std::get<Iri>(value_); }
  const Literal& as_literal() const { return std::get<Literal>(value_); }

  // The rendering used in dumps: compact Iri, or a quoted escaped literal
  // with an optional `^^datatype` suffix.
  std::string render() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::variant<Iri, Literal> value_;
};

std::strong_ordering compare_terms(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const {
    return compare_terms(a, b) < 0;
  }
};

struct Triple {
  Iri subject;
  Iri predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

// Total order, lexicographic on the compacted renderings of
// (subject, predicate, object).
std::strong_ordering canonical_compare(const Triple& a, const Triple& b);

struct TripleLess {
  bool operator()(const Triple& a, const Triple& b) const {
    return canonical_compare(a, b) < 0;
  }
};

std::string render_triple(const Triple& t);

// Literal escaping for the dump format. `"` and `\` get a backslash; so do
// newline, carriage return and tab (as \n, \r, \t) to keep one triple per line.
std::string escape_literal(std::string_view raw);
std::string unescape_literal(std::string_view escaped);

class PrefixTable {
 public:
  PrefixTable() = default;

  // The default table: every namespace the brain mints identifiers in.
  static PrefixTable defaults();

  // Throws kInvalidArgument if the token or the namespace is already bound
  // to something else (the table stays injective).
  void add(std::string_view token, std::string_view namespace_iri);

  bool contains(std::string_view token) const;
  const std::string& namespace_of(std::string_view token) const;
  const std::map<std::string, std::string, std::less<>>& entries() const {
    return entries_;
  }

  friend bool operator==(const PrefixTable&, const PrefixTable&) = default;

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

// Base shared by the project-owned namespaces.
inline constexpr std::string_view kProjectBase = "http://cltl.nl/leolani/";

std::string expand_iri(std::string_view compact, const PrefixTable& prefixes);
std::string compact_iri(std::string_view absolute, const PrefixTable& prefixes);

// Convenience constructors.
inline Iri grasp(std::string_view l) { return Iri(ns::kGrasp, l); }
inline Iri sem(std::string_view l) { return Iri(ns::kSem, l); }
inline Iri prov(std::string_view l) { return Iri(ns::kProv, l); }
inline Iri rdf(std::string_view l) { return Iri(ns::kRdf, l); }
inline Iri rdfs(std::string_view l) { return Iri(ns::kRdfs, l); }
inline Iri owl(std::string_view l) { return Iri(ns::kOwl, l); }
inline Iri world(std::string_view l) { return Iri(ns::kWorld, l); }
inline Iri talk(std::string_view l) { return Iri(ns::kTalk, l); }
inline Iri friends(std::string_view l) { return Iri(ns::kFriends, l); }
inline Iri sensor(std::string_view l) { return Iri(ns::kSensor, l); }
inline Iri n2mu(std::string_view l) { return Iri(ns::kN2mu, l); }
inline Iri time_iri(std::string_view yyyymmdd) {
  return Iri(ns::kTime, yyyymmdd);
}

}  // namespace tom
