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

#include "tom/term.h"

#include <algorithm>
#include <cctype>

#include "tom/error.h"

namespace tom {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownPrefix: return "UnknownPrefix";
    case ErrorCode::kMalformedCompactForm: return "MalformedCompactForm";
    case ErrorCode::kNoMatchingPrefix: return "NoMatchingPrefix";
    case ErrorCode::kSpanOutOfBounds: return "SpanOutOfBounds";
    case ErrorCode::kResultCapExceeded: return "ResultCapExceeded";
    case ErrorCode::kUnknownClaim: return "UnknownClaim";
    case ErrorCode::kUnknownPredicate: return "UnknownPredicate";
    case ErrorCode::kNotAPerson: return "NotAPerson";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kLookupUnavailable: return "LookupUnavailable";
    case ErrorCode::kUnparsableUtterance: return "UnparsableUtterance";
    case ErrorCode::kUnresolvedReference: return "UnresolvedReference";
    case ErrorCode::kMissingTemplate: return "MissingTemplate";
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kEmptyTrack: return "EmptyTrack";
    case ErrorCode::kLabelMismatch: return "LabelMismatch";
    case ErrorCode::kUnknownTrack: return "UnknownTrack";
    case ErrorCode::kScriptParseError: return "ScriptParseError";
    case ErrorCode::kExpectMismatch: return "ExpectMismatch";
    case ErrorCode::kSessionClosed: return "SessionClosed";
    case ErrorCode::kMalformedEvent: return "MalformedEvent";
    case ErrorCode::kUnknownSelector: return "UnknownSelector";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

Iri::Iri(std::string_view prefix, std::string_view local)
    : prefix_(prefix), local_(local) {
  if (prefix_.empty() || prefix_.find(':') != std::string::npos ||
      has_space(prefix_)) {
    throw Error(ErrorCode::kMalformedCompactForm,
                "bad prefix '" + prefix_ + "'");
  }
  if (local_.empty() || has_space(local_)) {
    throw Error(ErrorCode::kMalformedCompactForm,
                "bad local name '" + local_ + "'");
  }
}

Iri Iri::parse(std::string_view compact) {
  auto colon = compact.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kMalformedCompactForm,
                "missing ':' in '" + std::string(compact) + "'");
  }
  return Iri(compact.substr(0, colon), compact.substr(colon + 1));
}

std::string escape_literal(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_literal(std::string_view escaped) {
  std::string out;
  out.reserve(escaped.size());
  for (std::size_t i = 0; i < escaped.size(); ++i) {
    char c = escaped[i];
    if (c != '\\') {
      out += c;
      continue;
    }
    if (++i == escaped.size()) {
      throw Error(ErrorCode::kParseError, "dangling backslash in literal");
    }
    switch (escaped[i]) {
      case '"': out += '"'; break;
      case '\\': out += '\\'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 't': out += '\t'; break;
      default:
        throw Error(ErrorCode::kParseError,
                    std::string("unknown escape \\") + escaped[i]);
    }
  }
  return out;
}

std::string Term::render() const {
  if (is_iri()) return iri().compact();
  const auto& lit = as_literal();
  std::string out = "\"" + escape_literal(lit.lexical) + "\"";
  if (lit.datatype) out += "^^" + lit.datatype->compact();
  return out;
}

std::strong_ordering compare_terms(const Term& a, const Term& b) {
  return a.render() <=> b.render();
}

std::strong_ordering canonical_compare(const Triple& a, const Triple& b) {
  if (auto c = a.subject.compact() <=> b.subject.compact(); c != 0) return c;
  if (auto c = a.predicate.compact() <=> b.predicate.compact(); c != 0) {
    return c;
  }
  return compare_terms(a.object, b.object);
}

std::string render_triple(const Triple& t) {
  return t.subject.compact() + " " + t.predicate.compact() + " " +
         t.object.render() + " .";
}

PrefixTable PrefixTable::defaults() {
  PrefixTable table;
  const std::string base(kProjectBase);
  table.add(ns::kGrasp, "http://groundedannotationframework.org/grasp#");
  table.add(ns::kSem, "http://semanticweb.cs.vu.nl/2009/11/sem/");
  table.add(ns::kProv, "http://www.w3.org/ns/prov#");
  table.add(ns::kRdf, "http://www.w3.org/1999/02/22-rdf-syntax-ns#");
  table.add(ns::kRdfs, "http://www.w3.org/2000/01/rdf-schema#");
  table.add(ns::kOwl, "http://www.w3.org/2002/07/owl#");
  table.add(ns::kXsd, "http://www.w3.org/2001/XMLSchema#");
  table.add(ns::kWorld, base + "world/");
  table.add(ns::kTalk, base + "talk/");
  table.add(ns::kFriends, base + "friends/");
  table.add(ns::kTime, base + "time/");
  table.add(ns::kSensor, base + "sensor/");
  table.add(ns::kN2mu, base + "n2mu/");
  return table;
}

void PrefixTable::add(std::string_view token, std::string_view namespace_iri) {
  if (token.empty() || token.find(':') != std::string_view::npos ||
      namespace_iri.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "bad prefix binding");
  }
  if (auto it = entries_.find(token); it != entries_.end()) {
    if (it->second == namespace_iri) return;
    throw Error(ErrorCode::kInvalidArgument,
                "prefix '" + std::string(token) + "' already bound");
  }
  for (const auto& [tok, space] : entries_) {
    if (space == namespace_iri) {
      throw Error(ErrorCode::kInvalidArgument,
                  "namespace already bound to '" + tok + "'");
    }
  }
  entries_.emplace(std::string(token), std::string(namespace_iri));
}

bool PrefixTable::contains(std::string_view token) const {
  return entries_.find(token) != entries_.end();
}

const std::string& PrefixTable::namespace_of(std::string_view token) const {
  auto it = entries_.find(token);
  if (it == entries_.end()) {
    throw Error(ErrorCode::kUnknownPrefix, std::string(token));
  }
  return it->second;
}

std::string expand_iri(std::string_view compact, const PrefixTable& prefixes) {
  auto colon = compact.find(':');
  if (colon == std::string_view::npos || colon == 0 ||
      colon + 1 == compact.size() ||
      compact.find(':', colon + 1) != std::string_view::npos ||
      has_space(compact)) {
    throw Error(ErrorCode::kMalformedCompactForm, std::string(compact));
  }
  return prefixes.namespace_of(compact.substr(0, colon)) +
         std::string(compact.substr(colon + 1));
}

std::string compact_iri(std::string_view absolute,
                        const PrefixTable& prefixes) {
  const std::string* best_token = nullptr;
  std::size_t best_len = 0;
  for (const auto& [token, space] : prefixes.entries()) {
    if (space.size() > best_len && absolute.size() > space.size() &&
        absolute.substr(0, space.size()) == space) {
      best_token = &token;
      best_len = space.size();
    }
  }
  if (best_token == nullptr) {
    throw Error(ErrorCode::kNoMatchingPrefix, std::string(absolute));
  }
  return *best_token + ":" + std::string(absolute.substr(best_len));
}

}  // namespace tom
