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
#include <sstream>
#include <tuple>

#include "tom/brain.h"
#include "tom/error.h"

namespace tom {

std::string serialize_store(const TripleStore& store,
                            const PrefixTable& prefixes) {
  std::string out;
  for (const auto& [token, space] : prefixes.entries()) {
    out += "@prefix " + token + ": <" + space + "> .\n";
  }
  out += "\n";
  for (const auto& t : store.triples()) {
    out += render_triple(t);
    out += "\n";
  }
  return out;
}

namespace {

Iri parse_iri_token(std::string_view tok, const PrefixTable& prefixes,
                    std::size_t line) {
  try {
    Iri iri = Iri::parse(tok);
    if (!prefixes.contains(iri.prefix())) {
      throw ParseError(ErrorCode::kParseError, line,
                       "undeclared prefix '" + iri.prefix() + "'");
    }
    return iri;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(ErrorCode::kParseError, line, e.what());
  }
}

Term parse_object(std::string_view tok, const PrefixTable& prefixes,
                  std::size_t line) {
  if (tok.empty()) throw ParseError(ErrorCode::kParseError, line, "no object");
  if (tok.front() != '"') return parse_iri_token(tok, prefixes, line);
  std::size_t i = 1;
  for (; i < tok.size(); ++i) {
    if (tok[i] == '\\') {
      ++i;
    } else if (tok[i] == '"') {
      break;
    }
  }
  if (i >= tok.size()) {
    throw ParseError(ErrorCode::kParseError, line, "unterminated literal");
  }
  std::string lexical;
  try {
    lexical = unescape_literal(tok.substr(1, i - 1));
  } catch (const Error& e) {
    throw ParseError(ErrorCode::kParseError, line, e.what());
  }
  auto rest = tok.substr(i + 1);
  if (rest.empty()) return Term::literal(std::move(lexical));
  if (rest.substr(0, 2) != "^^") {
    throw ParseError(ErrorCode::kParseError, line, "junk after literal");
  }
  return Term(Literal{std::move(lexical),
                      parse_iri_token(rest.substr(2), prefixes, line)});
}

}  // namespace

void parse_dump(std::string_view text, PrefixTable& prefixes,
                TripleStore& store) {
  std::size_t line_no = 0;
  bool in_header = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      throw ParseError(ErrorCode::kParseError, line_no + 1,
                       "missing trailing newline");
    }
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (in_header) {
      if (line.empty()) {
        in_header = false;
        continue;
      }
      // @prefix tok: <ns> .
      if (line.substr(0, 8) != "@prefix " || line.size() < 14 ||
          line.substr(line.size() - 3) != "> .") {
        throw ParseError(ErrorCode::kParseError, line_no, "bad prefix line");
      }
      auto body = line.substr(8, line.size() - 8 - 3);
      auto colon = body.find(": <");
      if (colon == std::string_view::npos || colon == 0) {
        throw ParseError(ErrorCode::kParseError, line_no, "bad prefix line");
      }
      try {
        prefixes.add(body.substr(0, colon), body.substr(colon + 3));
      } catch (const Error& e) {
        throw ParseError(ErrorCode::kParseError, line_no, e.what());
      }
      continue;
    }
    if (line.size() < 2 || line.substr(line.size() - 2) != " .") {
      throw ParseError(ErrorCode::kParseError, line_no, "missing ' .'");
    }
    auto body = line.substr(0, line.size() - 2);
    auto sp1 = body.find(' ');
    auto sp2 = sp1 == std::string_view::npos ? sp1 : body.find(' ', sp1 + 1);
    if (sp2 == std::string_view::npos) {
      throw ParseError(ErrorCode::kParseError, line_no,
                       "expected subject predicate object");
    }
    Iri s = parse_iri_token(body.substr(0, sp1), prefixes, line_no);
    Iri p = parse_iri_token(body.substr(sp1 + 1, sp2 - sp1 - 1), prefixes,
                            line_no);
    Term o = parse_object(body.substr(sp2 + 1), prefixes, line_no);
    store.insert({s, p, o});
  }
  if (in_header && line_no > 0) {
    throw ParseError(ErrorCode::kParseError, line_no,
                     "missing blank line after prefixes");
  }
}

std::string Brain::serialize() const {
  return serialize_store(store_, prefixes_);
}

Brain Brain::deserialize(std::string_view text) {
  Brain b;
  b.store_ = TripleStore();
  b.prefixes_ = PrefixTable();
  parse_dump(text, b.prefixes_, b.store_);
  try {
    b.ontology_ = Ontology::from_store(b.store_);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(ErrorCode::kParseError, 0, e.what());
  }
  b.rebuild_from_store();
  return b;
}

void Brain::rebuild_from_store() {
  claim_registry_ = ClaimRegistry();
  chats_.clear();
  turns_.clear();
  turns_per_chat_.clear();
  mentions_.clear();
  mention_index_.clear();
  mentions_by_denotes_.clear();
  attributions_.clear();
  attributions_by_mention_.clear();
  attribution_counts_.clear();
  percepts_.clear();
  lookups_.clear();
  signal_order_.clear();
  signal_dates_.clear();
  signal_counter_ = 0;

  for (const auto& t :
       store_.match(std::nullopt, n2mu("signalOrder"), std::nullopt)) {
    if (!t.object.is_literal()) continue;
    int n = std::stoi(t.object.as_literal().lexical);
    signal_order_[t.subject] = n;
    signal_counter_ = std::max(signal_counter_, n);
  }
  auto by_signal = [this](const Iri& a, const Iri& b) {
    return signal_order_[a] < signal_order_[b];
  };

  for (const auto& id : store_.subjects(rdf("type"), grasp("Statement"))) {
    if (auto c = read_claim(store_, id)) claim_registry_.adopt(*c);
  }
  for (const auto& id : store_.subjects(rdf("type"), grasp("Chat"))) {
    if (auto c = read_chat(store_, id)) chats_.push_back(*c);
  }
  std::sort(chats_.begin(), chats_.end(),
            [](const ChatRecord& a, const ChatRecord& b) {
              return a.number < b.number;
            });

  auto turn_ids = store_.subjects(rdf("type"), grasp("Turn"));
  std::sort(turn_ids.begin(), turn_ids.end(), by_signal);
  for (const auto& id : turn_ids) {
    auto t = read_turn(store_, id);
    if (!t) continue;
    turns_.push_back(*t);
    turns_per_chat_[t->chat] = std::max(turns_per_chat_[t->chat], t->index);
    signal_dates_[id] = t->date;
  }

  std::vector<Iri> percept_ids =
      store_.subjects(rdf("type"), sensor("FacePercept"));
  for (const auto& id : store_.subjects(rdf("type"), sensor("ObjectPercept"))) {
    percept_ids.push_back(id);
  }
  std::sort(percept_ids.begin(), percept_ids.end(), by_signal);
  for (const auto& id : percept_ids) {
    if (auto p = read_percept(store_, id)) {
      percepts_.push_back(*p);
      signal_dates_[id] = p->time;
    }
  }

  auto lookup_ids = store_.subjects(rdf("type"), prov("Activity"));
  std::sort(lookup_ids.begin(), lookup_ids.end(), by_signal);
  for (const auto& id : lookup_ids) {
    if (auto l = read_lookup(store_, id)) {
      lookups_.push_back(*l);
      signal_dates_[id] = l->time;
    }
  }

  auto mention_ids = store_.subjects(rdf("type"), grasp("Mention"));
  std::vector<Mention> ms;
  for (const auto& id : mention_ids) {
    if (auto m = read_mention(store_, id)) ms.push_back(*m);
  }
  std::stable_sort(ms.begin(), ms.end(),
                   [&](const Mention& a, const Mention& b) {
                     return signal_order_[a.derived_from] <
                            signal_order_[b.derived_from];
                   });
  for (const auto& m : ms) {
    mention_index_[m.id] = mentions_.size();
    mentions_by_denotes_[m.denotes].push_back(mentions_.size());
    mentions_.push_back(m);
  }

  std::vector<Attribution> as;
  for (const auto& id : store_.subjects(rdf("type"), grasp("Attribution"))) {
    if (auto a = read_attribution(store_, id)) as.push_back(*a);
  }
  std::sort(as.begin(), as.end(),
            [this](const Attribution& a, const Attribution& b) {
              auto ka = order_of(a);
              auto kb = order_of(b);
              if (ka != kb) return ka < kb;
              return a.id < b.id;
            });
  for (const auto& a : as) {
    const Mention* m = mention(a.for_mention);
    if (m == nullptr) continue;
    attributions_by_mention_[a.for_mention].push_back(attributions_.size());
    attributions_.push_back(a);
    auto& count = attribution_counts_[{m->attributed_to, m->denotes}];
    count = std::max(count, a.index);
  }
}

namespace {

template <typename T, typename Key>
std::vector<T> sorted_by(std::vector<T> v, Key key) {
  std::sort(v.begin(), v.end(),
            [&](const T& a, const T& b) { return key(a) < key(b); });
  return v;
}

}  // namespace

bool operator==(const Brain& a, const Brain& b) {
  if (!(a.store_ == b.store_) || !(a.claim_registry_ == b.claim_registry_) ||
      !(a.prefixes_ == b.prefixes_) || !(a.ontology_ == b.ontology_) ||
      a.chats_ != b.chats_ || a.signal_order_ != b.signal_order_) {
    return false;
  }
  auto by_id = [](const auto& r) { return r.id.compact(); };
  return sorted_by(a.turns_, by_id) == sorted_by(b.turns_, by_id) &&
         sorted_by(a.mentions_, by_id) == sorted_by(b.mentions_, by_id) &&
         sorted_by(a.attributions_, by_id) ==
             sorted_by(b.attributions_, by_id) &&
         sorted_by(a.percepts_, by_id) == sorted_by(b.percepts_, by_id) &&
         sorted_by(a.lookups_, by_id) == sorted_by(b.lookups_, by_id);
}

bool Brain::registries_consistent() const {
  auto present = [this](const std::vector<Triple>& ts) {
    return std::all_of(ts.begin(), ts.end(),
                       [this](const Triple& t) { return store_.contains(t); });
  };
  for (const auto& c : claim_registry_.all()) {
    if (!present(to_triples(c))) return false;
  }
  for (const auto& c : chats_) {
    if (!present(to_triples(c))) return false;
  }
  for (const auto& t : turns_) {
    if (!present(to_triples(t)) || !store_.contains(turn_text_triple(t))) {
      return false;
    }
  }
  for (const auto& m : mentions_) {
    if (!present(to_triples(m))) return false;
  }
  for (const auto& a : attributions_) {
    if (!present(to_triples(a))) return false;
  }
  for (const auto& p : percepts_) {
    if (!present(to_triples(p))) return false;
  }
  for (const auto& l : lookups_) {
    if (!present(to_triples(l))) return false;
  }
  return present(ontology_.to_triples());
}

}  // namespace tom
