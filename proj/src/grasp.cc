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

#include "tom/grasp.h"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <regex>

#include "tom/error.h"
#include "tom/store.h"

namespace tom {

namespace {

constexpr std::string_view kPolarityNames[] = {"CONFIRM", "DENY"};
constexpr std::string_view kCertaintyNames[] = {"CERTAIN", "PROBABLE",
                                                "POSSIBLE", "UNCERTAIN"};
constexpr std::string_view kEmotionNames[] = {"SURPRISE", "SAD",  "HAPPY",
                                              "ANGER",    "FEAR", "DISGUST"};

template <typename Enum, std::size_t N>
std::optional<Enum> lookup_name(const std::string_view (&names)[N],
                                std::string_view name) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::optional<int> to_int(const std::string& s) {
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return v;
}

bool has_type(const TripleStore& store, const Iri& id, const Iri& type) {
  return store.contains(Triple{id, rdf("type"), type});
}

std::optional<Iri> object_iri(const TripleStore& store, const Iri& s,
                              const Iri& p) {
  for (const auto& o : store.objects(s, p)) {
    if (o.is_iri()) return o.iri();
  }
  return std::nullopt;
}

std::optional<Date> object_date(const TripleStore& store, const Iri& s) {
  auto iri = object_iri(store, s, sem("hasTime"));
  if (!iri || iri->prefix() != ns::kTime) return std::nullopt;
  return Date(iri->local());
}

}  // namespace

Iri to_iri(Polarity p) { return grasp(name_of(p)); }
Iri to_iri(Certainty c) { return grasp(name_of(c)); }
Iri to_iri(Emotion e) { return grasp(name_of(e)); }
std::string_view name_of(Polarity p) {
  return kPolarityNames[static_cast<int>(p)];
}
std::string_view name_of(Certainty c) {
  return kCertaintyNames[static_cast<int>(c)];
}
std::string_view name_of(Emotion e) {
  return kEmotionNames[static_cast<int>(e)];
}
std::optional<Polarity> polarity_from_name(std::string_view name) {
  return lookup_name<Polarity>(kPolarityNames, name);
}
std::optional<Certainty> certainty_from_name(std::string_view name) {
  return lookup_name<Certainty>(kCertaintyNames, name);
}
std::optional<Emotion> emotion_from_name(std::string_view name) {
  return lookup_name<Emotion>(kEmotionNames, name);
}

std::vector<Iri> Perspective::values() const {
  std::vector<Iri> out;
  if (polarity) out.push_back(to_iri(*polarity));
  if (certainty) out.push_back(to_iri(*certainty));
  for (auto e : emotions) out.push_back(to_iri(e));
  return out;
}

std::string Perspective::render() const {
  std::string out;
  for (const auto& v : values()) {
    if (!out.empty()) out += ",";
    out += v.local();
  }
  return out;
}

Perspective Perspective::parse(std::string_view list) {
  Perspective p;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    auto comma = list.find(',', pos);
    auto tok = list.substr(pos, comma == std::string_view::npos
                                    ? std::string_view::npos
                                    : comma - pos);
    pos = comma == std::string_view::npos ? list.size() + 1 : comma + 1;
    if (tok.empty()) continue;
    if (auto v = polarity_from_name(tok)) {
      if (p.polarity) throw Error(ErrorCode::kInvalidArgument, "two polarities");
      p.polarity = v;
    } else if (auto c = certainty_from_name(tok)) {
      if (p.certainty) {
        throw Error(ErrorCode::kInvalidArgument, "two certainty values");
      }
      p.certainty = c;
    } else if (auto e = emotion_from_name(tok)) {
      p.emotions.insert(*e);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown perspective value '" + std::string(tok) + "'");
    }
  }
  return p;
}

Date::Date(std::string_view yyyymmdd) : value_(yyyymmdd) {
  if (value_.size() != 8 ||
      !std::all_of(value_.begin(), value_.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw Error(ErrorCode::kInvalidArgument, "bad date '" + value_ + "'");
  }
}

std::size_t char_length(std::string_view text) {
  return static_cast<std::size_t>(
      std::count_if(text.begin(), text.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
      }));
}

// -- identifiers ---------------------------------------------------------------

Iri chat_id(int chat) { return talk("chat" + std::to_string(chat)); }
Iri turn_id(int chat, int turn) {
  return talk("chat" + std::to_string(chat) + "_turn" + std::to_string(turn));
}
Iri turn_mention_id(int chat, int turn, Span span) {
  return talk("chat" + std::to_string(chat) + "_turn" + std::to_string(turn) +
              "_char" + std::to_string(span.start) + "-" +
              std::to_string(span.end));
}
Iri attribution_id(const Iri& mention, int k) {
  return Iri(mention.prefix(), mention.local() + "_ATTR" + std::to_string(k));
}
Iri claim_id(int n) { return world("claim" + std::to_string(n)); }
Iri percept_id(PerceptKind kind, int n) {
  return sensor((kind == PerceptKind::kFace ? "FaceDetection"
                                            : "ObjectDetection") +
                std::to_string(n));
}
Iri percept_mention_id(PerceptKind kind, int n) {
  return sensor((kind == PerceptKind::kFace ? "FaceRecognition"
                                            : "ObjectRecognition") +
                std::to_string(n));
}
Iri lookup_id(int n) { return world("lookup" + std::to_string(n)); }
Iri lookup_mention_id(int n) {
  return world("lookup" + std::to_string(n) + "_result");
}

namespace {

const std::regex& chat_re() {
  static const std::regex re(R"(chat([1-9][0-9]*))");
  return re;
}
const std::regex& turn_re() {
  static const std::regex re(R"(chat([1-9][0-9]*)_turn([1-9][0-9]*))");
  return re;
}
const std::regex& mention_re() {
  static const std::regex re(
      R"(chat([1-9][0-9]*)_turn([1-9][0-9]*)_char(0|[1-9][0-9]*)-(0|[1-9][0-9]*))");
  return re;
}
const std::regex& attr_re() {
  static const std::regex re(R"((.+)_ATTR([1-9][0-9]*))");
  return re;
}

}  // namespace

std::optional<int> parse_chat_id(const Iri& id) {
  std::smatch m;
  if (id.prefix() != ns::kTalk || !std::regex_match(id.local(), m, chat_re())) {
    return std::nullopt;
  }
  return to_int(m[1]);
}

std::optional<TurnRef> parse_turn_id(const Iri& id) {
  std::smatch m;
  if (id.prefix() != ns::kTalk || !std::regex_match(id.local(), m, turn_re())) {
    return std::nullopt;
  }
  return TurnRef{*to_int(m[1]), *to_int(m[2])};
}

std::optional<std::pair<TurnRef, Span>> parse_turn_mention_id(const Iri& id) {
  std::smatch m;
  if (id.prefix() != ns::kTalk ||
      !std::regex_match(id.local(), m, mention_re())) {
    return std::nullopt;
  }
  Span span{static_cast<std::size_t>(*to_int(m[3])),
            static_cast<std::size_t>(*to_int(m[4]))};
  if (span.start > span.end) return std::nullopt;
  return std::make_pair(TurnRef{*to_int(m[1]), *to_int(m[2])}, span);
}

std::optional<int> parse_attribution_index(const Iri& id) {
  std::smatch m;
  if (!std::regex_match(id.local(), m, attr_re())) return std::nullopt;
  return to_int(m[2]);
}

std::optional<int> parse_claim_number(const Iri& id) {
  static const std::regex re(R"(claim([1-9][0-9]*))");
  std::smatch m;
  if (id.prefix() != ns::kWorld || !std::regex_match(id.local(), m, re)) {
    return std::nullopt;
  }
  return to_int(m[1]);
}

std::optional<std::pair<PerceptKind, int>> parse_percept_id(const Iri& id) {
  static const std::regex re(R"((Face|Object)Detection([1-9][0-9]*))");
  std::smatch m;
  if (id.prefix() != ns::kSensor || !std::regex_match(id.local(), m, re)) {
    return std::nullopt;
  }
  return std::make_pair(m[1] == "Face" ? PerceptKind::kFace
                                       : PerceptKind::kObject,
                        *to_int(m[2]));
}

std::optional<int> parse_lookup_id(const Iri& id) {
  static const std::regex re(R"(lookup([1-9][0-9]*))");
  std::smatch m;
  if (id.prefix() != ns::kWorld || !std::regex_match(id.local(), m, re)) {
    return std::nullopt;
  }
  return to_int(m[1]);
}

bool is_generated_id(const Iri& id) {
  static const std::regex sensor_mention(
      R"((Face|Object)(Recognition|Detection)[1-9][0-9]*(_ATTR[1-9][0-9]*)?)");
  static const std::regex world_ids(
      R"(claim[1-9][0-9]*|lookup[1-9][0-9]*(_result(_ATTR[1-9][0-9]*)?)?)");
  const std::string& l = id.local();
  if (id.prefix() == ns::kTalk) {
    std::smatch m;
    std::string base = l;
    if (std::regex_match(l, m, attr_re())) base = m[1];
    if (std::regex_match(base, mention_re())) return true;
    if (base != l) return false;
    return std::regex_match(l, chat_re()) || std::regex_match(l, turn_re());
  }
  if (id.prefix() == ns::kSensor) return std::regex_match(l, sensor_mention);
  if (id.prefix() == ns::kWorld) return std::regex_match(l, world_ids);
  return false;
}

// -- projection ----------------------------------------------------------------

std::vector<Triple> to_triples(const Instance& r) {
  std::vector<Triple> out;
  for (const auto& t : r.types) out.push_back({r.iri, rdf("type"), t});
  for (const auto& l : r.labels) {
    out.push_back({r.iri, rdfs("label"), Term::literal(l)});
  }
  return out;
}

std::vector<Triple> to_triples(const EventRecord& r) {
  std::vector<Triple> out{{r.iri, rdf("type"), sem("Event")}};
  if (r.actor) out.push_back({r.iri, sem("hasActor"), *r.actor});
  if (r.place) out.push_back({r.iri, sem("hasPlace"), *r.place});
  if (r.time) out.push_back({r.iri, sem("hasTime"), r.time->iri()});
  return out;
}

std::vector<Triple> to_triples(const Claim& r) {
  return {{r.id, rdf("type"), grasp("Statement")},
          {r.id, grasp("subject"), r.subject},
          {r.id, grasp("predicate"), r.predicate},
          {r.id, grasp("object"), r.object}};
}

std::vector<Triple> to_triples(const ChatRecord& r) {
  return {{r.id, rdf("type"), grasp("Chat")},
          {r.id, sem("hasActor"), r.addressee},
          {r.id, sem("hasTime"), r.date.iri()}};
}

std::vector<Triple> to_triples(const TurnRecord& r) {
  return {{r.id, rdf("type"), grasp("Turn")},
          {r.id, sem("hasActor"), r.speaker},
          {r.id, sem("hasTime"), r.date.iri()}};
}

Triple turn_text_triple(const TurnRecord& r) {
  return {r.id, rdf("value"), Term::literal(r.text)};
}

std::vector<Triple> to_triples(const Mention& r) {
  return {{r.id, rdf("type"), grasp("Mention")},
          {r.id, grasp("denotes"), r.denotes},
          {r.id, prov("wasDerivedFrom"), r.derived_from},
          {r.id, prov("wasAttributedTo"), r.attributed_to}};
}

std::vector<Triple> to_triples(const Attribution& r) {
  std::vector<Triple> out{{r.id, rdf("type"), grasp("Attribution")}};
  for (const auto& v : r.perspective.values()) {
    out.push_back({r.id, rdf("value"), v});
  }
  out.push_back({r.id, grasp("isAttributionFor"), r.for_mention});
  return out;
}

std::vector<Triple> to_triples(const PerceptRecord& r) {
  return {{r.id, rdf("type"),
           sensor(r.kind == PerceptKind::kFace ? "FacePercept"
                                               : "ObjectPercept")},
          {r.id, sensor("label"), r.raw_label},
          {r.id, sensor("confidence"),
           Term::literal(format_double(r.confidence))},
          {r.id, sem("hasTime"), r.time.iri()}};
}

std::vector<Triple> to_triples(const LookupRecord& r) {
  return {{r.id, rdf("type"), prov("Activity")},
          {r.id, prov("wasAssociatedWith"), r.service},
          {r.id, sem("hasTime"), r.time.iri()}};
}

// -- read-back -----------------------------------------------------------------

std::optional<Claim> read_claim(const TripleStore& store, const Iri& id) {
  if (!has_type(store, id, grasp("Statement"))) return std::nullopt;
  auto s = object_iri(store, id, grasp("subject"));
  auto p = object_iri(store, id, grasp("predicate"));
  auto o = store.first_object(id, grasp("object"));
  auto n = parse_claim_number(id);
  if (!s || !p || !o || !n) return std::nullopt;
  return Claim{id, *s, *p, *o, *n};
}

std::optional<ChatRecord> read_chat(const TripleStore& store, const Iri& id) {
  if (!has_type(store, id, grasp("Chat"))) return std::nullopt;
  auto n = parse_chat_id(id);
  auto who = object_iri(store, id, sem("hasActor"));
  auto date = object_date(store, id);
  if (!n || !who || !date) return std::nullopt;
  return ChatRecord{id, *n, *who, *date};
}

std::optional<TurnRecord> read_turn(const TripleStore& store, const Iri& id) {
  if (!has_type(store, id, grasp("Turn"))) return std::nullopt;
  auto ref = parse_turn_id(id);
  auto who = object_iri(store, id, sem("hasActor"));
  auto date = object_date(store, id);
  if (!ref || !who || !date) return std::nullopt;
  std::string text;
  for (const auto& v : store.objects(id, rdf("value"))) {
    if (v.is_literal()) text = v.as_literal().lexical;
  }
  return TurnRecord{id, ref->chat, ref->turn, *who, *date, text};
}

std::optional<Mention> read_mention(const TripleStore& store, const Iri& id) {
  if (!has_type(store, id, grasp("Mention"))) return std::nullopt;
  auto denotes = object_iri(store, id, grasp("denotes"));
  auto from = object_iri(store, id, prov("wasDerivedFrom"));
  auto by = object_iri(store, id, prov("wasAttributedTo"));
  if (!denotes || !from || !by) return std::nullopt;
  Mention m{id, *denotes, *from, *by, std::nullopt};
  if (auto parsed = parse_turn_mention_id(id)) m.span = parsed->second;
  return m;
}

std::optional<Attribution> read_attribution(const TripleStore& store,
                                            const Iri& id) {
  if (!has_type(store, id, grasp("Attribution"))) return std::nullopt;
  auto mention = object_iri(store, id, grasp("isAttributionFor"));
  auto k = parse_attribution_index(id);
  if (!mention || !k) return std::nullopt;
  Attribution a{id, *mention, *k, {}};
  for (const auto& v : store.objects(id, rdf("value"))) {
    if (!v.is_iri() || v.iri().prefix() != ns::kGrasp) continue;
    const auto& name = v.iri().local();
    if (auto p = polarity_from_name(name)) a.perspective.polarity = p;
    else if (auto c = certainty_from_name(name)) a.perspective.certainty = c;
    else if (auto e = emotion_from_name(name)) a.perspective.emotions.insert(*e);
  }
  return a;
}

std::optional<PerceptRecord> read_percept(const TripleStore& store,
                                          const Iri& id) {
  auto parsed = parse_percept_id(id);
  if (!parsed) return std::nullopt;
  auto label = object_iri(store, id, sensor("label"));
  auto conf = store.first_object(id, sensor("confidence"));
  auto date = object_date(store, id);
  if (!label || !conf || !conf->is_literal() || !date) return std::nullopt;
  double c = std::stod(conf->as_literal().lexical);
  return PerceptRecord{id, parsed->second, parsed->first, *label, c, *date};
}

std::optional<LookupRecord> read_lookup(const TripleStore& store,
                                        const Iri& id) {
  auto n = parse_lookup_id(id);
  if (!n || !has_type(store, id, prov("Activity"))) return std::nullopt;
  auto service = object_iri(store, id, prov("wasAssociatedWith"));
  auto date = object_date(store, id);
  if (!service || !date) return std::nullopt;
  return LookupRecord{id, *n, *service, *date};
}

std::optional<EventRecord> read_event(const TripleStore& store,
                                      const Iri& id) {
  if (!has_type(store, id, sem("Event"))) return std::nullopt;
  EventRecord e{id, object_iri(store, id, sem("hasActor")),
                object_iri(store, id, sem("hasPlace")), object_date(store, id)};
  return e;
}

Instance read_instance(const TripleStore& store, const Iri& id) {
  Instance inst{id, {}, {}};
  for (const auto& t : store.objects(id, rdf("type"))) {
    if (t.is_iri()) inst.types.push_back(t.iri());
  }
  for (const auto& l : store.objects(id, rdfs("label"))) {
    if (l.is_literal()) inst.labels.push_back(l.as_literal().lexical);
  }
  return inst;
}

// -- registry ------------------------------------------------------------------

ClaimRegistry::Minted ClaimRegistry::mint(const Iri& subject,
                                          const Iri& predicate,
                                          const Term& object) {
  Triple t{subject, predicate, object};
  if (const Claim* c = find(t)) return {*c, false};
  Claim c{claim_id(next_), subject, predicate, object, next_};
  ++next_;
  adopt(c);
  return {c, true};
}

void ClaimRegistry::adopt(const Claim& claim) {
  auto key = render_triple(claim.triple());
  if (by_triple_.count(key) > 0) return;
  by_triple_.emplace(key, claims_.size());
  by_id_.emplace(claim.id.compact(), claims_.size());
  claims_.push_back(claim);
  std::sort(claims_.begin(), claims_.end(),
            [](const Claim& a, const Claim& b) { return a.number < b.number; });
  by_triple_.clear();
  by_id_.clear();
  for (std::size_t i = 0; i < claims_.size(); ++i) {
    by_triple_.emplace(render_triple(claims_[i].triple()), i);
    by_id_.emplace(claims_[i].id.compact(), i);
  }
  next_ = std::max(next_, claim.number + 1);
}

const Claim* ClaimRegistry::find(const Triple& t) const {
  auto it = by_triple_.find(render_triple(t));
  return it == by_triple_.end() ? nullptr : &claims_[it->second];
}

const Claim* ClaimRegistry::find(const Iri& id) const {
  auto it = by_id_.find(id.compact());
  return it == by_id_.end() ? nullptr : &claims_[it->second];
}

}  // namespace tom
