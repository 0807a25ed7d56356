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

#include "tom/session.h"

#include <charconv>
#include <deque>
#include <set>
#include <type_traits>

#include "tom/error.h"

namespace tom {

using nlohmann::json;

std::string TranscriptEntry::render() const {
  switch (role) {
    case Role::kRobot:
      return "L: " + text;
    case Role::kHuman:
      return speaker + ": " + text;
    case Role::kNote:
      return "[" + text + "]";
  }
  return text;
}

Service::Service(std::unique_ptr<Brain> brain, ServiceOptions options)
    : brain_(std::move(brain)), options_(std::move(options)) {
  Parser parser(options_.lexicon ? *options_.lexicon : Lexicon::defaults());
  Generator generator(
      options_.templates ? *options_.templates : TemplateTable::defaults(),
      options_.lexicon ? *options_.lexicon : Lexicon::defaults());
  controller_ = std::make_unique<Controller>(*brain_, std::move(parser),
                                             std::move(generator),
                                             options_.controller);
}

Session& Service::session(int id) {
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no session " + std::to_string(id));
  }
  return it->second;
}

const Session& Service::session(int id) const {
  return const_cast<Service*>(this)->session(id);
}

Session* Service::active() {
  for (auto it = sessions_.rbegin(); it != sessions_.rend(); ++it) {
    if (it->second.open) return &it->second;
  }
  return nullptr;
}

void Service::record_lines(Session* s, const std::vector<std::string>& lines) {
  if (s == nullptr) return;
  for (const auto& l : lines) {
    s->transcript.push_back({TranscriptEntry::Role::kRobot, "", l, date_});
  }
}

std::optional<Iri> Service::resolve_speaker(
    const std::optional<std::string>& name) const {
  if (!name || name->empty() || *name == "unknown") return std::nullopt;
  return brain_->find_person_by_name(*name);
}

void Service::set_date(const Date& d) {
  std::lock_guard lock(mu_);
  date_ = d;
}

Date Service::date() const {
  std::lock_guard lock(mu_);
  return date_;
}

std::pair<int, std::vector<std::string>> Service::open_session(
    const std::optional<std::string>& speaker, double confidence) {
  int id;
  {
    std::lock_guard lock(mu_);
    id = next_session_++;
    Session s;
    s.id = id;
    s.speaker = resolve_speaker(speaker);
    sessions_.emplace(id, std::move(s));
  }
  std::vector<std::string> lines;
  if (speaker && !speaker->empty()) {
    PerceptEvent face;
    face.kind = PerceptEvent::Kind::kFace;
    face.identity = *speaker;
    face.confidence = confidence;
    lines = post_percept(face);
  }
  return {id, lines};
}

void Service::close_session(int id) {
  std::lock_guard lock(mu_);
  session(id).open = false;
}

UtteranceReply Service::post_utterance(
    int id, const std::optional<std::string>& speaker_name,
    const std::string& text, double confidence,
    const std::optional<Perspective>& perspective) {
  std::lock_guard lock(mu_);
  Session& s = session(id);
  if (!s.open) {
    throw Error(ErrorCode::kSessionClosed, "session " + std::to_string(id));
  }
  Utterance u;
  u.text = text;
  u.speaker = resolve_speaker(speaker_name);
  u.confidence = confidence;
  u.date = date_;
  u.perspective = perspective;
  std::size_t mentions_before = brain_->mentions().size();
  std::size_t attributions_before = brain_->attributions().size();

  std::string shown = speaker_name.value_or("unknown");
  if (u.speaker) shown = *brain_->label_of(*u.speaker);
  s.transcript.push_back({TranscriptEntry::Role::kHuman, shown, text, date_});
  StepResult r = controller_->step(u);
  UtteranceReply reply;
  reply.lines = r.lines();
  record_lines(&s, reply.lines);
  if (!s.speaker) s.speaker = controller_->beliefs().addressee;

  json interp;
  const auto& parsed = controller_->beliefs().last_parse;
  interp["parse"] = parsed ? interpretation_json(*parsed) : json(nullptr);
  interp["intention"] = std::string(intention_name(r.intention.kind));
  interp["desire"] = std::string(desire_name(controller_->active_desire()));
  json claims = json::array();
  json queries = json::array();
  for (const auto& a : r.actions) {
    if (a.kind == DialogueAction::Kind::kStore && a.claim) {
      claims.push_back(a.claim->compact());
    } else if (a.kind == DialogueAction::Kind::kQuery) {
      queries.push_back(a.detail);
    }
  }
  json mentions = json::array();
  for (std::size_t i = mentions_before; i < brain_->mentions().size(); ++i) {
    mentions.push_back(brain_->mentions()[i].id.compact());
  }
  json attributions = json::array();
  for (std::size_t i = attributions_before; i < brain_->attributions().size();
       ++i) {
    attributions.push_back(brain_->attributions()[i].id.compact());
  }
  interp["claims"] = claims;
  interp["queries"] = queries;
  interp["mentions"] = mentions;
  interp["attributions"] = attributions;
  reply.interpretation = std::move(interp);
  return reply;
}

std::vector<std::string> Service::post_percept(const PerceptEvent& raw) {
  std::lock_guard lock(mu_);
  raw.validate();
  PerceptEvent e = raw;
  e.date = date_;
  Session* s = active();
  if (s != nullptr && options_.verbose) {
    std::string note;
    switch (e.kind) {
      case PerceptEvent::Kind::kFace:
        note = "face " + e.identity;
        break;
      case PerceptEvent::Kind::kObject:
        note = "object " + e.label + (e.track ? " " + *e.track : "");
        break;
      case PerceptEvent::Kind::kLeave:
        note = "leave " + e.identity;
        break;
    }
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, e.confidence);
    if (e.kind != PerceptEvent::Kind::kLeave) {
      note += " " + std::string(buf, res.ptr);
    }
    s->transcript.push_back({TranscriptEntry::Role::kNote, "", note, date_});
  }
  StepResult r = controller_->step(e);
  auto lines = r.lines();
  record_lines(s, lines);
  if (s != nullptr && e.kind == PerceptEvent::Kind::kFace &&
      controller_->beliefs().addressee) {
    s->speaker = controller_->beliefs().addressee;
  }
  return lines;
}

std::vector<TranscriptEntry> Service::transcript(int id) const {
  std::lock_guard lock(mu_);
  return session(id).transcript;
}

std::string Service::dump() const {
  std::lock_guard lock(mu_);
  return brain_->serialize();
}

json Service::view(const std::string& selector, const std::string& arg) const {
  std::lock_guard lock(mu_);
  if (selector == "instances") return instances_view(*brain_);
  if (selector == "claims") return claims_view(*brain_, arg);
  if (selector == "perspectives") return perspectives_view(*brain_, arg);
  if (selector == "conflicts") return conflicts_view(*brain_);
  if (selector == "dump") return brain_->serialize();
  throw Error(ErrorCode::kUnknownSelector, selector);
}

// -- views -----------------------------------------------------------------------

namespace {

json perspective_json(const Perspective& p) {
  json emotions = json::array();
  for (auto e : p.emotions) emotions.push_back(std::string(name_of(e)));
  return {{"polarity", p.polarity ? json(std::string(name_of(*p.polarity)))
                                  : json(nullptr)},
          {"certainty", p.certainty ? json(std::string(name_of(*p.certainty)))
                                    : json(nullptr)},
          {"emotions", emotions}};
}

json claim_json(const Claim& c) {
  return {{"id", c.id.compact()},
          {"subject", c.subject.compact()},
          {"predicate", c.predicate.compact()},
          {"object", c.object.render()}};
}

const char* kind_name(ConflictReport::Kind k) {
  return k == ConflictReport::Kind::kValue ? "value" : "perspective";
}

}  // namespace

json instances_view(const Brain& brain) {
  std::set<std::string> seen;
  std::vector<Iri> iris;
  auto add = [&](const Iri& i) {
    if (seen.insert(i.compact()).second) iris.push_back(i);
  };
  add(brain.robot());
  for (const auto& p : brain.persons()) add(p);
  for (const auto& c : brain.claims().all()) {
    add(c.subject);
    if (c.object.is_iri() && c.predicate != rdf("type")) add(c.object.iri());
  }
  json out = json::array();
  for (const auto& iri : iris) {
    Instance inst = brain.instance(iri);
    if (inst.labels.empty() && inst.types.empty()) continue;
    json types = json::array();
    for (const auto& t : inst.types) types.push_back(t.compact());
    out.push_back({{"iri", iri.compact()},
                   {"labels", inst.labels},
                   {"types", types},
                   {"person", brain.is_person(iri)}});
  }
  return out;
}

json claims_view(const Brain& brain, const std::string& about) {
  json out = json::array();
  if (about.empty()) {
    for (const auto& c : brain.claims().all()) out.push_back(claim_json(c));
    return out;
  }
  Iri target = about.find(':') == std::string::npos
                   ? brain.find_person_by_name(about).value_or(world(about))
                   : Iri::parse(about);
  for (const auto& v : brain.claims_about(target)) {
    json j = claim_json(v.claim);
    j["mentions"] = v.mentions.size();
    j["attributions"] = v.attributions.size();
    out.push_back(std::move(j));
  }
  return out;
}

json perspectives_view(const Brain& brain, const std::string& claim) {
  Iri id = claim.find(':') == std::string::npos ? Iri::parse("leolaniWorld:" + claim)
                                                : Iri::parse(claim);
  json out = json::array();
  for (const auto& e : brain.perspectives_on(id)) {
    json j = perspective_json(e.attribution.perspective);
    j["source"] = e.source.compact();
    j["attribution"] = e.attribution.id.compact();
    j["date"] = e.date.str();
    out.push_back(std::move(j));
  }
  return out;
}

json conflicts_view(const Brain& brain) {
  json out = json::array();
  for (const auto& r : brain.all_conflicts()) {
    json entries = json::array();
    for (const auto& e : r.entries) {
      entries.push_back({{"value", e.value.render()},
                         {"source", e.source.compact()},
                         {"polarity", std::string(name_of(e.polarity))},
                         {"date", e.date.str()},
                         {"claim", e.claim.compact()}});
    }
    out.push_back({{"kind", kind_name(r.kind)},
                   {"subject", r.subject.compact()},
                   {"predicate", r.predicate.compact()},
                   {"entries", entries}});
  }
  return out;
}

json interpretation_json(const ParsedInput& parsed) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StatementParse>) {
          return {{"type", "statement"},
                  {"triple",
                   {p.subject.compact(), p.predicate.compact(), p.object.render()}},
                  {"perspective", perspective_json(p.perspective)},
                  {"span", {p.span.start, p.span.end}}};
        } else if constexpr (std::is_same_v<T, QuestionParse>) {
          static constexpr const char* kinds[] = {"where",  "who",  "what",
                                                  "yes-no", "seen", "believe"};
          json patterns = json::array();
          for (const auto& tp : p.patterns) patterns.push_back(tp.render());
          return {{"type", "question"},
                  {"kind", kinds[static_cast<int>(p.kind)]},
                  {"patterns", patterns},
                  {"probe", p.probe}};
        } else if constexpr (std::is_same_v<T, SocialParse>) {
          static constexpr const char* kinds[] = {"greeting", "farewell", "affirm",
                                                  "deny", "name"};
          json j = {{"type", "social"}, {"kind", kinds[static_cast<int>(p.kind)]}};
          if (!p.name.empty()) j["name"] = p.name;
          return j;
        } else {
          return {{"type", "correction"},
                  {"wrong", p.wrong_class.compact()},
                  {"right", p.right_class.compact()},
                  {"wrong_span", {p.wrong_span.start, p.wrong_span.end}},
                  {"full_span", {p.full_span.start, p.full_span.end}}};
        }
      },
      parsed);
}

// -- scenario DSL ------------------------------------------------------------------

namespace {

[[noreturn]] void script_error(std::size_t line, const std::string& msg) {
  throw ParseError(ErrorCode::kScriptParseError, line, msg);
}

struct Cursor {
  std::string_view s;
  std::size_t line;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  std::string word() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    return std::string(s.substr(start, i - start));
  }
  std::string quoted() {
    skip_ws();
    if (i >= s.size() || s[i] != '"') script_error(line, "expected a quoted string");
    ++i;
    std::string out;
    while (i < s.size() && s[i] != '"') {
      if (s[i] == '\\' && i + 1 < s.size()) ++i;
      out += s[i++];
    }
    if (i >= s.size()) script_error(line, "unterminated string");
    ++i;
    return out;
  }
};

double parse_conf(const std::string& v, std::size_t line) {
  double d = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), d);
  if (ec != std::errc() || ptr != v.data() + v.size() || d < 0 || d > 1) {
    script_error(line, "bad confidence '" + v + "'");
  }
  return d;
}

std::map<std::string, std::string> key_values(Cursor& c) {
  std::map<std::string, std::string> kv;
  while (!c.done()) {
    std::string w = c.word();
    auto eq = w.find('=');
    if (eq == std::string::npos || eq == 0) {
      script_error(c.line, "expected key=value, got '" + w + "'");
    }
    kv[w.substr(0, eq)] = w.substr(eq + 1);
  }
  return kv;
}

std::string take(std::map<std::string, std::string>& kv, const std::string& key,
                 std::size_t line) {
  auto it = kv.find(key);
  if (it == kv.end()) script_error(line, "missing " + key + "=");
  std::string v = it->second;
  kv.erase(it);
  return v;
}

void no_extra(const std::map<std::string, std::string>& kv, std::size_t line) {
  if (!kv.empty()) script_error(line, "unexpected " + kv.begin()->first + "=");
}

}  // namespace

std::vector<ScriptEvent> parse_script(std::string_view text) {
  std::vector<ScriptEvent> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    Cursor c{line, line_no};
    if (c.done() || line[c.i] == '#') continue;
    ScriptEvent ev;
    ev.line = line_no;
    std::string kw = c.word();
    if (kw == "DATE") {
      ev.kind = ScriptEvent::Kind::kDate;
      try {
        ev.date = Date(c.word());
      } catch (const Error& e) {
        script_error(line_no, e.what());
      }
      if (!c.done()) script_error(line_no, "trailing text after DATE");
    } else if (kw == "PERCEPT") {
      ev.kind = ScriptEvent::Kind::kPercept;
      std::string kind = c.word();
      auto kv = key_values(c);
      if (kind == "FACE") {
        ev.percept.kind = PerceptEvent::Kind::kFace;
        ev.percept.identity = take(kv, "id", line_no);
        ev.percept.confidence = parse_conf(take(kv, "conf", line_no), line_no);
      } else if (kind == "OBJECT") {
        ev.percept.kind = PerceptEvent::Kind::kObject;
        ev.percept.label = take(kv, "label", line_no);
        ev.percept.confidence = parse_conf(take(kv, "conf", line_no), line_no);
        if (kv.count("track") != 0) ev.percept.track = take(kv, "track", line_no);
      } else if (kind == "LEAVE") {
        ev.percept.kind = PerceptEvent::Kind::kLeave;
        ev.percept.identity = take(kv, "id", line_no);
      } else {
        script_error(line_no, "unknown percept kind '" + kind + "'");
      }
      no_extra(kv, line_no);
    } else if (kw == "HUMAN") {
      ev.kind = ScriptEvent::Kind::kHuman;
      ev.speaker = c.word();
      if (ev.speaker.empty()) script_error(line_no, "HUMAN needs a speaker");
      std::string w = c.word();
      if (w.rfind("conf=", 0) != 0) script_error(line_no, "expected conf=");
      ev.confidence = parse_conf(w.substr(5), line_no);
      ev.text = c.quoted();
      auto kv = key_values(c);
      if (kv.count("perspective") != 0) {
        try {
          ev.perspective = Perspective::parse(take(kv, "perspective", line_no));
        } catch (const Error& e) {
          script_error(line_no, e.what());
        }
      }
      no_extra(kv, line_no);
    } else if (kw == "EXPECT") {
      ev.kind = ScriptEvent::Kind::kExpect;
      ev.text = c.quoted();
      if (!c.done()) script_error(line_no, "trailing text after EXPECT");
    } else {
      script_error(line_no, "unknown directive '" + kw + "'");
    }
    out.push_back(std::move(ev));
  }
  return out;
}

std::string Mismatch::describe() const {
  std::string where = line == 0 ? "end of script" : "line " + std::to_string(line);
  return where + ": expected \"" + expected + "\", got \"" + actual + "\"";
}

ScriptResult run_script(const std::vector<ScriptEvent>& events,
                        Service& service) {
  ScriptResult result;
  int session = service.open_session(std::nullopt).first;
  std::deque<std::string> output;
  auto flush = [&](std::size_t line) {
    for (const auto& l : output) {
      result.mismatches.push_back({line, "<no robot line>", l});
    }
    output.clear();
  };
  for (const auto& ev : events) {
    if (ev.kind == ScriptEvent::Kind::kExpect) {
      if (output.empty()) {
        result.mismatches.push_back({ev.line, ev.text, "<no robot line>"});
      } else {
        if (output.front() != ev.text) {
          result.mismatches.push_back({ev.line, ev.text, output.front()});
        }
        output.pop_front();
      }
      continue;
    }
    flush(ev.line);
    std::vector<std::string> lines;
    switch (ev.kind) {
      case ScriptEvent::Kind::kDate:
        service.set_date(ev.date);
        break;
      case ScriptEvent::Kind::kPercept:
        lines = service.post_percept(ev.percept);
        break;
      case ScriptEvent::Kind::kHuman:
        lines = service
                    .post_utterance(session, ev.speaker, ev.text, ev.confidence,
                                    ev.perspective)
                    .lines;
        break;
      case ScriptEvent::Kind::kExpect:
        break;
    }
    output.insert(output.end(), lines.begin(), lines.end());
  }
  flush(0);
  result.transcript = service.transcript(session);
  return result;
}

ScriptResult check_script(std::string_view text, Service& service) {
  ScriptResult r = run_script(parse_script(text), service);
  if (!r.passed()) {
    throw Error(ErrorCode::kExpectMismatch, r.mismatches.front().describe());
  }
  return r;
}

}  // namespace tom
