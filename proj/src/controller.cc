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

#include "tom/controller.h"

#include <algorithm>

#include "tom/error.h"

namespace tom {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

Perspective with_polarity(Perspective p, Polarity pol) {
  p.polarity = pol;
  if (!p.certainty) p.certainty = Certainty::kCertain;
  return p;
}

Iri class_for(const Lexicon& lex, const std::string& label) {
  if (auto c = lex.find(label, "class")) return n2mu(*c);
  return n2mu(capitalize_first(label));
}

}  // namespace

std::string_view intention_name(IntentionKind k) {
  switch (k) {
    case IntentionKind::kLookForPerson: return "LOOK_FOR_PERSON";
    case IntentionKind::kMeetNewPerson: return "MEET_NEW_PERSON";
    case IntentionKind::kGreetKnownPerson: return "GREET_KNOWN_PERSON";
    case IntentionKind::kDetectObjects: return "DETECT_OBJECTS";
    case IntentionKind::kAskQuestion: return "ASK_QUESTION";
    case IntentionKind::kStateFact: return "STATE_FACT";
    case IntentionKind::kListen: return "LISTEN";
    case IntentionKind::kReply: return "REPLY";
    case IntentionKind::kConfirmName: return "CONFIRM_NAME";
    case IntentionKind::kShareObservation: return "SHARE_OBSERVATION";
    case IntentionKind::kReportConflict: return "REPORT_CONFLICT";
  }
  return "?";
}

std::string_view desire_name(Desire d) {
  switch (d) {
    case Desire::kRespondToHuman: return "RESPOND_TO_HUMAN";
    case Desire::kResolveConflict: return "RESOLVE_CONFLICT";
    case Desire::kAcquireSocialKnowledge: return "ACQUIRE_SOCIAL_KNOWLEDGE";
    case Desire::kShareExperience: return "SHARE_EXPERIENCE";
    case Desire::kResolveUncertainty: return "RESOLVE_UNCERTAINTY";
  }
  return "?";
}

std::string_view action_kind_name(DialogueAction::Kind k) {
  switch (k) {
    case DialogueAction::Kind::kSay: return "say";
    case DialogueAction::Kind::kStore: return "store";
    case DialogueAction::Kind::kQuery: return "query";
    case DialogueAction::Kind::kRegisterFriend: return "register-friend";
    case DialogueAction::Kind::kEndChat: return "end-chat";
  }
  return "?";
}

std::vector<std::string> StepResult::lines() const {
  std::vector<std::string> out;
  for (const auto& a : actions) {
    if (a.kind == DialogueAction::Kind::kSay) {
      out.insert(out.end(), a.lines.begin(), a.lines.end());
    }
  }
  return out;
}

Controller::Controller(Brain& brain, Parser parser, Generator generator,
                       ControllerConfig config)
    : brain_(brain),
      parser_(std::move(parser)),
      generator_(std::move(generator)),
      config_(config),
      gateway_(config.gates) {}

// -- state helpers -------------------------------------------------------------

ParseContext Controller::parse_context(const std::optional<Iri>& speaker) const {
  ParseContext ctx;
  ctx.speaker = speaker;
  ctx.robot = brain_.robot();
  ctx.recent_persons = chat_state_.recent_persons;
  ctx.brain = &brain_;
  return ctx;
}

ResponseContext Controller::response_context() const {
  return {state_.addressee.value_or(brain_.robot()), brain_.robot(),
          chat_state_.cite_sources ? SourcePolicy::kAttach : SourcePolicy::kBare};
}

void Controller::note_person(const Term& t) {
  if (!t.is_iri() || !brain_.is_person(t.iri()) || t.iri() == brain_.robot()) {
    return;
  }
  auto& r = chat_state_.recent_persons;
  r.erase(std::remove(r.begin(), r.end(), t.iri()), r.end());
  r.push_back(t.iri());
}

void Controller::refresh_digest() {
  BrainDigest d;
  if (state_.addressee) d.gaps = brain_.detect_gaps(*state_.addressee);
  d.open_conflicts = brain_.all_conflicts().size();
  for (const auto& c : brain_.claims().all()) {
    for (const auto& e : brain_.perspectives_on(c.id)) {
      if (e.attribution.perspective.certainty == Certainty::kUncertain) {
        ++d.uncertain_claims;
        break;
      }
    }
  }
  state_.digest = std::move(d);
}

void Controller::open_chat_with(const Iri& person, const Date& date) {
  state_.chat = brain_.open_chat(person, date);
  state_.addressee = person;
  state_.presence = Presence::kKnown;
  chat_state_ = ChatState{};
  chat_state_.recent_persons = {person};
}

void Controller::close_chat(std::vector<DialogueAction>& actions) {
  if (state_.chat) {
    actions.push_back({DialogueAction::Kind::kEndChat, {}, std::nullopt,
                       state_.chat->id.compact()});
  }
  state_.chat.reset();
  state_.addressee.reset();
  state_.presence = Presence::kNone;
  state_.pending.reset();
  chat_state_ = ChatState{};
}

void Controller::persist_track(const std::string& id, const Date& date) {
  if (persisted_tracks_.count(id) != 0) return;
  const ObjectTrack& t = gateway_.track(id);
  std::string label = t.effective_label();
  double conf = 1.0;
  for (const auto& h : t.hypotheses) {
    if (h.label == label) conf = h.confidence;
  }
  brain_.observe_object(t.iri(), class_for(parser_.lexicon(), label), conf,
                        date);
  persisted_tracks_.insert(id);
}

std::optional<Iri> Controller::source_of(const Iri& claim) const {
  std::optional<Iri> first;
  for (const auto& e : brain_.perspectives_on(claim)) {
    if (e.source == brain_.robot()) continue;
    if (!first) first = e.source;
    if (e.attribution.perspective.polarity != Polarity::kDeny) return e.source;
  }
  return first;
}

Desire Controller::active_desire() const {
  switch (current_.kind) {
    case IntentionKind::kReportConflict:
      return Desire::kResolveConflict;
    case IntentionKind::kAskQuestion:
    case IntentionKind::kMeetNewPerson:
    case IntentionKind::kConfirmName:
    case IntentionKind::kLookForPerson:
      return Desire::kAcquireSocialKnowledge;
    case IntentionKind::kShareObservation:
    case IntentionKind::kDetectObjects:
      return Desire::kShareExperience;
    default:
      return Desire::kRespondToHuman;
  }
}

Intention Controller::select_intention() const {
  if (state_.presence == Presence::kUnknownFace) {
    if (state_.pending && state_.pending->kind == Pending::Kind::kConfirmName) {
      return {IntentionKind::kConfirmName, std::nullopt, state_.pending->name};
    }
    return {IntentionKind::kMeetNewPerson, std::nullopt, ""};
  }
  if (state_.last_parse &&
      std::holds_alternative<QuestionParse>(*state_.last_parse)) {
    return {IntentionKind::kReply, std::nullopt, ""};
  }
  if (state_.addressee) {
    if (!state_.digest.gaps.empty() && !chat_state_.asked_gap) {
      return {IntentionKind::kAskQuestion, state_.digest.gaps.front(), ""};
    }
    return {IntentionKind::kListen, std::nullopt, ""};
  }
  return {IntentionKind::kLookForPerson, std::nullopt, ""};
}

// -- step ----------------------------------------------------------------------

StepResult Controller::step(const Event& event) {
  StepResult r = std::visit(
      Overloaded{[&](const PerceptEvent& e) { return on_percept(e); },
                 [&](const Utterance& u) { return on_utterance(u); }},
      event);
  refresh_digest();
  // Bounded output per event.
  std::size_t budget = config_.max_lines;
  for (auto& a : r.actions) {
    if (a.kind != DialogueAction::Kind::kSay) continue;
    if (a.lines.size() > budget) a.lines.resize(budget);
    budget -= a.lines.size();
  }
  r.actions.erase(std::remove_if(r.actions.begin(), r.actions.end(),
                                 [](const DialogueAction& a) {
                                   return a.kind == DialogueAction::Kind::kSay &&
                                          a.lines.empty();
                                 }),
                  r.actions.end());
  return r;
}

std::optional<std::string> Controller::share_line(const Date& date) {
  auto track = gateway_.salient();
  if (!track || !state_.addressee) return std::nullopt;
  auto key = std::make_pair(*track, *state_.addressee);
  if (shared_.count(key) != 0) return std::nullopt;
  persist_track(*track, date);
  shared_.insert(key);
  const ObjectTrack& t = gateway_.track(*track);
  state_.salient_track = *track;
  current_ = {IntentionKind::kShareObservation, std::nullopt,
              t.effective_label()};
  return generator_.phrase_social(
      t.overridden() ? "share-human" : "share-sensor",
      {{"label", t.effective_label()}});
}

std::vector<std::string> Controller::greet_known(const Iri& person,
                                                 const Date& date) {
  int prior = brain_.chat_count(person);
  open_chat_with(person, date);
  int k = ((prior - 1) % 4 + 4) % 4;
  if (prior == 0) k = 0;
  std::vector<std::string> lines{generator_.phrase_social(
      "greet-known-" + std::to_string(k),
      {{"name", generator_.name_of(brain_, Term(person))}})};
  current_ = {IntentionKind::kGreetKnownPerson, std::nullopt, ""};
  auto gaps = brain_.detect_gaps(person);
  if (!gaps.empty()) {
    lines.push_back(generator_.phrase_gap_question(brain_, person, gaps.front(),
                                                   true, response_context()));
    state_.pending = Pending{Pending::Kind::kQuestion, "", gaps.front()};
    chat_state_.asked_gap = true;
    current_ = {IntentionKind::kAskQuestion, gaps.front(), ""};
  } else if (auto share = share_line(date)) {
    lines.push_back(*share);
  }
  return lines;
}

StepResult Controller::on_percept(const PerceptEvent& raw) {
  StepResult r;
  current_ = select_intention();
  auto accepted = gateway_.ingest(raw);
  if (!accepted) return {current_, {}};
  const PerceptEvent& e = *accepted;
  std::vector<std::string> lines;
  switch (e.kind) {
    case PerceptEvent::Kind::kObject: {
      current_ = {IntentionKind::kDetectObjects, std::nullopt, e.label};
      if (persisted_tracks_.count(*e.track) != 0) {
        Iri track = gateway_.track(*e.track).iri();
        brain_.record_percept(PerceptKind::kObject,
                              class_for(parser_.lexicon(), e.label),
                              e.confidence, track, {track}, std::nullopt,
                              e.date);
      }
      state_.salient_track = gateway_.salient();
      break;
    }
    case PerceptEvent::Kind::kFace: {
      Identity id = PerceptionGateway::face_to_identity(e, brain_);
      if (id.known()) {
        if (state_.addressee == id.person) break;
        if (state_.addressee || state_.presence != Presence::kNone) {
          close_chat(r.actions);
        }
        brain_.record_percept(PerceptKind::kFace, *id.person, e.confidence,
                              *id.person, {*id.person}, std::nullopt, e.date);
        lines = greet_known(*id.person, e.date);
      } else {
        if (state_.presence == Presence::kUnknownFace) break;
        if (state_.addressee) close_chat(r.actions);
        state_.presence = Presence::kUnknownFace;
        state_.face_confidence = e.confidence;
        name_utterance_.reset();
        current_ = {IntentionKind::kMeetNewPerson, std::nullopt, ""};
        lines = {generator_.phrase_social("greet-new-1"),
                 generator_.phrase_social(
                     "greet-new-2",
                     {{"robot", generator_.name_of(brain_, Term(brain_.robot()))}})};
      }
      break;
    }
    case PerceptEvent::Kind::kLeave: {
      bool matches_addressee =
          state_.addressee &&
          (e.identity == "unknown" ||
           brain_.find_person_by_name(e.identity) == state_.addressee);
      if (matches_addressee || state_.presence == Presence::kUnknownFace) {
        close_chat(r.actions);
        name_utterance_.reset();
      }
      current_ = {IntentionKind::kLookForPerson, std::nullopt, ""};
      break;
    }
  }
  if (!lines.empty()) {
    r.actions.insert(r.actions.begin(),
                     {DialogueAction::Kind::kSay, lines, std::nullopt, ""});
  }
  r.intention = current_;
  return r;
}

std::vector<std::string> Controller::complete_meeting(
    const std::string& name, const Utterance& u,
    std::vector<DialogueAction>& acts) {
  Iri person;
  if (auto existing = brain_.find_person_by_name(name)) {
    person = *existing;
  } else {
    person = brain_.register_person(name);
    acts.push_back({DialogueAction::Kind::kRegisterFriend, {}, std::nullopt,
                    name});
  }
  state_.pending.reset();
  open_chat_with(person, u.date);
  const Utterance& intro = name_utterance_ ? *name_utterance_ : u;
  TurnRecord turn = brain_.record_turn(*state_.chat, person, intro.text,
                                       intro.date);
  Perspective confirm = with_polarity({}, Polarity::kConfirm);
  auto a = brain_.assert_in_turn(turn, Span{0, char_length(intro.text)}, person,
                                 n2mu("hasName"), Term::literal(name), confirm);
  acts.push_back({DialogueAction::Kind::kStore, {}, a.claim.id, ""});
  if (name_utterance_) brain_.record_turn(*state_.chat, person, u.text, u.date);
  name_utterance_.reset();

  std::vector<std::string> lines{
      generator_.phrase_social("new-friend", {{"name", name}})};
  auto gaps = brain_.detect_gaps(person);
  current_ = {IntentionKind::kMeetNewPerson, std::nullopt, name};
  if (!gaps.empty()) {
    lines.push_back(generator_.phrase_gap_question(
        brain_, person, gaps.front(), false, response_context()));
    state_.pending = Pending{Pending::Kind::kQuestion, "", gaps.front()};
    chat_state_.asked_gap = true;
    current_ = {IntentionKind::kAskQuestion, gaps.front(), ""};
  }
  return lines;
}

StepResult Controller::on_utterance(const Utterance& u) {
  StepResult r;
  current_ = {IntentionKind::kListen, std::nullopt, ""};
  std::optional<Iri> speaker = u.speaker;
  if (!speaker) speaker = state_.addressee;
  // A known speaker without a chat starts one silently.
  if (speaker && state_.presence != Presence::kUnknownFace &&
      speaker != state_.addressee && brain_.is_person(*speaker)) {
    if (state_.addressee) close_chat(r.actions);
    open_chat_with(*speaker, u.date);
  }
  bool meeting = state_.presence == Presence::kUnknownFace;
  std::optional<TurnRecord> turn;
  if (state_.chat && !meeting) {
    turn = brain_.record_turn(*state_.chat, *speaker, u.text, u.date);
  }
  auto say = [&](std::vector<std::string> lines) {
    if (!lines.empty()) {
      r.actions.push_back({DialogueAction::Kind::kSay, std::move(lines),
                           std::nullopt, ""});
    }
  };

  state_.last_parse.reset();
  ParsedInput parsed;
  try {
    parsed = parser_.parse(u, parse_context(meeting ? std::nullopt : speaker));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnparsableUtterance &&
        e.code() != ErrorCode::kUnresolvedReference) {
      throw;
    }
    say({generator_.phrase_social(
        e.code() == ErrorCode::kUnresolvedReference ? "unresolved" : "clarify")});
    r.intention = {IntentionKind::kReply, std::nullopt, ""};
    return r;
  }
  if (u.perspective) {
    if (auto* sp = std::get_if<StatementParse>(&parsed)) {
      sp->perspective = *u.perspective;
    } else if (auto* cp = std::get_if<CorrectionParse>(&parsed)) {
      cp->perspective = *u.perspective;
    }
  }
  state_.last_parse = parsed;

  if (meeting) {
    std::vector<std::string> lines;
    if (auto* s = std::get_if<SocialParse>(&parsed)) {
      bool confirming =
          state_.pending && state_.pending->kind == Pending::Kind::kConfirmName;
      if (s->kind == SocialKind::kNameIntro) {
        name_utterance_ = u;
        if (u.confidence < config_.name_confidence) {
          state_.pending = Pending{Pending::Kind::kConfirmName, s->name, {}};
          current_ = {IntentionKind::kConfirmName, std::nullopt, s->name};
          lines = {generator_.phrase_social("name-confirm", {{"name", s->name}})};
        } else {
          lines = complete_meeting(s->name, u, r.actions);
        }
      } else if (s->kind == SocialKind::kAffirm && confirming) {
        std::string name = state_.pending->name;
        lines = complete_meeting(name, u, r.actions);
      } else if (s->kind == SocialKind::kDeny && confirming) {
        state_.pending.reset();
        name_utterance_.reset();
        lines = {generator_.phrase_social("name-retry")};
      } else if (s->kind == SocialKind::kFarewell) {
        close_chat(r.actions);
      }
    } else {
      lines = {generator_.phrase_social("name-retry")};
    }
    say(std::move(lines));
    r.intention = current_;
    return r;
  }

  if (!turn) {
    say({generator_.phrase_social("unresolved")});
    r.intention = {IntentionKind::kReply, std::nullopt, ""};
    return r;
  }

  std::vector<std::string> lines = std::visit(
      Overloaded{
          [&](const StatementParse& sp) {
            return handle_statement(sp, *turn, *speaker, r.actions);
          },
          [&](const CorrectionParse& cp) {
            return handle_correction(cp, *turn, *speaker, r.actions);
          },
          [&](const QuestionParse& q) { return handle_question(q, r.actions); },
          [&](const SocialParse& s) {
            std::vector<std::string> out;
            if (s.kind == SocialKind::kFarewell) {
              out.push_back(generator_.phrase_social(
                  "farewell",
                  {{"name", generator_.name_of(brain_, Term(*speaker))}}));
              close_chat(r.actions);
            }
            return out;
          }},
      parsed);

  if (lines.empty() && config_.resolve_uncertainty && state_.addressee) {
    for (const auto& c : brain_.claims().all()) {
      auto latest = brain_.latest_from(*state_.addressee, c.id);
      if (latest &&
          latest->attribution.perspective.certainty == Certainty::kUncertain) {
        current_ = {IntentionKind::kAskQuestion, std::nullopt, c.id.compact()};
        ResponseContext third{brain_.robot(), brain_.robot(),
                              SourcePolicy::kBare};
        lines.push_back(generator_.phrase_social(
            "uncertain-check",
            {{"clause", generator_.phrase_clause(brain_, c.subject, c.predicate,
                                                 c.object, Polarity::kConfirm,
                                                 third)}}));
        break;
      }
    }
  }
  say(std::move(lines));
  r.intention = current_;
  return r;
}

std::vector<std::string> Controller::handle_statement(
    const StatementParse& sp, const TurnRecord& turn, const Iri& speaker,
    std::vector<DialogueAction>& acts) {
  for (const auto& h : sp.hints) brain_.ensure_instance(h.iri, h.label, h.type);
  const PredicateInfo* info = brain_.ontology().predicate(sp.predicate);
  bool functional = info != nullptr && info->cardinality == Cardinality::kOne;
  std::optional<ConflictReport> value_before;
  std::optional<ConflictReport> persp_before;
  if (functional) {
    value_before = brain_.detect_value_conflicts(sp.subject, sp.predicate);
  }
  const Claim* existing =
      brain_.claims().find(Triple{sp.subject, sp.predicate, sp.object});
  if (existing != nullptr) {
    persp_before = brain_.detect_perspective_conflicts(existing->id);
  }

  Assertion a = brain_.assert_in_turn(turn, sp.span, sp.subject, sp.predicate,
                                      sp.object, sp.perspective);
  acts.push_back({DialogueAction::Kind::kStore, {}, a.claim.id, ""});
  note_person(Term(sp.subject));
  note_person(sp.object);
  if (state_.pending && state_.pending->kind == Pending::Kind::kQuestion &&
      state_.pending->slot == sp.predicate && sp.subject == speaker) {
    state_.pending.reset();
  }

  std::vector<std::string> lines;
  current_ = {IntentionKind::kListen, std::nullopt, ""};
  Polarity pol = sp.perspective.polarity.value_or(Polarity::kConfirm);
  bool object_slot = generator_.templates().find(sp.predicate.compact(),
                                                 "slot") == "object";
  Term person_slot = object_slot ? sp.object : Term(sp.subject);
  if (person_slot.is_iri() && brain_.is_person(person_slot.iri()) &&
      person_slot.iri() != speaker && person_slot.iri() != brain_.robot()) {
    ResponseContext third{brain_.robot(), brain_.robot(), SourcePolicy::kBare};
    lines.push_back(generator_.phrase_social(
        "echo", {{"clause", generator_.phrase_clause(brain_, sp.subject,
                                                     sp.predicate, sp.object,
                                                     pol, third)}}));
    current_ = {IntentionKind::kStateFact, std::nullopt, a.claim.id.compact()};
  } else if (sp.predicate == n2mu("isFrom") && sp.subject == speaker &&
             pol == Polarity::kConfirm && sp.object.is_iri()) {
    std::size_t count = brain_.count(
        {TriplePattern{var("x"), Term(n2mu("isFrom")), sp.object, false,
                       std::nullopt},
         TriplePattern{var("x"), Term(rdf("type")), Term(n2mu("Person")), false,
                       std::nullopt}});
    bool long_known = brain_.chat_count(speaker) > 1;
    std::string place = generator_.name_of(brain_, sp.object);
    if (count == 1 && long_known) {
      lines.push_back(generator_.phrase_social("novelty-first", {{"place", place}}));
    } else {
      lines.push_back(generator_.phrase_social(
          "novelty-count", {{"count", std::to_string(count)},
                            {"people", count == 1 ? "person" : "people"},
                            {"place", place}}));
    }
    current_ = {IntentionKind::kStateFact, std::nullopt, a.claim.id.compact()};
  }

  auto opened = [](const std::optional<ConflictReport>& before,
                   const std::optional<ConflictReport>& after) {
    return after && (!before || before->entries.size() != after->entries.size());
  };
  std::optional<ConflictReport> report;
  if (functional) {
    auto after = brain_.detect_value_conflicts(sp.subject, sp.predicate);
    if (opened(value_before, after)) report = after;
  }
  if (!report) {
    auto after = brain_.detect_perspective_conflicts(a.claim.id);
    if (opened(persp_before, after)) report = after;
  }
  if (report) {
    auto conflict = generator_.phrase_conflict(brain_, *report,
                                               response_context());
    lines.insert(lines.end(), conflict.begin(), conflict.end());
    current_ = {IntentionKind::kReportConflict, std::nullopt,
                a.claim.id.compact()};
  }
  return lines;
}

std::vector<std::string> Controller::handle_correction(
    const CorrectionParse& cp, const TurnRecord& turn, const Iri& speaker,
    std::vector<DialogueAction>& acts) {
  auto track_id = gateway_.salient();
  if (!track_id) return {generator_.phrase_social("clarify")};
  if (gateway_.effective_label(*track_id) != cp.wrong) {
    current_ = {IntentionKind::kReply, std::nullopt, cp.wrong};
    return {generator_.phrase_social("label-mismatch", {{"label", cp.wrong}})};
  }
  persist_track(*track_id, turn.date);
  gateway_.apply_correction(*track_id, cp.wrong, cp.right, speaker);
  Iri track = gateway_.track(*track_id).iri();
  brain_.retype(track, cp.wrong_class, cp.right_class);
  auto deny = brain_.assert_in_turn(
      turn, cp.wrong_span, track, rdf("type"), cp.wrong_class,
      with_polarity(cp.perspective, Polarity::kDeny));
  auto confirm = brain_.assert_in_turn(
      turn, cp.full_span, track, rdf("type"), cp.right_class,
      with_polarity(cp.perspective, Polarity::kConfirm));
  acts.push_back({DialogueAction::Kind::kStore, {}, deny.claim.id, ""});
  acts.push_back({DialogueAction::Kind::kStore, {}, confirm.claim.id, ""});
  state_.salient_track = *track_id;
  current_ = {IntentionKind::kListen, std::nullopt, cp.right};
  return {};
}

std::vector<std::string> Controller::handle_question(
    const QuestionParse& q, std::vector<DialogueAction>& acts) {
  if (q.probe) chat_state_.cite_sources = true;
  if (q.target) note_person(Term(*q.target));
  std::string rendered;
  for (const auto& p : q.patterns) {
    if (!rendered.empty()) rendered += " . ";
    rendered += p.render();
  }
  acts.push_back({DialogueAction::Kind::kQuery, {}, std::nullopt, rendered});
  current_ = {IntentionKind::kReply, std::nullopt, ""};

  std::vector<AnswerItem> items;
  switch (q.kind) {
    case QuestionKind::kYesNoFact:
      if (q.target && brain_.is_person(*q.target)) {
        items.push_back({*q.target, rdf("type"), n2mu("Person"), std::nullopt});
      }
      break;
    case QuestionKind::kBelieve: {
      if (!q.target) break;
      std::optional<Iri> claim;
      if (auto it = chat_state_.answered_from.find(*q.target);
          it != chat_state_.answered_from.end()) {
        claim = it->second;
      } else {
        for (const auto& m : brain_.mentions()) {
          if (m.attributed_to == *q.target &&
              brain_.claims().find(m.denotes) != nullptr) {
            claim = m.denotes;
          }
        }
      }
      if (!claim) break;
      const Claim* c = brain_.claims().find(*claim);
      items.push_back({c->subject, c->predicate, c->object, *q.target,
                       brain_.believes(*q.target, *claim) ? Polarity::kConfirm
                                                          : Polarity::kDeny});
      break;
    }
    case QuestionKind::kYesNoSeen:
      if (brain_.ask(q.patterns)) {
        items.push_back({brain_.robot(), n2mu("sees"), *q.object, std::nullopt});
      }
      break;
    case QuestionKind::kWhat:
      if (!q.noun.empty()) {
        std::map<Term, std::vector<Iri>, TermLess> classes;
        for (const auto& row : brain_.select(q.patterns)) {
          classes[row.at("o")].push_back(row.at("c").iri());
        }
        for (const auto& [o, cs] : classes) {
          Iri best = cs.front();
          for (const auto& c : cs) {
            if (brain_.ontology().is_subclass_of(c, best)) best = c;
          }
          items.push_back({o.iri(), rdf("type"), best, std::nullopt});
        }
        break;
      }
      [[fallthrough]];
    default: {
      for (const auto& row : brain_.select(q.patterns)) {
        Iri s = q.kind == QuestionKind::kWho ? row.at("x").iri() : *q.target;
        Term o = q.kind == QuestionKind::kWho ? Term(*q.object) : row.at("x");
        std::optional<Iri> source;
        if (const Claim* c = brain_.claims().find(Triple{s, *q.predicate, o})) {
          source = source_of(c->id);
          if (source) chat_state_.answered_from[*source] = c->id;
        }
        items.push_back({s, *q.predicate, o, source});
        note_person(Term(s));
      }
      break;
    }
  }
  return generator_.phrase_answer(brain_, q, items, response_context());
}

}  // namespace tom
