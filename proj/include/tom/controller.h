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

// The conversation loop: beliefs about who is present and what the brain
// lacks, desires in a fixed priority order, and one intention per event.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tom/brain.h"
#include "tom/generator.h"
#include "tom/parser.h"
#include "tom/perception.h"

namespace tom {

enum class Presence { kNone, kUnknownFace, kKnown };

// Highest priority first.
enum class Desire {
  kRespondToHuman,
  kResolveConflict,
  kAcquireSocialKnowledge,
  kShareExperience,
  kResolveUncertainty,
};

enum class IntentionKind {
  kLookForPerson,
  kMeetNewPerson,
  kGreetKnownPerson,
  kDetectObjects,
  kAskQuestion,
  kStateFact,
  kListen,
  kReply,
  kConfirmName,
  kShareObservation,
  kReportConflict,
};

std::string_view intention_name(IntentionKind k);
std::string_view desire_name(Desire d);

struct Intention {
  IntentionKind kind = IntentionKind::kLookForPerson;
  std::optional<Iri> slot;  // ASK_QUESTION
  std::string payload;      // name, label or fact

  friend bool operator==(const Intention&, const Intention&) = default;
};

struct DialogueAction {
  enum class Kind { kSay, kStore, kQuery, kRegisterFriend, kEndChat };
  Kind kind = Kind::kSay;
  std::vector<std::string> lines;  // say
  std::optional<Iri> claim;        // store
  std::string detail;              // query rendering, friend name

  friend bool operator==(const DialogueAction&, const DialogueAction&) = default;
};

std::string_view action_kind_name(DialogueAction::Kind k);

struct Pending {
  enum class Kind { kConfirmName, kQuestion };
  Kind kind = Kind::kConfirmName;
  std::string name;
  std::optional<Iri> slot;
  friend bool operator==(const Pending&, const Pending&) = default;
};

struct BrainDigest {
  std::vector<Iri> gaps;  // for the addressee
  std::size_t open_conflicts = 0;
  std::size_t uncertain_claims = 0;
};

struct BeliefState {
  Presence presence = Presence::kNone;
  double face_confidence = 0;
  std::optional<Iri> addressee;
  std::optional<ChatRecord> chat;
  std::optional<std::string> salient_track;
  std::optional<Pending> pending;
  std::optional<ParsedInput> last_parse;
  BrainDigest digest;
};

struct ControllerConfig {
  // Names heard with less confidence are confirmed before registering.
  double name_confidence = 0.8;
  bool resolve_uncertainty = false;
  std::size_t max_lines = 6;
  Gates gates;
};

using Event = std::variant<PerceptEvent, Utterance>;

struct StepResult {
  Intention intention;
  std::vector<DialogueAction> actions;

  std::vector<std::string> lines() const;
};

class Controller {
 public:
  Controller(Brain& brain, Parser parser, Generator generator,
             ControllerConfig config = {});

  StepResult step(const Event& event);

  const BeliefState& beliefs() const { return state_; }
  const PerceptionGateway& gateway() const { return gateway_; }
  const Parser& parser() const { return parser_; }
  const Generator& generator() const { return generator_; }
  // The desire the current state serves and the intention it selects.
  Desire active_desire() const;
  Intention select_intention() const;

 private:
  struct ChatState {
    bool cite_sources = false;
    bool asked_gap = false;
    std::vector<Iri> recent_persons;
    // Last claim answered from each source, for "do you believe X".
    std::map<Iri, Iri> answered_from;
  };

  StepResult on_percept(const PerceptEvent& e);
  StepResult on_utterance(const Utterance& u);

  void open_chat_with(const Iri& person, const Date& date);
  void close_chat(std::vector<DialogueAction>& actions);
  void persist_track(const std::string& track, const Date& date);
  ParseContext parse_context(const std::optional<Iri>& speaker) const;
  ResponseContext response_context() const;
  void refresh_digest();
  void note_person(const Term& t);
  std::optional<Iri> source_of(const Iri& claim) const;

  std::vector<std::string> greet_known(const Iri& person, const Date& date);
  std::vector<std::string> complete_meeting(const std::string& name,
                                            const Utterance& u,
                                            std::vector<DialogueAction>& acts);
  std::vector<std::string> handle_statement(const StatementParse& sp,
                                            const TurnRecord& turn,
                                            const Iri& speaker,
                                            std::vector<DialogueAction>& acts);
  std::vector<std::string> handle_correction(const CorrectionParse& cp,
                                             const TurnRecord& turn,
                                             const Iri& speaker,
                                             std::vector<DialogueAction>& acts);
  std::vector<std::string> handle_question(const QuestionParse& q,
                                           std::vector<DialogueAction>& acts);
  std::optional<std::string> share_line(const Date& date);

  Brain& brain_;
  Parser parser_;
  Generator generator_;
  ControllerConfig config_;
  PerceptionGateway gateway_;
  BeliefState state_;
  ChatState chat_state_;
  // Intention chosen for the step being processed.
  Intention current_;
  std::set<std::pair<std::string, Iri>> shared_;
  std::set<std::string> persisted_tracks_;
  // Name heard during the meet flow, kept until registration.
  std::optional<Utterance> name_utterance_;
};

}  // namespace tom
