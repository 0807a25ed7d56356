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

// Sessions, transcripts, the scenario DSL and read-only brain views. One
// Service owns one brain; every event goes through its single queue.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tom/brain.h"
#include "tom/controller.h"

namespace tom {

struct TranscriptEntry {
  enum class Role { kHuman, kRobot, kNote };
  Role role = Role::kRobot;
  std::string speaker;  // human name, empty otherwise
  std::string text;
  Date date;

  // "L: ...", "Bram: ...", "[...]"
  std::string render() const;
};

struct Session {
  int id = 0;
  std::optional<Iri> speaker;
  bool open = true;
  std::vector<TranscriptEntry> transcript;
};

struct UtteranceReply {
  std::vector<std::string> lines;
  nlohmann::json interpretation;
};

struct ServiceOptions {
  ControllerConfig controller;
  std::optional<Lexicon> lexicon;
  std::optional<TemplateTable> templates;
  bool verbose = false;  // percept notes in transcripts
};

class Service {
 public:
  explicit Service(std::unique_ptr<Brain> brain = std::make_unique<Brain>(),
                   ServiceOptions options = {});

  // Opens a session; a known or "unknown" speaker is treated as a face
  // arriving. Returns the session id and any robot lines.
  std::pair<int, std::vector<std::string>> open_session(
      const std::optional<std::string>& speaker, double confidence = 1.0);
  // Throws kSessionClosed, kInvalidArgument for an unknown id.
  UtteranceReply post_utterance(int session, const std::optional<std::string>& speaker,
                                const std::string& text, double confidence,
                                const std::optional<Perspective>& perspective =
                                    std::nullopt);
  // Throws kMalformedEvent.
  std::vector<std::string> post_percept(const PerceptEvent& event);
  void close_session(int session);

  std::vector<TranscriptEntry> transcript(int session) const;
  // instances | claims | perspectives | conflicts | dump. Throws
  // kUnknownSelector.
  nlohmann::json view(const std::string& selector,
                      const std::string& arg = "") const;
  std::string dump() const;

  void set_date(const Date& d);
  Date date() const;

  // Holds the service lock.
  template <class F>
  auto with_brain(F&& f) const {
    std::lock_guard lock(mu_);
    return f(static_cast<const Brain&>(*brain_));
  }
  const Controller& controller() const { return *controller_; }

 private:
  Session& session(int id);
  const Session& session(int id) const;
  Session* active();
  void record_lines(Session* s, const std::vector<std::string>& lines);
  std::optional<Iri> resolve_speaker(const std::optional<std::string>& name) const;

  mutable std::mutex mu_;
  std::unique_ptr<Brain> brain_;
  std::unique_ptr<Controller> controller_;
  ServiceOptions options_;
  std::map<int, Session> sessions_;
  int next_session_ = 1;
  Date date_;
};

// -- views -----------------------------------------------------------------------

nlohmann::json instances_view(const Brain& brain);
nlohmann::json claims_view(const Brain& brain, const std::string& about);
// Throws kUnknownClaim.
nlohmann::json perspectives_view(const Brain& brain, const std::string& claim);
nlohmann::json conflicts_view(const Brain& brain);
nlohmann::json interpretation_json(const ParsedInput& parsed);

// -- scenario DSL ------------------------------------------------------------------

struct ScriptEvent {
  enum class Kind { kDate, kPercept, kHuman, kExpect };
  Kind kind = Kind::kDate;
  std::size_t line = 0;
  Date date;
  PerceptEvent percept;
  std::string speaker;  // name or "unknown"
  double confidence = 1.0;
  std::string text;     // utterance or expected line
  std::optional<Perspective> perspective;
};

// Throws ParseError with code kScriptParseError and the offending line.
std::vector<ScriptEvent> parse_script(std::string_view text);

struct Mismatch {
  std::size_t line = 0;  // script line; 0 for trailing output
  std::string expected;
  std::string actual;
  std::string describe() const;
};

struct ScriptResult {
  std::vector<TranscriptEntry> transcript;
  std::vector<Mismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

// Feeds events in order; each EXPECT consumes the next robot line, and a
// robot line left unconsumed when the next event starts is a mismatch.
ScriptResult run_script(const std::vector<ScriptEvent>& events,
                        Service& service);
// Throws Error(kExpectMismatch) describing the first mismatch.
ScriptResult check_script(std::string_view text, Service& service);

}  // namespace tom
