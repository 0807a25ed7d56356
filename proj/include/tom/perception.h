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

// Gating and bookkeeping for face and object percepts. Object tracks keep
// every sensor hypothesis and human override; a human override always wins.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tom/grasp.h"
#include "tom/term.h"

namespace tom {

class Brain;

struct PerceptEvent {
  enum class Kind { kFace, kObject, kLeave };
  Kind kind = Kind::kFace;
  // Face and leave: a person name or "unknown".
  std::string identity;
  // Object: class token ("cat").
  std::string label;
  double confidence = 1.0;
  std::optional<std::string> track;
  Date date;

  // Throws kMalformedEvent.
  void validate() const;
};

struct Hypothesis {
  std::string label;
  double confidence = 0;
  std::uint64_t seq = 0;
};

struct Override {
  std::string label;
  Iri source;
  std::uint64_t seq = 0;
};

struct ObjectTrack {
  std::string id;
  std::vector<Hypothesis> hypotheses;
  std::vector<Override> overrides;  // history, latest last

  // leolaniWorld:object_<id>
  Iri iri() const { return world("object_" + id); }
  bool overridden() const { return !overrides.empty(); }
  // Throws kEmptyTrack.
  std::string effective_label() const;
};

struct Gates {
  double object = 0.5;
  double face = 0.6;
};

struct Identity {
  std::optional<Iri> person;  // nullopt: unknown face
  bool known() const { return person.has_value(); }
};

class PerceptionGateway {
 public:
  explicit PerceptionGateway(Gates gates = {}) : gates_(gates) {}

  const Gates& gates() const { return gates_; }

  // nullopt when the event falls below its gate. Accepted object events
  // come back with their track id filled in.
  std::optional<PerceptEvent> ingest(PerceptEvent event);

  // Throws kUnknownTrack.
  const ObjectTrack& track(const std::string& id) const;
  bool has_track(const std::string& id) const;
  const std::map<std::string, ObjectTrack>& tracks() const { return tracks_; }
  // Throws kUnknownTrack or kEmptyTrack.
  std::string effective_label(const std::string& id) const;
  // Most recently observed or corrected track.
  std::optional<std::string> salient() const { return salient_; }

  // Sets the override. The brain side (retyping, claims) is the caller's.
  // Throws kUnknownTrack, or kLabelMismatch when `wrong` is not the
  // current effective label.
  const ObjectTrack& apply_correction(const std::string& id,
                                      const std::string& wrong,
                                      const std::string& right,
                                      const Iri& source);

  static Identity face_to_identity(const PerceptEvent& event,
                                   const Brain& brain);

 private:
  ObjectTrack& mutable_track(const std::string& id);

  Gates gates_;
  std::map<std::string, ObjectTrack> tracks_;
  std::optional<std::string> salient_;
  std::uint64_t seq_ = 0;
  int auto_tracks_ = 0;
};

}  // namespace tom
