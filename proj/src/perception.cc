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

#include "tom/perception.h"

#include "tom/brain.h"
#include "tom/error.h"

namespace tom {

void PerceptEvent::validate() const {
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw Error(ErrorCode::kMalformedEvent, "confidence outside [0,1]");
  }
  switch (kind) {
    case Kind::kFace:
      if (identity.empty()) {
        throw Error(ErrorCode::kMalformedEvent, "face without identity");
      }
      break;
    case Kind::kObject:
      if (label.empty()) {
        throw Error(ErrorCode::kMalformedEvent, "object without label");
      }
      break;
    case Kind::kLeave:
      if (identity.empty() || !label.empty() || track) {
        throw Error(ErrorCode::kMalformedEvent,
                    "leave carries an identity only");
      }
      break;
  }
}

std::string ObjectTrack::effective_label() const {
  if (!overrides.empty()) return overrides.back().label;
  if (hypotheses.empty()) throw Error(ErrorCode::kEmptyTrack, id);
  const Hypothesis* best = &hypotheses.front();
  for (const auto& h : hypotheses) {
    if (h.confidence >= best->confidence) best = &h;
  }
  return best->label;
}

std::optional<PerceptEvent> PerceptionGateway::ingest(PerceptEvent event) {
  event.validate();
  switch (event.kind) {
    case PerceptEvent::Kind::kLeave:
      return event;
    case PerceptEvent::Kind::kFace:
      if (event.confidence < gates_.face) return std::nullopt;
      return event;
    case PerceptEvent::Kind::kObject:
      break;
  }
  if (event.confidence < gates_.object) return std::nullopt;
  if (!event.track) event.track = "auto" + std::to_string(++auto_tracks_);
  ObjectTrack& t = tracks_[*event.track];
  t.id = *event.track;
  t.hypotheses.push_back({event.label, event.confidence, ++seq_});
  salient_ = t.id;
  return event;
}

bool PerceptionGateway::has_track(const std::string& id) const {
  return tracks_.count(id) != 0;
}

const ObjectTrack& PerceptionGateway::track(const std::string& id) const {
  auto it = tracks_.find(id);
  if (it == tracks_.end()) throw Error(ErrorCode::kUnknownTrack, id);
  return it->second;
}

ObjectTrack& PerceptionGateway::mutable_track(const std::string& id) {
  auto it = tracks_.find(id);
  if (it == tracks_.end()) throw Error(ErrorCode::kUnknownTrack, id);
  return it->second;
}

std::string PerceptionGateway::effective_label(const std::string& id) const {
  return track(id).effective_label();
}

const ObjectTrack& PerceptionGateway::apply_correction(
    const std::string& id, const std::string& wrong, const std::string& right,
    const Iri& source) {
  ObjectTrack& t = mutable_track(id);
  std::string current = t.effective_label();
  if (current != wrong) {
    throw Error(ErrorCode::kLabelMismatch,
                "track " + id + " is " + current + ", not " + wrong);
  }
  t.overrides.push_back({right, source, ++seq_});
  salient_ = id;
  return t;
}

Identity PerceptionGateway::face_to_identity(const PerceptEvent& event,
                                             const Brain& brain) {
  if (event.identity.empty() || event.identity == "unknown") return {};
  return {brain.find_person_by_name(event.identity)};
}

}  // namespace tom
