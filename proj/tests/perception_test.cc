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

#include <gtest/gtest.h>

#include <random>

#include "tom/brain.h"
#include "tom/error.h"
#include "tom/perception.h"

namespace tom {
namespace {

PerceptEvent object(std::string label, double conf,
                    std::optional<std::string> track = std::nullopt) {
  PerceptEvent e;
  e.kind = PerceptEvent::Kind::kObject;
  e.label = std::move(label);
  e.confidence = conf;
  e.track = std::move(track);
  return e;
}

PerceptEvent face(std::string who, double conf) {
  PerceptEvent e;
  e.kind = PerceptEvent::Kind::kFace;
  e.identity = std::move(who);
  e.confidence = conf;
  return e;
}

TEST(Perception, Gating) {
  PerceptionGateway g;
  auto a = g.ingest(object("cat", 0.63, "t1"));
  ASSERT_TRUE(a);
  EXPECT_EQ(g.track("t1").hypotheses.size(), 1u);
  EXPECT_EQ(g.effective_label("t1"), "cat");
  EXPECT_FALSE(g.ingest(object("cat", 0.3, "t1")));
  EXPECT_EQ(g.track("t1").hypotheses.size(), 1u);
  EXPECT_TRUE(g.ingest(face("Bram", 0.95)));
  EXPECT_FALSE(g.ingest(face("Bram", 0.55)));
  auto untracked = g.ingest(object("panda", 0.8));
  ASSERT_TRUE(untracked && untracked->track);
  EXPECT_NE(*untracked->track, "t1");
  EXPECT_THROW(g.ingest(object("cat", 1.5)), Error);
}

TEST(Perception, EffectiveLabel) {
  PerceptionGateway g(Gates{0.3, 0.3});
  g.ingest(object("cat", 0.4, "t1"));
  g.ingest(object("rabbit", 0.4, "t1"));
  EXPECT_EQ(g.effective_label("t1"), "rabbit");
  g.ingest(object("cat", 0.9, "t1"));
  EXPECT_EQ(g.effective_label("t1"), "cat");
  EXPECT_THROW(g.effective_label("t9"), Error);
  ObjectTrack empty{"e", {}, {}};
  try {
    empty.effective_label();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyTrack);
  }
}

TEST(Perception, Corrections) {
  PerceptionGateway g;
  g.ingest(object("cat", 0.63, "t1"));
  g.apply_correction("t1", "cat", "rabbit", friends("Bram"));
  EXPECT_EQ(g.effective_label("t1"), "rabbit");
  g.ingest(object("cat", 0.9, "t1"));
  EXPECT_EQ(g.effective_label("t1"), "rabbit");
  try {
    g.apply_correction("t1", "dog", "rabbit", friends("Bram"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLabelMismatch);
  }
  g.apply_correction("t1", "rabbit", "cat", friends("Selene"));
  EXPECT_EQ(g.effective_label("t1"), "cat");
  EXPECT_EQ(g.track("t1").overrides.size(), 2u);
}

TEST(Perception, FaceIdentity) {
  Brain empty;
  EXPECT_FALSE(PerceptionGateway::face_to_identity(face("Lenka", 0.9), empty)
                   .known());
  Brain b;
  Iri lenka = b.register_person("Lenka");
  EXPECT_EQ(PerceptionGateway::face_to_identity(face("Lenka", 0.9), b).person,
            lenka);
  EXPECT_FALSE(
      PerceptionGateway::face_to_identity(face("unknown", 0.92), b).known());
}

TEST(Perception, LeaveCarriesIdentityOnly) {
  PerceptEvent e;
  e.kind = PerceptEvent::Kind::kLeave;
  e.identity = "Bram";
  EXPECT_NO_THROW(e.validate());
  e.label = "cat";
  EXPECT_THROW(e.validate(), Error);
}

// Random hypothesis sequences after an override never change the label.
TEST(PerceptionProperty, OverrideSupremacy) {
  std::mt19937 rng(7);
  const std::vector<std::string> labels{"cat", "rabbit", "panda", "dog"};
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::uniform_real_distribution<double> conf(0.0, 1.0);
  for (int round = 0; round < 200; ++round) {
    PerceptionGateway g;
    g.ingest(object(labels[pick(rng)], 0.9, "t"));
    std::string right = labels[pick(rng)];
    g.apply_correction("t", g.effective_label("t"), right, friends("Bram"));
    for (int i = 0; i < 20; ++i) {
      g.ingest(object(labels[pick(rng)], conf(rng), "t"));
      ASSERT_EQ(g.effective_label("t"), right);
    }
  }
}

// Raising the gate never admits something a lower gate discarded, and
// hypotheses stay on their own track.
TEST(PerceptionProperty, GateMonotoneAndTracksIsolated) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> conf(0.0, 1.0);
  std::uniform_int_distribution<int> trk(0, 3);
  for (int round = 0; round < 100; ++round) {
    double lo = conf(rng);
    double hi = lo + (1.0 - lo) * conf(rng);
    PerceptionGateway low(Gates{lo, lo});
    PerceptionGateway high(Gates{hi, hi});
    std::map<std::string, std::size_t> sent;
    for (int i = 0; i < 30; ++i) {
      std::string t = "t" + std::to_string(trk(rng));
      auto e = object(t + "-thing", conf(rng), t);
      bool a = low.ingest(e).has_value();
      bool b = high.ingest(e).has_value();
      ASSERT_FALSE(b && !a);
      if (a) ++sent[t];
    }
    for (const auto& [id, track] : low.tracks()) {
      EXPECT_EQ(track.hypotheses.size(), sent[id]);
      for (const auto& h : track.hypotheses) EXPECT_EQ(h.label, id + "-thing");
    }
  }
}

}  // namespace
}  // namespace tom
