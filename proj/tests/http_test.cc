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

#include <httplib.h>

#include <thread>

#include "tom/error.h"
#include "tom/http_api.h"

namespace tom {
namespace {

using nlohmann::json;

struct Running {
  Service service;
  httplib::Server server;
  std::thread thread;
  int port = 0;

  Running() {
    install_routes(server, service);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~Running() {
    server.stop();
    thread.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port); }
};

json post(httplib::Client& c, const std::string& path, const json& body, int status = 200) {
  auto res = c.Post(path, body.dump(), "application/json");
  EXPECT_TRUE(res);
  if (!res) return nullptr;
  EXPECT_EQ(res->status, status) << path << " " << res->body;
  return json::parse(res->body);
}

json get(httplib::Client& c, const std::string& path, int status = 200) {
  auto res = c.Get(path);
  EXPECT_TRUE(res);
  if (!res) return nullptr;
  EXPECT_EQ(res->status, status) << path << " " << res->body;
  return json::parse(res->body);
}

TEST(Http, MeetSeleneEndToEnd) {
  Running r;
  auto c = r.client();
  auto open = post(c, "/session", {{"speaker", "unknown"}, {"confidence", 0.92}});
  int id = open["session_id"];
  EXPECT_EQ(open["lines"].size(), 2u);
  std::string base = "/session/" + std::to_string(id);
  auto a = post(c, base + "/utterance",
                {{"speaker", "unknown"}, {"text", "My name is Selene."}, {"confidence", 0.7}});
  EXPECT_EQ(a["lines"][0], "I hope I am correct and your name is: Selene.");
  auto b = post(c, base + "/utterance",
                {{"speaker", "unknown"}, {"text", "Yes that is my name."}, {"confidence", 0.9}});
  EXPECT_EQ(b["lines"][0], "Nice to meet you Selene. Now I have a new friend.");
  auto m = post(c, base + "/utterance",
                {{"speaker", "Selene"}, {"text", "I am from Mexico."}, {"confidence", 0.9}});
  EXPECT_EQ(m["lines"], json::array({"Now I know 1 person from Mexico."}));
  EXPECT_EQ(m["interpretation"]["claims"].size(), 1u);

  auto transcript = get(c, base + "/transcript");
  EXPECT_EQ(transcript.back()["line"], "L: Now I know 1 person from Mexico.");
  auto claims = get(c, "/brain/claims?about=Selene");
  ASSERT_FALSE(claims.empty());
  std::string claim = claims[0]["id"];
  EXPECT_FALSE(get(c, "/brain/claims/" + claim + "/perspectives").empty());
  EXPECT_TRUE(get(c, "/brain/conflicts").empty());
  EXPECT_FALSE(get(c, "/brain/instances").empty());
  auto dump = c.Get("/brain/dump");
  ASSERT_TRUE(dump);
  EXPECT_EQ(dump->body, r.service.dump());
}

TEST(Http, Errors) {
  Running r;
  auto c = r.client();
  post(c, "/percept", {{"kind", "smell"}}, 400);
  post(c, "/percept", {{"kind", "face"}, {"confidence", 0.9}}, 400);
  post(c, "/session/42/utterance", {{"text", "hi"}}, 404);
  int id = post(c, "/session", json::object())["session_id"];
  post(c, "/session/" + std::to_string(id) + "/close", json::object());
  auto closed = post(c, "/session/" + std::to_string(id) + "/utterance",
                     {{"speaker", "Bram"}, {"text", "Hello."}}, 409);
  EXPECT_EQ(closed["error"], "SessionClosed");
  get(c, "/brain/claims/claim77/perspectives", 404);
  auto bad = c.Post("/session", "{not json", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
}

// The same events over HTTP and in process give the same replies.
TEST(Http, ParityWithInProcessService) {
  Running r;
  Service local;
  auto c = r.client();
  const std::vector<std::pair<std::string, std::string>> script = {
      {"unknown", "My name is Bram."},
      {"Bram", "I am from the Netherlands."},
      {"Bram", "Where is Bram from?"},
      {"Bram", "Do you know Lenka?"},
      {"Bram", "blorp"}};
  int remote = post(c, "/session", {{"speaker", "unknown"}})["session_id"];
  int here = local.open_session("unknown").first;
  for (const auto& [who, text] : script) {
    auto a = post(c, "/session/" + std::to_string(remote) + "/utterance",
                  {{"speaker", who}, {"text", text}, {"confidence", 0.9}});
    auto b = local.post_utterance(here, who, text, 0.9);
    EXPECT_EQ(a["lines"].get<std::vector<std::string>>(), b.lines) << text;
  }
  EXPECT_EQ(r.service.dump(), local.dump());
}

TEST(Http, PerceptFromJson) {
  auto e = percept_from_json({{"kind", "object"}, {"label", "cat"},
                              {"confidence", 0.63}, {"track", "t1"}});
  EXPECT_EQ(e.kind, PerceptEvent::Kind::kObject);
  EXPECT_EQ(e.track, "t1");
  EXPECT_THROW(percept_from_json({{"kind", "leave"}, {"id", "Bram"}, {"label", "cat"}}),
               Error);
  EXPECT_THROW(percept_from_json({{"kind", 3}}), Error);
}

}  // namespace
}  // namespace tom
