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

#include "tom/http_api.h"

#include <httplib.h>

#include "tom/error.h"

namespace tom {

using nlohmann::json;

namespace {

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSessionClosed:
      return 409;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kUnknownClaim:
    case ErrorCode::kUnknownSelector:
    case ErrorCode::kUnknownPrefix:
      return 404;
    default:
      return 400;
  }
}

void reply(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

// Runs `f`, mapping library errors and bad JSON to error responses.
template <class F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const Error& e) {
      reply(res,
            {{"error", std::string(error_code_name(e.code()))},
             {"message", e.what()}},
            status_for(e.code()));
    } catch (const json::exception& e) {
      reply(res, {{"error", "BadRequest"}, {"message", e.what()}}, 400);
    }
  };
}

json body_of(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  json j = json::parse(req.body);
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "body must be an object");
  return j;
}

int session_param(const httplib::Request& req) {
  const std::string& s = req.matches[1];
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, "bad session id " + s);
  }
}

std::optional<std::string> opt_string(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<std::string>();
}

}  // namespace

PerceptEvent percept_from_json(const json& body) {
  PerceptEvent e;
  try {
    std::string kind = body.at("kind").get<std::string>();
    if (kind == "face") {
      e.kind = PerceptEvent::Kind::kFace;
    } else if (kind == "object") {
      e.kind = PerceptEvent::Kind::kObject;
    } else if (kind == "leave") {
      e.kind = PerceptEvent::Kind::kLeave;
    } else {
      throw Error(ErrorCode::kMalformedEvent, "unknown kind " + kind);
    }
    e.identity = opt_string(body, "id").value_or("");
    e.label = opt_string(body, "label").value_or("");
    if (body.contains("confidence")) e.confidence = body["confidence"].get<double>();
    e.track = opt_string(body, "track");
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kMalformedEvent, ex.what());
  }
  e.validate();
  return e;
}

void install_routes(httplib::Server& server, Service& service) {
  Service* svc = &service;

  server.Post("/session", guarded([svc](const auto& req, auto& res) {
    json b = body_of(req);
    double conf = b.value("confidence", 1.0);
    auto [id, lines] = svc->open_session(opt_string(b, "speaker"), conf);
    reply(res, {{"session_id", id}, {"lines", lines}});
  }));

  server.Post(R"(/session/(\d+)/utterance)",
              guarded([svc](const auto& req, auto& res) {
                json b = body_of(req);
                std::optional<Perspective> persp;
                if (auto p = opt_string(b, "perspective")) {
                  persp = Perspective::parse(*p);
                }
                UtteranceReply r = svc->post_utterance(
                    session_param(req), opt_string(b, "speaker"),
                    b.at("text").get<std::string>(), b.value("confidence", 1.0),
                    persp);
                reply(res, {{"lines", r.lines},
                            {"interpretation", r.interpretation}});
              }));

  server.Post(R"(/session/(\d+)/close)", guarded([svc](const auto& req, auto& res) {
                svc->close_session(session_param(req));
                reply(res, {{"closed", true}});
              }));

  server.Get(R"(/session/(\d+)/transcript)",
             guarded([svc](const auto& req, auto& res) {
               json out = json::array();
               for (const auto& e : svc->transcript(session_param(req))) {
                 static constexpr const char* roles[] = {"human", "robot", "note"};
                 out.push_back({{"role", roles[static_cast<int>(e.role)]},
                                {"speaker", e.speaker},
                                {"text", e.text},
                                {"date", e.date.str()},
                                {"line", e.render()}});
               }
               reply(res, out);
             }));

  server.Post("/percept", guarded([svc](const auto& req, auto& res) {
    auto lines = svc->post_percept(percept_from_json(body_of(req)));
    reply(res, {{"lines", lines}});
  }));

  server.Get("/brain/instances", guarded([svc](const auto&, auto& res) {
    reply(res, svc->view("instances"));
  }));
  server.Get("/brain/claims", guarded([svc](const auto& req, auto& res) {
    reply(res, svc->view("claims", req.get_param_value("about")));
  }));
  server.Get(R"(/brain/claims/([^/]+)/perspectives)",
             guarded([svc](const auto& req, auto& res) {
               reply(res, svc->view("perspectives", req.matches[1]));
             }));
  server.Get("/brain/conflicts", guarded([svc](const auto&, auto& res) {
    reply(res, svc->view("conflicts"));
  }));
  server.Get("/brain/dump", guarded([svc](const auto&, auto& res) {
    res.set_content(svc->dump(), "text/plain");
  }));
}

}  // namespace tom
