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

// JSON over HTTP for a Service. Routes are fixed; bodies are JSON objects.

#include <json.hpp>

#include "tom/session.h"

namespace httplib {
class Server;
}

namespace tom {

// {kind: face|object|leave, id, label, confidence, track}. Throws
// kMalformedEvent.
PerceptEvent percept_from_json(const nlohmann::json& body);

void install_routes(httplib::Server& server, Service& service);

}  // namespace tom
