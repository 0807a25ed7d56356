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

#include "tom/lookup.h"

#include <sstream>

#include "httplib.h"
#include "json.hpp"
#include "tom/error.h"

namespace tom {

void FixtureLookup::add(const Iri& subject, const Iri& predicate, Term value,
                        std::string provenance) {
  table_[{subject.compact(), predicate.compact()}] =
      LookupAnswer{std::move(value), std::move(provenance)};
}

FixtureLookup FixtureLookup::geo() {
  FixtureLookup f;
  const Iri located = n2mu("isLocatedIn");
  f.add(world("Mexico"), located, world("NorthAmerica"), "fixture:geo");
  f.add(world("Netherlands"), located, world("Europe"), "fixture:geo");
  f.add(world("Serbia"), located, world("Europe"), "fixture:geo");
  return f;
}

FixtureLookup FixtureLookup::parse(std::string_view text) {
  FixtureLookup f;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::istringstream row(line);
    for (std::string c; std::getline(row, c, '\t');) cols.push_back(c);
    if (cols.size() != 4) {
      throw ParseError(ErrorCode::kParseError, n, "expected 4 columns");
    }
    try {
      f.add(Iri::parse(cols[0]), Iri::parse(cols[1]), Iri::parse(cols[2]),
            cols[3]);
    } catch (const Error& e) {
      throw ParseError(ErrorCode::kParseError, n, e.what());
    }
  }
  return f;
}

std::optional<LookupAnswer> FixtureLookup::lookup(const Iri& subject,
                                                  const Iri& predicate) {
  auto it = table_.find({subject.compact(), predicate.compact()});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::optional<LookupAnswer> RemoteLookup::lookup(const Iri& subject,
                                                 const Iri& predicate) {
  if (!network_enabled_) {
    throw Error(ErrorCode::kLookupUnavailable, "network disabled");
  }
  httplib::Client client(base_url_);
  client.set_connection_timeout(2);
  httplib::Params params{{"s", subject.compact()}, {"p", predicate.compact()}};
  auto res = client.Get("/lookup", params, httplib::Headers{});
  if (!res) throw Error(ErrorCode::kLookupUnavailable, base_url_);
  if (res->status == 404) return std::nullopt;
  if (res->status != 200) {
    throw Error(ErrorCode::kLookupUnavailable,
                "status " + std::to_string(res->status));
  }
  try {
    auto body = nlohmann::json::parse(res->body);
    return LookupAnswer{Iri::parse(body.at("value").get<std::string>()),
                        body.value("provenance", "remote")};
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kLookupUnavailable, e.what());
  }
}

Iri service_iri(std::string_view provenance) {
  std::string local = "service-";
  for (char c : provenance) local += (c == ':' || c == ' ') ? '-' : c;
  return world(local);
}

}  // namespace tom
