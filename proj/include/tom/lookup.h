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

// External factual services. The fixture client answers from a fixed table
// and never touches the network; the remote client is optional.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "tom/term.h"

namespace tom {

struct LookupAnswer {
  Term value;
  std::string provenance;  // e.g. "fixture:geo"
};

class LookupClient {
 public:
  virtual ~LookupClient() = default;
  virtual std::optional<LookupAnswer> lookup(const Iri& subject,
                                             const Iri& predicate) = 0;
};

class FixtureLookup : public LookupClient {
 public:
  void add(const Iri& subject, const Iri& predicate, Term value,
           std::string provenance);
  // Small geography table used by the default service.
  static FixtureLookup geo();
  // Lines of `subject<TAB>predicate<TAB>object<TAB>provenance`, compact Iris.
  static FixtureLookup parse(std::string_view text);

  std::optional<LookupAnswer> lookup(const Iri& subject,
                                     const Iri& predicate) override;

 private:
  std::map<std::pair<std::string, std::string>, LookupAnswer> table_;
};

// Queries `GET {base}/lookup?s=..&p=..` returning {"value","provenance"}.
// With the network disabled every call throws kLookupUnavailable.
class RemoteLookup : public LookupClient {
 public:
  RemoteLookup(std::string base_url, bool network_enabled)
      : base_url_(std::move(base_url)), network_enabled_(network_enabled) {}

  std::optional<LookupAnswer> lookup(const Iri& subject,
                                     const Iri& predicate) override;

 private:
  std::string base_url_;
  bool network_enabled_;
};

// Synthetic source instance standing for a provenance tag.
Iri service_iri(std::string_view provenance);

}  // namespace tom
