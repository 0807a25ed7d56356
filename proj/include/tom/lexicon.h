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

// Word tables for the parser and generator, loaded from a three-column text
// table `surface<TAB>category<TAB>target`.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tom {

struct LexEntry {
  std::string surface;
  std::string category;
  std::string target;
};

class Lexicon {
 public:
  // The table shipped in data/lexicon.tsv, compiled in.
  static Lexicon defaults();
  // Throws ParseError on lines without three tab-separated columns.
  static Lexicon parse(std::string_view text);
  static Lexicon load(const std::string& path);

  void add(LexEntry e);

  // Target for (surface, category).
  std::optional<std::string> find(std::string_view surface,
                                  std::string_view category) const;
  bool is(std::string_view surface, std::string_view category) const {
    return find(surface, category).has_value();
  }
  // Reverse lookup: first surface with this (category, target).
  std::optional<std::string> surface_for(std::string_view category,
                                         std::string_view target) const;
  // True if the surface appears under any category.
  bool covers(std::string_view surface) const;
  std::vector<LexEntry> entries(std::string_view category) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<LexEntry> entries_;
  std::map<std::pair<std::string, std::string>, std::size_t, std::less<>>
      index_;
};

struct Token {
  std::string text;     // lowercased
  std::string surface;  // as written
  std::size_t begin = 0;  // code point offsets into the utterance
  std::size_t end = 0;
  bool punct = false;
};

// Lowercased word tokens; punctuation split off and kept; "'s" and "n't"
// become their own tokens. Never throws.
std::vector<Token> tokenize(std::string_view text);
std::vector<std::string> token_texts(const std::vector<Token>& tokens);

}  // namespace tom
