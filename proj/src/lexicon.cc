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

#include "tom/lexicon.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "tom/error.h"

namespace tom {

extern const char* const kDefaultLexiconText;

Lexicon Lexicon::defaults() {
  static const Lexicon lexicon = parse(kDefaultLexiconText);
  return lexicon;
}

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw ParseError(ErrorCode::kParseError, n,
                       "expected surface<TAB>category<TAB>target");
    }
    lex.add({line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1),
             line.substr(t2 + 1)});
  }
  return lex;
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void Lexicon::add(LexEntry e) {
  auto key = std::make_pair(e.surface, e.category);
  // Later entries override earlier ones for the same key.
  if (auto it = index_.find(key); it != index_.end()) {
    entries_[it->second] = std::move(e);
    return;
  }
  index_.emplace(std::move(key), entries_.size());
  entries_.push_back(std::move(e));
}

std::optional<std::string> Lexicon::find(std::string_view surface,
                                         std::string_view category) const {
  auto it = index_.find(std::make_pair(std::string(surface),
                                       std::string(category)));
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].target;
}

std::optional<std::string> Lexicon::surface_for(
    std::string_view category, std::string_view target) const {
  for (const auto& e : entries_) {
    if (e.category == category && e.target == target) return e.surface;
  }
  return std::nullopt;
}

bool Lexicon::covers(std::string_view surface) const {
  for (const auto& e : entries_) {
    if (e.surface == surface) return true;
  }
  return false;
}

std::vector<LexEntry> Lexicon::entries(std::string_view category) const {
  std::vector<LexEntry> out;
  for (const auto& e : entries_) {
    if (e.category == category) out.push_back(e);
  }
  return out;
}

// -- tokenizer -----------------------------------------------------------------

namespace {

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) != 0 || c >= 0x80;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t cp = 0;
  auto advance = [&]() {
    ++i;
    while (i < text.size() &&
           (static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) {
      ++i;
    }
    ++cp;
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c) != 0) {
      advance();
      continue;
    }
    std::size_t start_byte = i;
    std::size_t start_cp = cp;
    if (!is_word_byte(c)) {
      advance();
      out.push_back({std::string(text.substr(start_byte, i - start_byte)),
                     std::string(text.substr(start_byte, i - start_byte)),
                     start_cp, cp, true});
      continue;
    }
    while (i < text.size()) {
      unsigned char d = static_cast<unsigned char>(text[i]);
      if (is_word_byte(d)) {
        advance();
      } else if ((d == '\'' || d == '-') && i + 1 < text.size() &&
                 is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
        advance();
      } else {
        break;
      }
    }
    std::string surface(text.substr(start_byte, i - start_byte));
    std::string low = lower(surface);
    std::size_t split = std::string::npos;
    if (ends_with(low, "'s")) {
      split = low.size() - 2;
    } else if (ends_with(low, "n't")) {
      split = low.size() - 3;
    }
    if (split != std::string::npos) {
      // Suffixes are ASCII, so byte and code point lengths agree.
      std::size_t tail = low.size() - split;
      out.push_back({low.substr(0, split), surface.substr(0, split), start_cp,
                     cp - tail, false});
      out.push_back({low.substr(split), surface.substr(split), cp - tail, cp,
                     false});
    } else {
      out.push_back({low, surface, start_cp, cp, false});
    }
  }
  return out;
}

std::vector<std::string> token_texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

}  // namespace tom
