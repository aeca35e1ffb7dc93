// Copyright 2026 The VGPN Authors
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

#include "vgpn/lang/lexicon.hpp"

#include "vgpn/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace vgpn::lang
{
namespace
{

std::string lowercase(std::string_view s)
{
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string_view trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_tabs(std::string_view line)
{
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? line.npos : tab - start));
    if (tab == std::string_view::npos) {
      break;
    }
    start = tab + 1;
  }
  return fields;
}

bool is_number(std::string_view word)
{
  if (word.empty()) {
    return false;
  }
  bool seen_digit = false;
  bool seen_dot = false;
  for (char c : word) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      return false;
    }
  }
  return seen_digit && word.back() != '.';
}

}  // namespace

Lexicon Lexicon::parse(std::istream & in, std::string_view source_name)
{
  Lexicon lexicon;
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string & what) {
    throw Error(
      ErrorCode::InvalidResource,
      std::string(source_name) + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') {
      raw.pop_back();
    }
    const auto stripped = trim(raw);
    if (stripped.empty() || stripped.front() == '#') {
      continue;
    }
    const auto fields = split_tabs(raw);
    if (fields.size() != 3) {
      fail("expected 3 tab-separated fields (surface, lemma, pos), got " +
           std::to_string(fields.size()));
    }
    const std::string surface = lowercase(trim(fields[0]));
    const std::string lemma = lowercase(trim(fields[1]));
    const auto pos = pos_from_tag(trim(fields[2]));
    if (surface.empty() || lemma.empty()) {
      fail("empty surface or lemma");
    }
    if (!pos) {
      fail("unknown part-of-speech tag '" + std::string(trim(fields[2])) + "'");
    }
    if (lexicon.entries_.count(surface) != 0) {
      fail("duplicate surface form '" + surface + "'");
    }
    const auto known = lexicon.lemma_pos_.find(lemma);
    if (known != lexicon.lemma_pos_.end() && known->second != *pos) {
      fail("lemma '" + lemma + "' already registered with tag '" + tag_of(known->second) + "'");
    }
    lexicon.entries_.emplace(surface, LexiconEntry{lemma, *pos});
    lexicon.lemma_pos_.emplace(lemma, *pos);
  }
  for (const auto & d : demonstratives()) {
    const auto it = lexicon.lemma_pos_.find(d);
    if (it != lexicon.lemma_pos_.end() && it->second != PartOfSpeech::Demonstrative) {
      throw Error(
        ErrorCode::InvalidResource,
        std::string(source_name) + ": demonstrative '" + d + "' must carry tag 'r'");
    }
  }
  return lexicon;
}

Lexicon Lexicon::parse(std::string_view text, std::string_view source_name)
{
  std::istringstream in{std::string(text)};
  return parse(in, source_name);
}

Lexicon Lexicon::load(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::InvalidResource, "cannot open lexicon file '" + path + "'");
  }
  return parse(in, path);
}

std::optional<LexiconEntry> Lexicon::lookup(std::string_view surface) const
{
  if (const auto it = entries_.find(surface); it != entries_.end()) {
    return it->second;
  }
  if (is_number(surface)) {
    return LexiconEntry{std::string(surface), PartOfSpeech::Numeral};
  }
  return std::nullopt;
}

std::optional<PartOfSpeech> Lexicon::pos_of_lemma(std::string_view lemma) const
{
  if (const auto it = lemma_pos_.find(lemma); it != lemma_pos_.end()) {
    return it->second;
  }
  if (is_number(lemma)) {
    return PartOfSpeech::Numeral;
  }
  return std::nullopt;
}

bool Lexicon::is_demonstrative(std::string_view lemma) const
{
  return demonstratives().count(lemma) != 0;
}

bool Lexicon::is_noun(std::string_view lemma) const
{
  return pos_of_lemma(lemma) == PartOfSpeech::Noun;
}

const std::set<std::string, std::less<>> & Lexicon::demonstratives()
{
  static const std::set<std::string, std::less<>> set{"that", "this", "there", "here"};
  return set;
}

std::vector<Token> tokenize(std::string_view text, const Lexicon & lexicon)
{
  const std::string lowered = lowercase(trim(text));
  if (lowered.empty()) {
    throw Error(ErrorCode::EmptyCommand, "command is empty");
  }
  std::vector<Token> tokens;
  std::istringstream words(lowered);
  std::string word;
  while (words >> word) {
    while (!word.empty() && std::string_view(",.!?;:\"'").find(word.back()) != std::string_view::npos) {
      word.pop_back();
    }
    while (!word.empty() && (word.front() == '"' || word.front() == '\'')) {
      word.erase(word.begin());
    }
    if (word.empty()) {
      continue;
    }
    const auto entry = lexicon.lookup(word);
    if (!entry) {
      throw Error(ErrorCode::UnknownWord, word);
    }
    tokens.push_back(Token{word, entry->lemma, entry->pos, tokens.size()});
  }
  if (tokens.empty()) {
    throw Error(ErrorCode::EmptyCommand, "command has no words");
  }
  return tokens;
}

}  // namespace vgpn::lang
