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

#ifndef VGPN__LANG__LEXICON_HPP_
#define VGPN__LANG__LEXICON_HPP_

#include "vgpn/lang/token.hpp"

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vgpn::lang
{

struct LexiconEntry
{
  std::string lemma;
  PartOfSpeech pos;
};

/// Word table of the controlled language.
///
/// File format: one entry per line, `surface<TAB>lemma<TAB>pos`, where pos
/// is one of the single-letter tags. Blank lines and lines starting with
/// `#` are ignored. Digit strings ("90", "1.5") are numerals without needing
/// an entry. Loading reports the first malformed line with its number.
class Lexicon
{
public:
  static Lexicon parse(std::istream & in, std::string_view source_name = "<lexicon>");
  static Lexicon parse(std::string_view text, std::string_view source_name = "<lexicon>");
  static Lexicon load(const std::string & path);

  std::optional<LexiconEntry> lookup(std::string_view surface) const;

  /// Part of speech of a lemma, if any surface form maps to it.
  std::optional<PartOfSpeech> pos_of_lemma(std::string_view lemma) const;

  bool is_demonstrative(std::string_view lemma) const;
  bool is_noun(std::string_view lemma) const;

  /// The fixed demonstrative set {that, this, there, here}.
  static const std::set<std::string, std::less<>> & demonstratives();

  std::size_t size() const { return entries_.size(); }

private:
  std::map<std::string, LexiconEntry, std::less<>> entries_;
  std::map<std::string, PartOfSpeech, std::less<>> lemma_pos_;
};

/// Splits a command into tokens using the lexicon. Input is lowercased and
/// trailing sentence punctuation is stripped.
/// Throws Error(EmptyCommand) or Error(UnknownWord).
std::vector<Token> tokenize(std::string_view text, const Lexicon & lexicon);

}  // namespace vgpn::lang

#endif  // VGPN__LANG__LEXICON_HPP_
