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

#ifndef VGPN__LANG__TOKEN_HPP_
#define VGPN__LANG__TOKEN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace vgpn::lang
{

/// Closed tag set of the command language. The single-letter tags are the
/// ones that appear in canonical strings (`v__HED__0`, `r__ATT__1`, ...).
enum class PartOfSpeech {
  Verb,           // v
  Noun,           // n
  Demonstrative,  // r (demonstrative or pronoun)
  Adjective,      // a
  Numeral,        // m
  Unit,           // q (unit / quantifier)
  Preposition,    // p (function words, dropped from the tree)
  Direction,      // d (directional adverb)
};

char tag_of(PartOfSpeech pos);
std::optional<PartOfSpeech> pos_from_tag(std::string_view tag);

struct Token
{
  std::string surface;
  std::string lemma;
  PartOfSpeech pos;
  std::size_t index;
};

}  // namespace vgpn::lang

#endif  // VGPN__LANG__TOKEN_HPP_
