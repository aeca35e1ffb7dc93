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

#include "vgpn/lang/token.hpp"

namespace vgpn::lang
{

char tag_of(PartOfSpeech pos)
{
  switch (pos) {
    case PartOfSpeech::Verb: return 'v';
    case PartOfSpeech::Noun: return 'n';
    case PartOfSpeech::Demonstrative: return 'r';
    case PartOfSpeech::Adjective: return 'a';
    case PartOfSpeech::Numeral: return 'm';
    case PartOfSpeech::Unit: return 'q';
    case PartOfSpeech::Preposition: return 'p';
    case PartOfSpeech::Direction: return 'd';
  }
  return '?';
}

std::optional<PartOfSpeech> pos_from_tag(std::string_view tag)
{
  if (tag.size() != 1) {
    return std::nullopt;
  }
  switch (tag.front()) {
    case 'v': return PartOfSpeech::Verb;
    case 'n': return PartOfSpeech::Noun;
    case 'r': return PartOfSpeech::Demonstrative;
    case 'a': return PartOfSpeech::Adjective;
    case 'm': return PartOfSpeech::Numeral;
    case 'q': return PartOfSpeech::Unit;
    case 'p': return PartOfSpeech::Preposition;
    case 'd': return PartOfSpeech::Direction;
    default: return std::nullopt;
  }
}

}  // namespace vgpn::lang
