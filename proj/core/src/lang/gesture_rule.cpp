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

#include "vgpn/lang/gesture_rule.hpp"

#include <algorithm>

namespace vgpn::lang
{

std::string_view to_string(GestureCase c)
{
  switch (c) {
    case GestureCase::NoDemonstrative: return "no-demonstrative";
    case GestureCase::UniqueObject: return "unique-object";
    case GestureCase::Required: return "gesture-required";
  }
  return "?";
}

bool is_spatial_verb(std::string_view verb)
{
  return verb == "goto";
}

std::optional<world::ObjectDescription> object_description(
  const Instruction & instr, const Lexicon & lexicon)
{
  std::optional<world::ObjectDescription> out;
  for (const auto & arg : instr.args) {
    if (lexicon.pos_of_lemma(arg) == PartOfSpeech::Noun) {
      out = world::ObjectDescription{arg, {}};
      break;
    }
  }
  if (out) {
    for (const auto & arg : instr.args) {
      if (lexicon.pos_of_lemma(arg) == PartOfSpeech::Adjective) {
        out->properties.insert(arg);
      }
    }
  }
  return out;
}

GestureDecision requires_gesture(const Instruction & instr, const world::Scene & scene, const Lexicon & lexicon)
{
  if (!is_spatial_verb(instr.verb)) {
    return {false, GestureCase::NoDemonstrative, "'" + instr.verb + "' is not a spatial verb"};
  }
  const bool deictic = std::any_of(instr.args.begin(), instr.args.end(), [&](const std::string & a) {
    return lexicon.is_demonstrative(a);
  });
  if (!deictic) {
    return {false, GestureCase::NoDemonstrative, "no demonstrative pronoun"};
  }
  if (const auto description = object_description(instr, lexicon)) {
    const auto matches = world::match_objects(scene, description->category, description->properties);
    if (matches.size() == 1) {
      return {false, GestureCase::UniqueObject, "the only matching " + description->category + " is '" + matches.front()->id + "'"};
    }
    return {
      true, GestureCase::Required,
      std::to_string(matches.size()) + " objects match '" + description->category + "'"};
  }
  return {true, GestureCase::Required, "demonstrative without an object description"};
}

}  // namespace vgpn::lang
