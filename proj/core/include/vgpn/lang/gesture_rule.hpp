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

#ifndef VGPN__LANG__GESTURE_RULE_HPP_
#define VGPN__LANG__GESTURE_RULE_HPP_

#include "vgpn/lang/instruction.hpp"
#include "vgpn/lang/lexicon.hpp"
#include "vgpn/world/scene.hpp"
#include "vgpn/world/target.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace vgpn::lang
{

enum class GestureCase {
  NoDemonstrative,  // case (a): skip, nothing deictic in the instruction
  UniqueObject,     // case (b): skip, the description names a unique object
  Required,         // gesture needed
};

std::string_view to_string(GestureCase c);

struct GestureDecision
{
  bool required = false;
  GestureCase reason = GestureCase::NoDemonstrative;
  std::string detail;
};

/// Verbs whose argument is a place; only these can need a gesture.
bool is_spatial_verb(std::string_view verb);

/// Noun argument plus adjective arguments, classified by the lexicon.
/// nullopt when the instruction names no object.
std::optional<world::ObjectDescription> object_description(
  const Instruction & instr, const Lexicon & lexicon);

/// Decides whether pointing estimation must run for this instruction.
/// Non-spatial verbs and instructions without a demonstrative skip as case
/// (a); a description with exactly one match in the scene skips as case (b);
/// everything else requires the gesture.
GestureDecision requires_gesture(const Instruction & instr, const world::Scene & scene, const Lexicon & lexicon);

}  // namespace vgpn::lang

#endif  // VGPN__LANG__GESTURE_RULE_HPP_
