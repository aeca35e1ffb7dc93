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

#ifndef VGPN__LANG__INSTRUCTION_HPP_
#define VGPN__LANG__INSTRUCTION_HPP_

#include "vgpn/lang/grammar.hpp"
#include "vgpn/lang/templates.hpp"
#include "vgpn/lang/token.hpp"

#include <string>
#include <vector>

namespace vgpn::lang
{

/// Verb plus ordered lemma arguments, e.g. `goto(chair, that)`.
struct Instruction
{
  std::string verb;
  std::vector<std::string> args;

  /// `verb(arg, arg)`; an instruction with no args prints as `verb()`.
  std::string to_string() const;

  friend bool operator==(const Instruction &, const Instruction &) = default;
};

/// Replaces the template's slot markers with the lemmas at those tree
/// positions. The template must have been matched from this model.
Instruction instantiate(
  const InstructionTemplate & tmpl, const DependencyModel & model, const std::vector<Token> & tokens);

}  // namespace vgpn::lang

#endif  // VGPN__LANG__INSTRUCTION_HPP_
