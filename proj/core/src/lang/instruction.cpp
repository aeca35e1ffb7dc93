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

#include "vgpn/lang/instruction.hpp"

#include "vgpn/error.hpp"

namespace vgpn::lang
{

std::string Instruction::to_string() const
{
  std::string out = verb + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += args[i];
  }
  out += ")";
  return out;
}

Instruction instantiate(
  const InstructionTemplate & tmpl, const DependencyModel & model, const std::vector<Token> & tokens)
{
  const auto positions = marker_positions(model);
  auto lemma_at = [&](const std::string & marker) -> const std::string & {
    const auto it = positions.find(marker);
    if (it == positions.end()) {
      throw Error(ErrorCode::NoTemplate, "marker '" + marker + "' not present in this command");
    }
    return tokens.at(it->second).lemma;
  };

  Instruction instr;
  instr.verb = lemma_at(tmpl.verb_slot);
  if (const auto renamed = tmpl.verb_map.find(instr.verb); renamed != tmpl.verb_map.end()) {
    instr.verb = renamed->second;
  }
  for (const auto & slot : tmpl.arg_slots) {
    instr.args.push_back(lemma_at(slot));
  }
  return instr;
}

}  // namespace vgpn::lang
