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

#ifndef VGPN__LANG__TEMPLATES_HPP_
#define VGPN__LANG__TEMPLATES_HPP_

#include "vgpn/lang/canonical.hpp"

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vgpn::lang
{

struct InstructionTemplate
{
  CanonicalString pattern;
  std::string verb_slot;
  std::vector<std::string> arg_slots;
  /// Optional renaming of the verb lemma (e.g. goto -> move for `go forward`).
  std::map<std::string, std::string> verb_map;
  std::size_t source_line = 0;
};

/// Markers (`{pos}__{rel}__{k}`) occurring in a canonical pattern, in order.
std::vector<std::string> markers_in(std::string_view pattern);

/// Template registry keyed by canonical pattern.
///
/// File format: blocks opened by a `[template]` line, each followed by
/// `key = value` lines:
///
///     [template]
///     pattern   = v__HED__0 (n__VOB__0 (r__ATT__0))
///     verb_slot = v__HED__0
///     arg_slots = n__VOB__0, r__ATT__0
///     verb_map  = goto:move            # optional, comma separated
///
/// Every slot must occur in the pattern, the verb slot must be a `v` marker
/// and no two blocks may share a pattern (AmbiguousRegistry).
class TemplateRegistry
{
public:
  static TemplateRegistry parse(std::istream & in, std::string_view source_name = "<templates>");
  static TemplateRegistry parse(std::string_view text, std::string_view source_name = "<templates>");
  static TemplateRegistry load(const std::string & path);

  /// Throws Error(NoTemplate) when the string is not registered.
  const InstructionTemplate & match(const CanonicalString & cs) const;

  const std::vector<InstructionTemplate> & templates() const { return templates_; }

private:
  void add(InstructionTemplate tmpl, std::string_view source_name);

  std::vector<InstructionTemplate> templates_;
  std::map<std::string, std::size_t, std::less<>> by_pattern_;
};

inline const InstructionTemplate & match_template(
  const CanonicalString & cs, const TemplateRegistry & registry)
{
  return registry.match(cs);
}

}  // namespace vgpn::lang

#endif  // VGPN__LANG__TEMPLATES_HPP_
