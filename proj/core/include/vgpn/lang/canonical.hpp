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

#ifndef VGPN__LANG__CANONICAL_HPP_
#define VGPN__LANG__CANONICAL_HPP_

#include "vgpn/lang/grammar.hpp"

#include <cstddef>
#include <map>
#include <string>

namespace vgpn::lang
{

/// Deterministic text form of a dependency tree, e.g.
/// `v__HED__0 (n__VOB__0 (r__ATT__0, a__ATT__1))`.
///
/// Each node prints as `{pos}__{rel}__{k}`. Children follow in parentheses,
/// ordered by surface position and separated by ", ". The counter k numbers
/// the occurrences of a relation label in pre-order, so every marker in one
/// string is distinct.
struct CanonicalString
{
  std::string value;

  friend bool operator==(const CanonicalString &, const CanonicalString &) = default;
};

CanonicalString canonical_string(const DependencyModel & model);

/// Marker (`n__VOB__0`) to token index for the same traversal that
/// canonical_string uses.
std::map<std::string, std::size_t> marker_positions(const DependencyModel & model);

}  // namespace vgpn::lang

#endif  // VGPN__LANG__CANONICAL_HPP_
