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

#include "vgpn/lang/canonical.hpp"

#include <array>

namespace vgpn::lang
{
namespace
{

struct Walker
{
  const DependencyModel & model;
  std::array<int, 5> counters{};
  std::map<std::string, std::size_t> markers;

  std::string visit(std::size_t token_index)
  {
    const DependencyNode * node = model.find(token_index);
    const int k = counters[static_cast<std::size_t>(node->relation)]++;
    std::string marker;
    marker += tag_of(node->pos);
    marker += "__";
    marker += to_string(node->relation);
    marker += "__";
    marker += std::to_string(k);
    markers.emplace(marker, token_index);

    std::string out = marker;
    const auto children = model.children_of(token_index);
    if (!children.empty()) {
      out += " (";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i > 0) {
          out += ", ";
        }
        out += visit(children[i]);
      }
      out += ")";
    }
    return out;
  }
};

}  // namespace

CanonicalString canonical_string(const DependencyModel & model)
{
  model.validate();
  Walker walker{model, {}, {}};
  return CanonicalString{walker.visit(model.root_index())};
}

std::map<std::string, std::size_t> marker_positions(const DependencyModel & model)
{
  model.validate();
  Walker walker{model, {}, {}};
  walker.visit(model.root_index());
  return std::move(walker.markers);
}

}  // namespace vgpn::lang
