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

#include "vgpn/lang/grammar.hpp"

#include "vgpn/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace vgpn::lang
{

std::string_view to_string(Relation relation)
{
  switch (relation) {
    case Relation::HED: return "HED";
    case Relation::VOB: return "VOB";
    case Relation::ATT: return "ATT";
    case Relation::ADV: return "ADV";
    case Relation::CMP: return "CMP";
  }
  return "?";
}

std::optional<Relation> relation_from_string(std::string_view s)
{
  if (s == "HED") return Relation::HED;
  if (s == "VOB") return Relation::VOB;
  if (s == "ATT") return Relation::ATT;
  if (s == "ADV") return Relation::ADV;
  if (s == "CMP") return Relation::CMP;
  return std::nullopt;
}

const DependencyNode * DependencyModel::find(std::size_t token_index) const
{
  for (const auto & node : nodes) {
    if (node.token_index == token_index) {
      return &node;
    }
  }
  return nullptr;
}

std::size_t DependencyModel::root_index() const
{
  for (const auto & node : nodes) {
    if (!node.parent) {
      return node.token_index;
    }
  }
  throw Error(ErrorCode::UngrammaticalCommand, "dependency model has no root");
}

std::vector<std::size_t> DependencyModel::children_of(std::size_t token_index) const
{
  std::vector<std::size_t> out;
  for (const auto & node : nodes) {
    if (node.parent == token_index) {
      out.push_back(node.token_index);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void DependencyModel::validate() const
{
  auto fail = [](const std::string & what) {
    throw Error(ErrorCode::UngrammaticalCommand, "invalid dependency model: " + what);
  };
  std::size_t roots = 0;
  std::set<std::size_t> seen;
  for (const auto & node : nodes) {
    if (!seen.insert(node.token_index).second) {
      fail("token " + std::to_string(node.token_index) + " appears twice");
    }
    if (!node.parent) {
      ++roots;
      if (node.relation != Relation::HED) {
        fail("root must carry HED");
      }
    } else if (node.relation == Relation::HED) {
      fail("HED node must attach to ROOT");
    }
  }
  if (roots != 1) {
    fail("expected exactly one root, found " + std::to_string(roots));
  }
  for (const auto & node : nodes) {
    if (node.parent && seen.count(*node.parent) == 0) {
      fail("token " + std::to_string(node.token_index) + " has a missing head");
    }
    // Walk to the root; more steps than nodes means a cycle.
    const DependencyNode * cur = &node;
    std::size_t steps = 0;
    while (cur->parent) {
      cur = find(*cur->parent);
      if (++steps > nodes.size()) {
        fail("cycle through token " + std::to_string(node.token_index));
      }
    }
  }
}

Grammar Grammar::parse(std::istream & in, std::string_view source_name)
{
  Grammar grammar;
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string & what) {
    throw Error(
      ErrorCode::InvalidResource,
      std::string(source_name) + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream fields(raw);
    std::string pos_s, rel_s, head_s, extra;
    if (!(fields >> pos_s)) {
      continue;
    }
    if (!(fields >> rel_s >> head_s) || (fields >> extra)) {
      fail("expected 'pos relation head'");
    }
    const auto pos = pos_from_tag(pos_s);
    if (!pos) {
      fail("unknown part-of-speech tag '" + pos_s + "'");
    }
    GrammarRule rule{*pos, std::nullopt, HeadRule::Drop};
    if (head_s == "root") {
      rule.head = HeadRule::Root;
    } else if (head_s == "verb") {
      rule.head = HeadRule::Verb;
    } else if (head_s == "next-noun") {
      rule.head = HeadRule::NextNoun;
    } else if (head_s == "next-unit") {
      rule.head = HeadRule::NextUnit;
    } else if (head_s == "drop") {
      rule.head = HeadRule::Drop;
    } else {
      fail("unknown head rule '" + head_s + "'");
    }
    if (rule.head == HeadRule::Drop) {
      if (rel_s != "-") {
        fail("drop rules take '-' as relation");
      }
    } else {
      rule.relation = relation_from_string(rel_s);
      if (!rule.relation) {
        fail("unknown relation '" + rel_s + "'");
      }
      if ((rule.head == HeadRule::Root) != (*rule.relation == Relation::HED)) {
        fail("HED is reserved for the root rule");
      }
      if (rule.head == HeadRule::Root && *pos != PartOfSpeech::Verb) {
        fail("only verbs can head a command");
      }
    }
    grammar.rules_.push_back(rule);
  }
  const bool has_root = std::any_of(grammar.rules_.begin(), grammar.rules_.end(), [](const auto & r) {
    return r.head == HeadRule::Root;
  });
  if (!has_root) {
    throw Error(ErrorCode::InvalidResource, std::string(source_name) + ": no root rule for verbs");
  }
  return grammar;
}

Grammar Grammar::parse(std::string_view text, std::string_view source_name)
{
  std::istringstream in{std::string(text)};
  return parse(in, source_name);
}

Grammar Grammar::load(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::InvalidResource, "cannot open grammar file '" + path + "'");
  }
  return parse(in, path);
}

DependencyModel parse_dependencies(const std::vector<Token> & tokens, const Grammar & grammar)
{
  if (tokens.empty()) {
    throw Error(ErrorCode::EmptyCommand, "no tokens");
  }
  std::optional<std::size_t> verb;
  for (const auto & token : tokens) {
    if (token.pos == PartOfSpeech::Verb) {
      if (verb) {
        throw Error(
          ErrorCode::MultipleVerbs,
          "'" + tokens[*verb].surface + "' and '" + token.surface + "'");
      }
      verb = token.index;
    }
  }
  if (!verb) {
    throw Error(ErrorCode::NoVerb, "command has no verb");
  }

  auto next_noun = [&](std::size_t from) -> std::optional<std::size_t> {
    for (std::size_t j = from + 1; j < tokens.size(); ++j) {
      const auto pos = tokens[j].pos;
      if (pos == PartOfSpeech::Noun) {
        return j;
      }
      if (pos != PartOfSpeech::Adjective && pos != PartOfSpeech::Demonstrative) {
        return std::nullopt;
      }
    }
    return std::nullopt;
  };

  DependencyModel model;
  for (const auto & token : tokens) {
    bool attached = false;
    bool dropped = false;
    for (const auto & rule : grammar.rules()) {
      if (rule.pos != token.pos) {
        continue;
      }
      std::optional<std::size_t> head;
      bool is_root = false;
      switch (rule.head) {
        case HeadRule::Drop:
          dropped = true;
          break;
        case HeadRule::Root:
          is_root = true;
          break;
        case HeadRule::Verb:
          head = verb;
          break;
        case HeadRule::NextNoun:
          head = next_noun(token.index);
          break;
        case HeadRule::NextUnit:
          if (token.index + 1 < tokens.size() && tokens[token.index + 1].pos == PartOfSpeech::Unit) {
            head = token.index + 1;
          }
          break;
      }
      if (dropped) {
        break;
      }
      if (is_root || head) {
        model.nodes.push_back(DependencyNode{token.index, token.pos, *rule.relation, head});
        attached = true;
        break;
      }
    }
    if (!attached && !dropped) {
      throw Error(
        ErrorCode::UngrammaticalCommand,
        "no rule attaches '" + token.surface + "' (" + tag_of(token.pos) + ")");
    }
  }
  // Heads must be tokens that stayed in the tree.
  for (const auto & node : model.nodes) {
    if (node.parent && model.find(*node.parent) == nullptr) {
      throw Error(
        ErrorCode::UngrammaticalCommand,
        "'" + tokens[node.token_index].surface + "' attaches to a dropped word");
    }
  }
  model.validate();
  return model;
}

}  // namespace vgpn::lang
