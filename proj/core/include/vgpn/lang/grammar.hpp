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

#ifndef VGPN__LANG__GRAMMAR_HPP_
#define VGPN__LANG__GRAMMAR_HPP_

#include "vgpn/lang/token.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vgpn::lang
{

enum class Relation { HED, VOB, ATT, ADV, CMP };

std::string_view to_string(Relation relation);
std::optional<Relation> relation_from_string(std::string_view s);

struct DependencyNode
{
  std::size_t token_index;
  PartOfSpeech pos;
  Relation relation;
  /// Index of the head token, or nullopt for the root.
  std::optional<std::size_t> parent;
};

/// Dependency tree over the non-dropped tokens of a command, ordered by
/// token index.
struct DependencyModel
{
  std::vector<DependencyNode> nodes;

  const DependencyNode * find(std::size_t token_index) const;
  std::size_t root_index() const;
  /// Token indices of the direct children of `token_index`, in surface order.
  std::vector<std::size_t> children_of(std::size_t token_index) const;

  /// Checks the tree invariants: exactly one HED root, every parent exists,
  /// no cycles. Throws Error(UngrammaticalCommand) on violation.
  void validate() const;
};

/// How a dependent finds its head.
enum class HeadRule {
  Root,      // the sentence head (HED); verbs only
  Verb,      // the main verb
  NextNoun,  // the next noun, skipping adjectives and demonstratives
  NextUnit,  // the immediately following unit word
  Drop,      // function word, removed from the tree
};

struct GrammarRule
{
  PartOfSpeech pos;
  std::optional<Relation> relation;  // nullopt only for Drop
  HeadRule head;
};

/// Ordered attachment rules. For each token the rules for its part of speech
/// are tried top to bottom and the first applicable one wins.
///
/// File format, one rule per line: `pos relation head`, whitespace separated,
/// where head is root | verb | next-noun | next-unit | drop and relation is
/// `-` for drop rules. `#` starts a comment.
class Grammar
{
public:
  static Grammar parse(std::istream & in, std::string_view source_name = "<grammar>");
  static Grammar parse(std::string_view text, std::string_view source_name = "<grammar>");
  static Grammar load(const std::string & path);

  const std::vector<GrammarRule> & rules() const { return rules_; }

private:
  std::vector<GrammarRule> rules_;
};

/// Builds the dependency tree for a token sequence.
/// Throws Error(NoVerb), Error(MultipleVerbs) or Error(UngrammaticalCommand).
DependencyModel parse_dependencies(const std::vector<Token> & tokens, const Grammar & grammar);

}  // namespace vgpn::lang

#endif  // VGPN__LANG__GRAMMAR_HPP_
