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

#ifndef VGPN__LANG__LANGUAGE_HPP_
#define VGPN__LANG__LANGUAGE_HPP_

#include "vgpn/lang/canonical.hpp"
#include "vgpn/lang/grammar.hpp"
#include "vgpn/lang/instruction.hpp"
#include "vgpn/lang/lexicon.hpp"
#include "vgpn/lang/templates.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace vgpn::lang
{

/// Everything produced while understanding one command.
struct Understanding
{
  std::vector<Token> tokens;
  DependencyModel model;
  CanonicalString canonical;
  Instruction instruction;
};

/// Lexicon, grammar and template registry loaded together. Immutable after
/// construction and safe to share between threads.
class Language
{
public:
  Language(Lexicon lexicon, Grammar grammar, TemplateRegistry registry);

  /// The lexicon, grammar and registry shipped with the library.
  static const Language & builtin();

  /// Loads `lexicon.tsv`, `grammar.txt` and `templates.txt` from a directory.
  static Language load_directory(const std::string & dir);

  /// tokenize -> parse_dependencies -> canonical_string -> match -> instantiate.
  /// Throws the first stage's Error.
  Understanding understand(std::string_view text) const;

  const Lexicon & lexicon() const { return lexicon_; }
  const Grammar & grammar() const { return grammar_; }
  const TemplateRegistry & registry() const { return registry_; }

private:
  Lexicon lexicon_;
  Grammar grammar_;
  TemplateRegistry registry_;
};

/// Multi-line dump of tokens, tree, canonical string and instruction.
std::string describe(const Understanding & u);

}  // namespace vgpn::lang

#endif  // VGPN__LANG__LANGUAGE_HPP_
