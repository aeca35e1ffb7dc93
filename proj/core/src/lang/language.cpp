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

#include "vgpn/lang/language.hpp"

#include "vgpn/lang/builtin_data.hpp"

#include <sstream>

namespace vgpn::lang
{

Language::Language(Lexicon lexicon, Grammar grammar, TemplateRegistry registry)
: lexicon_(std::move(lexicon)), grammar_(std::move(grammar)), registry_(std::move(registry))
{
}

const Language & Language::builtin()
{
  static const Language language(
    Lexicon::parse(builtin_lexicon_text(), "lexicon.tsv"),
    Grammar::parse(builtin_grammar_text(), "grammar.txt"),
    TemplateRegistry::parse(builtin_templates_text(), "templates.txt"));
  return language;
}

Language Language::load_directory(const std::string & dir)
{
  return Language(
    Lexicon::load(dir + "/lexicon.tsv"), Grammar::load(dir + "/grammar.txt"),
    TemplateRegistry::load(dir + "/templates.txt"));
}

Understanding Language::understand(std::string_view text) const
{
  Understanding u;
  u.tokens = tokenize(text, lexicon_);
  u.model = parse_dependencies(u.tokens, grammar_);
  u.canonical = canonical_string(u.model);
  const auto & tmpl = registry_.match(u.canonical);
  u.instruction = instantiate(tmpl, u.model, u.tokens);
  return u;
}

std::string describe(const Understanding & u)
{
  std::ostringstream out;
  out << "tokens:";
  for (const auto & t : u.tokens) {
    out << ' ' << t.surface << '/' << tag_of(t.pos);
  }
  out << "\ntree:\n";
  for (const auto & node : u.model.nodes) {
    const auto & t = u.tokens[node.token_index];
    out << "  " << t.lemma << ':' << to_string(node.relation) << " <- "
        << (node.parent ? u.tokens[*node.parent].lemma : std::string("ROOT")) << '\n';
  }
  out << "canonical: " << u.canonical.value << '\n';
  out << "instruction: " << u.instruction.to_string() << '\n';
  return out.str();
}

}  // namespace vgpn::lang
