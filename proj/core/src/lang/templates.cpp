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

#include "vgpn/lang/templates.hpp"

#include "vgpn/error.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

namespace vgpn::lang
{
namespace
{

std::string trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_commas(std::string_view s)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    auto piece = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (!piece.empty()) {
      out.push_back(std::move(piece));
    }
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

const std::regex & marker_regex()
{
  static const std::regex re("[vnramqpd]__(HED|VOB|ATT|ADV|CMP)__[0-9]+");
  return re;
}

bool balanced(std::string_view s)
{
  int depth = 0;
  for (char c : s) {
    if (c == '(') {
      ++depth;
    } else if (c == ')' && --depth < 0) {
      return false;
    }
  }
  return depth == 0;
}

}  // namespace

std::vector<std::string> markers_in(std::string_view pattern)
{
  std::vector<std::string> out;
  const std::string text(pattern);
  for (auto it = std::sregex_iterator(text.begin(), text.end(), marker_regex());
       it != std::sregex_iterator(); ++it) {
    out.push_back(it->str());
  }
  return out;
}

TemplateRegistry TemplateRegistry::parse(std::istream & in, std::string_view source_name)
{
  TemplateRegistry registry;
  std::optional<InstructionTemplate> current;
  std::map<std::string, bool> seen_keys;
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string & what) {
    throw Error(
      ErrorCode::InvalidResource,
      std::string(source_name) + ":" + std::to_string(line_no) + ": " + what);
  };
  auto finish = [&]() {
    if (!current) {
      return;
    }
    for (const char * key : {"pattern", "verb_slot", "arg_slots"}) {
      if (!seen_keys[key]) {
        line_no = current->source_line;
        fail(std::string("template is missing '") + key + "'");
      }
    }
    registry.add(std::move(*current), source_name);
    current.reset();
    seen_keys.clear();
  };

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    const std::string line = trim(raw);
    if (line.empty()) {
      continue;
    }
    if (line == "[template]") {
      finish();
      current = InstructionTemplate{};
      current->source_line = line_no;
      continue;
    }
    if (!current) {
      fail("expected '[template]' before key-value lines");
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail("expected 'key = value'");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (seen_keys[key]) {
      fail("duplicate key '" + key + "'");
    }
    seen_keys[key] = true;
    if (key == "pattern") {
      if (value.empty() || !balanced(value)) {
        fail("pattern is empty or has unbalanced parentheses");
      }
      const auto markers = markers_in(value);
      if (markers.empty()) {
        fail("pattern contains no markers");
      }
      if (std::set<std::string>(markers.begin(), markers.end()).size() != markers.size()) {
        fail("pattern repeats a marker");
      }
      current->pattern = CanonicalString{value};
    } else if (key == "verb_slot") {
      current->verb_slot = value;
    } else if (key == "arg_slots") {
      current->arg_slots = split_commas(value);
    } else if (key == "verb_map") {
      for (const auto & pair : split_commas(value)) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == pair.size()) {
          fail("verb_map entries look like 'lemma:verb'");
        }
        current->verb_map[trim(pair.substr(0, colon))] = trim(pair.substr(colon + 1));
      }
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  finish();
  return registry;
}

void TemplateRegistry::add(InstructionTemplate tmpl, std::string_view source_name)
{
  auto fail = [&](ErrorCode code, const std::string & what) {
    throw Error(code, std::string(source_name) + ":" + std::to_string(tmpl.source_line) + ": " + what);
  };
  const auto markers = markers_in(tmpl.pattern.value);
  auto in_pattern = [&](const std::string & m) {
    return std::find(markers.begin(), markers.end(), m) != markers.end();
  };
  if (!in_pattern(tmpl.verb_slot)) {
    fail(ErrorCode::InvalidResource, "verb_slot '" + tmpl.verb_slot + "' does not occur in the pattern");
  }
  if (tmpl.verb_slot.front() != 'v') {
    fail(ErrorCode::InvalidResource, "verb_slot must be a verb marker");
  }
  for (const auto & slot : tmpl.arg_slots) {
    if (!in_pattern(slot)) {
      fail(ErrorCode::InvalidResource, "arg slot '" + slot + "' does not occur in the pattern");
    }
  }
  if (by_pattern_.count(tmpl.pattern.value) != 0) {
    const auto & other = templates_[by_pattern_.at(tmpl.pattern.value)];
    fail(
      ErrorCode::AmbiguousRegistry,
      "pattern '" + tmpl.pattern.value + "' already registered at line " +
        std::to_string(other.source_line));
  }
  by_pattern_.emplace(tmpl.pattern.value, templates_.size());
  templates_.push_back(std::move(tmpl));
}

TemplateRegistry TemplateRegistry::parse(std::string_view text, std::string_view source_name)
{
  std::istringstream in{std::string(text)};
  return parse(in, source_name);
}

TemplateRegistry TemplateRegistry::load(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::InvalidResource, "cannot open template file '" + path + "'");
  }
  return parse(in, path);
}

const InstructionTemplate & TemplateRegistry::match(const CanonicalString & cs) const
{
  const auto it = by_pattern_.find(cs.value);
  if (it == by_pattern_.end()) {
    throw Error(ErrorCode::NoTemplate, "no template for '" + cs.value + "'");
  }
  return templates_[it->second];
}

}  // namespace vgpn::lang
