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

#include "vgpn/error.hpp"
#include "vgpn/lang/language.hpp"
#include "vgpn/lang/lexicon.hpp"

#include <gtest/gtest.h>

namespace vgpn::lang
{
namespace
{

ErrorCode code_of(const std::function<void()> & f)
{
  try {
    f();
  } catch (const Error & e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::EmptyInput;
}

TEST(Lexicon, ParsesEntriesAndComments)
{
  const auto lex = Lexicon::parse("# words\ngo\tgoto\tv\n\nchair\tchair\tn\nchairs\tchair\tn\nthat\tthat\tr\n");
  EXPECT_EQ(lex.size(), 4u);
  ASSERT_TRUE(lex.lookup("chairs"));
  EXPECT_EQ(lex.lookup("chairs")->lemma, "chair");
  EXPECT_EQ(lex.pos_of_lemma("goto"), PartOfSpeech::Verb);
  EXPECT_TRUE(lex.is_demonstrative("that"));
  EXPECT_TRUE(lex.is_noun("chair"));
  EXPECT_FALSE(lex.is_noun("that"));
}

TEST(Lexicon, DigitStringsAreNumerals)
{
  const auto lex = Lexicon::parse("");
  for (const char * n : {"90", "1.5", "0", "360"}) {
    const auto e = lex.lookup(n);
    ASSERT_TRUE(e) << n;
    EXPECT_EQ(e->pos, PartOfSpeech::Numeral);
    EXPECT_EQ(e->lemma, n);
  }
  EXPECT_FALSE(lex.lookup("1.2.3"));
  EXPECT_FALSE(lex.lookup("."));
}

TEST(Lexicon, RejectsMalformedLinesWithLineNumber)
{
  try {
    Lexicon::parse("go\tgoto\tv\nchair\tn\n", "words.tsv");
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidResource);
    EXPECT_NE(std::string(e.what()).find("words.tsv:2"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { Lexicon::parse("go\tgoto\tx\n"); }), ErrorCode::InvalidResource);
  EXPECT_EQ(code_of([] { Lexicon::parse("go\tgoto\tv\ngo\tgoto\tv\n"); }), ErrorCode::InvalidResource);
  EXPECT_EQ(code_of([] { Lexicon::parse("go\tgoto\tv\ngoto\tgoto\tn\n"); }), ErrorCode::InvalidResource);
  EXPECT_EQ(code_of([] { Lexicon::parse("that\tthat\tn\n"); }), ErrorCode::InvalidResource);
  EXPECT_EQ(code_of([] { Lexicon::load("/nonexistent/lexicon.tsv"); }), ErrorCode::InvalidResource);
}

TEST(Tokenize, LowercasesAndStripsPunctuation)
{
  const auto & lex = Language::builtin().lexicon();
  const auto tokens = tokenize("Go to THAT chair!", lex);
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[0].surface, "go");
  EXPECT_EQ(tokens[0].lemma, "goto");
  EXPECT_EQ(tokens[2].pos, PartOfSpeech::Demonstrative);
  EXPECT_EQ(tokens[3].surface, "chair");
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    EXPECT_EQ(tokens[i].index, i);
  }
}

TEST(Tokenize, ErrorsNameTheWord)
{
  const auto & lex = Language::builtin().lexicon();
  EXPECT_EQ(code_of([&] { tokenize("", lex); }), ErrorCode::EmptyCommand);
  EXPECT_EQ(code_of([&] { tokenize("  ?! ", lex); }), ErrorCode::EmptyCommand);
  try {
    tokenize("go to the kitchen", lex);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownWord);
    EXPECT_NE(std::string(e.what()).find("kitchen"), std::string::npos);
  }
}

TEST(Tokenize, ShippedLexiconTagsDemonstratives)
{
  const auto & lex = Language::builtin().lexicon();
  for (const auto & d : Lexicon::demonstratives()) {
    EXPECT_TRUE(lex.is_demonstrative(d)) << d;
    EXPECT_EQ(lex.lookup(d)->pos, PartOfSpeech::Demonstrative);
  }
}

}  // namespace
}  // namespace vgpn::lang
