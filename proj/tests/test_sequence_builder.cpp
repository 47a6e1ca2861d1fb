#include "doctest.h"
#include "support.hpp"
#include "tssl/error.hpp"
#include "tssl/sequence_builder.hpp"
#include "tssl/tssp_db.hpp"

using namespace tssl;
using test::lex;
using test::tagger;

namespace {

BuiltSequence decl(const std::string& text, std::size_t which = 0) {
  const auto a = analyze(text, tagger(), lex());
  REQUIRE(a.extraction.sentences.size() > which);
  return build(a.extraction.sentences[which], lex());
}

BuiltSequence question(const std::string& text) {
  const auto ex =
      extract_frames(tagger().tag(text), 0, ExtractMode::kInterrogative);
  REQUIRE(ex.sentences.size() == 1);
  return build(ex.sentences[0], lex(), SentenceKind::kInterrogative);
}

std::vector<std::string> texts(const BuiltSequence& b) {
  std::vector<std::string> out;
  for (const auto& e : b.text_map.entries) out.push_back(e.text);
  return out;
}

FrameToken tok(const std::string& text, const std::string& pos,
               const std::string& ner, const std::string& srl) {
  FrameToken t;
  t.text = text;
  t.pos = pos;
  if (!ner.empty()) t.ner = ner;
  if (!srl.empty()) t.srl = srl;
  return t;
}

}  // namespace

TEST_CASE("Lincoln sentence merges to three tag sets") {
  const auto b =
      decl("Abraham Lincoln was the 16th president of the United States");
  CHECK(render_sequence(b.sequence) ==
        "[ARG1/NNP/PER/] [V/VBZ//] [ARG2/NNP/LOC/]");
  CHECK(texts(b) == std::vector<std::string>{
                        "Abraham Lincoln", "was",
                        "the 16th president of the United States"});
}

TEST_CASE("phrasal verb absorbs its particle") {
  const auto b = decl("John traveled to Boston last week.");
  CHECK(render_sequence(b.sequence) ==
        "[ARG0/NNP/PER/] [V/VBD//] [ARG1/NNP/LOC/] [TMP/NN//]");
  CHECK(texts(b) ==
        std::vector<std::string>{"John", "traveled to", "Boston", "last week"});
  CHECK(b.text_map.verb()->text == "traveled to");
  CHECK(b.text_map.entries[0].sentence_initial);
  CHECK(b.text_map.entries[0].proper_initial);
  CHECK_FALSE(b.text_map.entries[2].sentence_initial);
}

TEST_CASE("auxiliary chains merge into one verb") {
  const auto b = decl("Maria is going to move to Chicago next year.");
  CHECK(render_sequence(b.sequence) ==
        "[ARG0/NNP/PER/] [V/VB//] [ARG1/NNP/LOC/] [TMP/NN//]");
  CHECK(b.text_map.verb()->text == "is going to move to");
}

TEST_CASE("text map spans point into the source text") {
  const auto b = decl(
      "However, on September 12, 1933, physicist Leo Szilard invented the "
      "neutron-induced nuclear chain reaction.");
  CHECK(render_sequence(b.sequence) ==
        "[TMP/CD/DATE/] [ARG0/NNP/PER/] [V/VBD//] [ARG1/NN//]");
  CHECK(texts(b) == std::vector<std::string>{
                        "on September 12, 1933", "physicist Leo Szilard",
                        "invented",
                        "the neutron-induced nuclear chain reaction"});
  for (const auto& e : b.text_map.entries) {
    CHECK(b.source.text.substr(e.char_span.first,
                               e.char_span.second - e.char_span.first) ==
          e.text);
  }
  CHECK(b.text_map.entries[0].sentence_initial);
  CHECK_FALSE(b.text_map.entries[0].proper_initial);
}

TEST_CASE("lower-case sentence start is not proper") {
  const auto b = decl("My sister bought a new car.");
  CHECK(b.text_map.entries[0].text == "My sister");
  CHECK(b.text_map.entries[0].sentence_initial);
  CHECK_FALSE(b.text_map.entries[0].proper_initial);
  CHECK(b.text_map.find(parse_tag_set("[ARG1/NNS//]"),
                        EquivalencePolicy::matcher())
            ->text == "a new car");
  CHECK_FALSE(b.text_map.find(parse_tag_set("[ARG1/NNS//]"),
                              EquivalencePolicy::literal()));
}

TEST_CASE("interrogatives") {
  CHECK(render_sequence(question("Where did John travel to last week?").sequence) ==
        "[///where] [V/VBD//] [ARG0/NNP/PER/] [V/VB//] [TMP/NN//]");
  CHECK(render_sequence(
            question("How many books does the library own?").sequence) ==
        "[///how many books] [V/VBZ//] [ARG0/NN//] [V/VB//]");
  CHECK(render_sequence(question("Who invented the phonograph?").sequence) ==
        "[///who] [V/VBD//] [ARG1/NN//]");
  CHECK(question("Who invented the phonograph?").sequence.kind ==
        SentenceKind::kInterrogative);
}

TEST_CASE("merge_unit") {
  // Verb unit keeps V and takes the first verb POS.
  CHECK(render_tag_set(merge_unit({tok("is", "VBZ", "", "V"),
                                   tok("going", "VBG", "", "V"),
                                   tok("to", "TO", "", "V")})) == "[V/VBZ//]");
  // Rightmost noun wins.
  CHECK(render_tag_set(merge_unit({tok("the", "DT", "", "ARG1"),
                                   tok("Smith", "NNP", "PER", "ARG1"),
                                   tok("family", "NN", "", "ARG1")})) ==
        "[ARG1/NN//]");
  // No noun: rightmost labeled token.
  CHECK(render_tag_set(merge_unit({tok("very", "RB", "", "MNR"),
                                   tok("quickly", "RB", "", "MNR"),
                                   tok(",", ",", "", "")})) == "[MNR/RB//]");
  CHECK(merge_unit({tok(",", ",", "", "")}) == TagSet{});
}

TEST_CASE("merge_pair and merge_consecutive") {
  CHECK(render_tag_set(merge_pair(parse_tag_set("[ARG2/DT//]"),
                                  parse_tag_set("[ARG2/NNP/LOC/]"))) ==
        "[ARG2/NNP/LOC/]");
  CHECK(render_tag_set(merge_pair(parse_tag_set("[ARG1/NN/PER/]"),
                                  parse_tag_set("[ARG1/JJ//]"))) ==
        "[ARG1/JJ/PER/]");
  const auto in = test::seq({"[ARG1/NNP/PER/]", "[ARG1/NNP/PER/]", "[V/VBZ//]",
                             "[ARG2/NN//]", "[ARG2/IN//]", "[ARG2/NNP/LOC/]"});
  const auto out = merge_consecutive(in.items);
  TagSetSequence s;
  s.items = out;
  CHECK(render_sequence(s) == "[ARG1/NNP/PER/] [V/VBZ//] [ARG2/NNP/LOC/]");
  CHECK(merge_consecutive(out) == out);
}

TEST_CASE("unmergeable sentences") {
  auto code = [](const SimpleSentence& s, SentenceKind k) {
    try {
      build(s, lex(), k);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  // ArgN reappearing after the verb.
  CHECK(code(test::simple("John/NNP/PER/ARG0 saw/VBD//V Mary/NNP/PER/ARG1 "
                          "and/CC// he/PRP//ARG0"),
             SentenceKind::kDeclarative) == ErrorCode::kUnmergeableSentence);
  // No verb at all.
  CHECK(code(test::simple("John/NNP/PER/ARG0 ././/"),
             SentenceKind::kDeclarative) == ErrorCode::kUnmergeableSentence);
  // Only terminal punctuation.
  CHECK(code(test::simple("././/"), SentenceKind::kDeclarative) ==
        ErrorCode::kUnmergeableSentence);
  // Three verb groups in a question.
  CHECK(code(test::simple("Why/WRB//CAU did/VBD//V he/PRP//ARG0 say/VB//V "
                          "it/PRP//ARG1 was/VBD//V"),
             SentenceKind::kInterrogative) == ErrorCode::kUnmergeableSentence);
}

TEST_CASE("every seed pair builds") {
  for (const auto& p : load_seed_pairs(test::kSeed)) {
    CAPTURE(p.declarative);
    const auto ex = extract_frames(tagger().tag(p.interrogative), 0,
                                   ExtractMode::kInterrogative);
    REQUIRE_FALSE(ex.sentences.empty());
    const auto analysis = analyze(p.declarative, tagger(), lex());
    REQUIRE_FALSE(analysis.extraction.sentences.empty());
  }
}
