#include "doctest.h"
#include "support.hpp"
#include "tssl/lexicon.hpp"

using namespace tssl;
using test::lex;

TEST_CASE("contractions and slang") {
  CHECK(lex().expand_contractions("He's gotta go") == "He is got to go");
  CHECK(lex().expand_contractions("I've, i.e., left") ==
        "I have, that is, left");
  CHECK(lex().expand_contractions("plain text") == "plain text");
  CHECK(lex().expand_contractions("They don't know") == "They do not know");
  // Not inside words.
  CHECK(lex().expand_contractions("Isn'tx") == "Isn'tx");
}

TEST_CASE("lemmas") {
  const std::pair<const char*, const char*> cases[] = {
      {"flew", "fly"},        {"traveled", "travel"}, {"walked", "walk"},
      {"married", "marry"},   {"closes", "close"},    {"raises", "raise"},
      {"won", "win"},         {"built", "build"},     {"lost", "lose"},
      {"played", "play"},     {"locks", "lock"},      {"opens", "open"},
      {"repaired", "repair"}, {"designed", "design"}, {"painted", "paint"},
      {"bought", "buy"},      {"sold", "sell"},       {"found", "find"},
      {"discovered", "discover"}, {"invented", "invent"}, {"went", "go"},
      {"moved", "move"},      {"joined", "join"},     {"visited", "visit"},
      {"signed", "sign"},     {"appointed", "appoint"}, {"finished", "finish"},
      {"rented", "rent"},     {"irrigate", "irrigate"}, {"teaches", "teach"},
      {"grows", "grow"},      {"owns", "own"},        {"published", "publish"},
      {"needed", "need"},     {"wanted", "want"},     {"is", "be"}};
  for (const auto& [form, lemma] : cases) {
    CAPTURE(form);
    CHECK(lex().lemma(form) == lemma);
  }
  CHECK(lex().lemma("flew to") == "fly to");
  CHECK(lex().lemma("Walked on") == "walk on");
}

TEST_CASE("phrasal verbs") {
  const std::vector<std::string> s1 = {"John", "flew", "to", "London"};
  CHECK(lex().match_phrasal_verb(s1, 1) == 2);
  const std::vector<std::string> s2 = {"Maria", "is",   "going", "to",
                                       "move",  "to",   "Chicago"};
  CHECK(lex().match_phrasal_verb(s2, 1) == 3);
  CHECK(lex().match_phrasal_verb(s2, 4) == 2);
  const std::vector<std::string> s3 = {"he", "ate", "bread"};
  CHECK(lex().match_phrasal_verb(s3, 1) == 1);
  CHECK(lex().match_phrasal_verb(s3, 3) == 0);
  const std::vector<std::string> s4 = {"is", "about", "to", "leave"};
  CHECK(lex().match_phrasal_verb(s4, 0) == 3);
  CHECK(lex().phrasal_verb_count() > 100);
}

TEST_CASE("helping verbs and word classes") {
  CHECK(Lexicon::conjugate_do(Tense::kPast, GrammaticalNumber::kSingular) ==
        "did");
  CHECK(Lexicon::conjugate_do(Tense::kPast, GrammaticalNumber::kPlural) ==
        "did");
  CHECK(Lexicon::conjugate_do(Tense::kPresent, GrammaticalNumber::kSingular) ==
        "does");
  CHECK(Lexicon::conjugate_do(Tense::kPresent, GrammaticalNumber::kPlural) ==
        "do");
  for (const char* w : {"will", "is", "Was", "has", "does", "can", "are"})
    CHECK(lex().is_auxiliary(w));
  for (const char* w : {"walked", "go", "the"}) CHECK_FALSE(lex().is_auxiliary(w));
  for (const char* w : {"and", "But", "so", "therefore", "however"})
    CHECK(lex().is_cc_word(w));
  CHECK_FALSE(lex().is_cc_word("John"));
}

TEST_CASE("interrogative pronouns") {
  CHECK(lex().pronouns().size() >= 6);
  CHECK(lex().match_pronoun({"Where", "did"}) == 1);
  CHECK(lex().match_pronoun({"How", "many", "books"}) == 2);
  CHECK(lex().match_pronoun({"John", "left"}) == 0);
  CHECK(lex().match_pronoun({}) == 0);
}

TEST_CASE("missing lexicon directory") {
  CHECK_THROWS(Lexicon::load("/nonexistent/lexicon"));
}
