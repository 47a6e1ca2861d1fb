#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tssl {

enum class Tense { kPast, kPresent };
enum class GrammaticalNumber { kSingular, kPlural };

// Static English resources. Loaded once from a directory of tab-separated
// tables and immutable afterwards.
//
// Table files (UTF-8, `key<TAB>value`, `#` comments):
//   contractions.tsv    he's -> he is, don't -> do not, e.g. -> for example
//   slangs.tsv          gonna -> going to
//   phrasal_verbs.tsv   one pattern per line, lemma form ("travel to")
//   irregular_verbs.tsv inflected form -> lemma
//   cc_words.tsv        words stripped before the subject
//   pronouns.tsv        interrogative pronouns, in preference order
class Lexicon {
 public:
  static Lexicon load(const std::filesystem::path& dir);

  // Directory baked in at build time (data/lexicon in the source tree).
  static const std::filesystem::path& default_dir();

  // Replaces whole-word contractions and slangs. The replacement's first
  // letter is upper-cased when the source token starts upper-case; all
  // other bytes are left untouched.
  std::string expand_contractions(std::string_view text) const;

  // Length of the longest phrasal-verb pattern starting at tokens[i]; the
  // first token is compared by lemma, particles literally (case-folded).
  // Returns 1 when nothing longer matches.
  std::size_t match_phrasal_verb(const std::vector<std::string>& tokens,
                                 std::size_t i) const;

  // "flew to" -> "fly to": lemmatizes the first word, keeps the particles.
  std::string lemma(std::string_view verb_phrase) const;

  static std::string conjugate_do(Tense tense, GrammaticalNumber number);

  bool is_cc_word(std::string_view word) const;
  bool is_auxiliary(std::string_view word) const;

  // Number of leading words (case-folded) forming the longest listed
  // interrogative pronoun; 0 if none.
  std::size_t match_pronoun(const std::vector<std::string>& words) const;

  const std::vector<std::string>& pronouns() const { return pronouns_; }
  const std::map<std::string, std::string>& irregular_verbs() const {
    return irregular_;
  }
  std::size_t phrasal_verb_count() const;

 private:
  std::string lemma_word(std::string_view word) const;

  // Keys sorted longest first so the longest entry wins.
  std::vector<std::pair<std::string, std::string>> replacements_;
  std::map<std::string, std::vector<std::vector<std::string>>> phrasal_;
  std::map<std::string, std::string> irregular_;
  std::set<std::string> cc_words_;
  std::vector<std::string> pronouns_;
};

std::string to_lower(std::string_view s);
std::vector<std::string> split_words(std::string_view s);

}  // namespace tssl
