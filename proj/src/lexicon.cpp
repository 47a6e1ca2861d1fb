#include "tssl/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "tssl/error.hpp"

#ifndef TSSL_DEFAULT_LEXICON_DIR
#define TSSL_DEFAULT_LEXICON_DIR "data/lexicon"
#endif

namespace tssl {

namespace {

constexpr std::string_view kCurlyApostrophe = "\xE2\x80\x99";

struct TableRow {
  std::string key;
  std::string value;
};

std::vector<TableRow> read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::kIo, "cannot open lexicon table " + path.string());
  std::vector<TableRow> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    TableRow row;
    auto tab = line.find('\t');
    row.key = to_lower(line.substr(0, tab));
    if (tab != std::string::npos) row.value = line.substr(tab + 1);
    if (row.key.empty())
      throw Error(ErrorCode::kSchemaViolation,
                  path.string() + ":" + std::to_string(line_no) +
                      ": empty key");
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool has_vowel(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return is_vowel(c) || c == 'y';
  });
}

// Undo consonant doubling and restore a dropped final e.
std::string fix_stem(std::string stem) {
  const std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1]) &&
      std::string_view("lsz").find(stem[n - 1]) == std::string_view::npos) {
    stem.pop_back();
    return stem;
  }
  const char last = stem[n - 1];
  if (last == 'v' || last == 'c' || last == 'u') return stem + 'e';
  if (n >= 3 && last == 'l' &&
      std::string_view("bcdfgkpstz").find(stem[n - 2]) !=
          std::string_view::npos) {
    return stem + 'e';
  }
  return stem;
}

// Matches key (lower-case) against text at pos, case-insensitively; an
// apostrophe in the key also matches U+2019. Returns bytes consumed or 0.
std::size_t match_key(std::string_view text, std::size_t pos,
                      std::string_view key) {
  std::size_t t = pos;
  for (char k : key) {
    if (t >= text.size()) return 0;
    if (k == '\'' && text.substr(t, kCurlyApostrophe.size()) ==
                         kCurlyApostrophe) {
      t += kCurlyApostrophe.size();
      continue;
    }
    if (std::tolower(static_cast<unsigned char>(text[t])) != k) return 0;
    ++t;
  }
  return t - pos;
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

const std::filesystem::path& Lexicon::default_dir() {
  static const std::filesystem::path dir(TSSL_DEFAULT_LEXICON_DIR);
  return dir;
}

Lexicon Lexicon::load(const std::filesystem::path& dir) {
  Lexicon lex;
  for (const char* file : {"contractions.tsv", "slangs.tsv"}) {
    for (auto& row : read_table(dir / file)) {
      if (row.value.empty())
        throw Error(ErrorCode::kSchemaViolation,
                    std::string(file) + ": missing expansion for " + row.key);
      lex.replacements_.emplace_back(std::move(row.key), std::move(row.value));
    }
  }
  std::stable_sort(lex.replacements_.begin(), lex.replacements_.end(),
                   [](const auto& a, const auto& b) {
                     return a.first.size() > b.first.size();
                   });

  for (auto& row : read_table(dir / "phrasal_verbs.tsv")) {
    auto words = split_words(row.key);
    if (words.size() < 2)
      throw Error(ErrorCode::kSchemaViolation,
                  "phrasal verb needs at least two words: " + row.key);
    lex.phrasal_[words.front()].push_back(std::move(words));
  }
  for (auto& [head, patterns] : lex.phrasal_) {
    std::stable_sort(patterns.begin(), patterns.end(),
                     [](const auto& a, const auto& b) {
                       return a.size() > b.size();
                     });
  }

  for (auto& row : read_table(dir / "irregular_verbs.tsv")) {
    if (row.value.empty())
      throw Error(ErrorCode::kSchemaViolation,
                  "irregular verb without lemma: " + row.key);
    lex.irregular_[row.key] = to_lower(row.value);
  }
  for (auto& row : read_table(dir / "cc_words.tsv"))
    lex.cc_words_.insert(row.key);
  for (auto& row : read_table(dir / "pronouns.tsv"))
    lex.pronouns_.push_back(row.key);
  return lex;
}

std::string Lexicon::expand_contractions(std::string_view text) const {
  std::string out;
  out.reserve(text.size() + 16);
  std::size_t i = 0;
  while (i < text.size()) {
    const bool at_boundary =
        i == 0 || !is_word_char(static_cast<unsigned char>(text[i - 1]));
    bool replaced = false;
    if (at_boundary && is_word_char(static_cast<unsigned char>(text[i]))) {
      for (const auto& [key, value] : replacements_) {
        std::size_t len = match_key(text, i, key);
        if (len == 0) continue;
        std::size_t end = i + len;
        // Keys ending in '.' (e.g.) already close the word.
        if (key.back() != '.' && end < text.size() &&
            (is_word_char(static_cast<unsigned char>(text[end])) ||
             text[end] == '\''))
          continue;
        std::string repl = value;
        if (std::isupper(static_cast<unsigned char>(text[i])) && !repl.empty())
          repl[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(repl[0])));
        out += repl;
        i = end;
        replaced = true;
        break;
      }
    }
    if (!replaced) {
      // Copy the rest of the current word verbatim.
      std::size_t j = i + 1;
      if (is_word_char(static_cast<unsigned char>(text[i]))) {
        while (j < text.size() &&
               is_word_char(static_cast<unsigned char>(text[j])))
          ++j;
      }
      out.append(text.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

std::string Lexicon::lemma_word(std::string_view word) const {
  std::string w = to_lower(word);
  if (auto it = irregular_.find(w); it != irregular_.end()) return it->second;
  const std::size_t n = w.size();
  if (n > 4 && (ends_with(w, "ies") || ends_with(w, "ied")))
    return w.substr(0, n - 3) + "y";
  if (ends_with(w, "eed")) return w;
  if (n >= 5 && ends_with(w, "ed")) return fix_stem(w.substr(0, n - 2));
  if (n >= 5 && ends_with(w, "ing")) {
    std::string stem = w.substr(0, n - 3);
    if (has_vowel(stem)) return fix_stem(std::move(stem));
    return w;
  }
  if (n >= 4 && ends_with(w, "s") && !ends_with(w, "ss") &&
      !ends_with(w, "us") && !ends_with(w, "is")) {
    if (ends_with(w, "sses") || ends_with(w, "ches") || ends_with(w, "shes") ||
        ends_with(w, "xes") || ends_with(w, "zzes") || ends_with(w, "oes"))
      return w.substr(0, n - 2);
    return w.substr(0, n - 1);
  }
  return w;
}

std::string Lexicon::lemma(std::string_view verb_phrase) const {
  auto words = split_words(verb_phrase);
  if (words.empty()) return {};
  std::string out = lemma_word(words.front());
  for (std::size_t i = 1; i < words.size(); ++i) {
    out += ' ';
    out += words[i];
  }
  return out;
}

std::size_t Lexicon::match_phrasal_verb(const std::vector<std::string>& tokens,
                                        std::size_t i) const {
  if (i >= tokens.size()) return 0;
  auto it = phrasal_.find(lemma_word(tokens[i]));
  if (it == phrasal_.end()) return 1;
  for (const auto& pattern : it->second) {
    if (i + pattern.size() > tokens.size()) continue;
    bool ok = true;
    for (std::size_t k = 1; k < pattern.size() && ok; ++k)
      ok = to_lower(tokens[i + k]) == pattern[k];
    if (ok) return pattern.size();
  }
  return 1;
}

std::string Lexicon::conjugate_do(Tense tense, GrammaticalNumber number) {
  if (tense == Tense::kPast) return "did";
  return number == GrammaticalNumber::kSingular ? "does" : "do";
}

bool Lexicon::is_cc_word(std::string_view word) const {
  return cc_words_.count(to_lower(word)) > 0;
}

bool Lexicon::is_auxiliary(std::string_view word) const {
  static const std::set<std::string, std::less<>> kModals = {
      "will", "would", "shall", "should", "can",
      "could", "may",  "might", "must",   "cannot"};
  std::string w = to_lower(word);
  if (kModals.count(w)) return true;
  auto it = irregular_.find(w);
  const std::string lem = it != irregular_.end() ? it->second : w;
  return lem == "be" || lem == "have" || lem == "do";
}

std::size_t Lexicon::match_pronoun(const std::vector<std::string>& words) const {
  std::size_t best = 0;
  for (const auto& p : pronouns_) {
    auto parts = split_words(p);
    if (parts.size() > words.size() || parts.size() <= best) continue;
    bool ok = true;
    for (std::size_t k = 0; k < parts.size() && ok; ++k)
      ok = to_lower(words[k]) == parts[k];
    if (ok) best = parts.size();
  }
  return best;
}

std::size_t Lexicon::phrasal_verb_count() const {
  std::size_t n = 0;
  for (const auto& [head, patterns] : phrasal_) n += patterns.size();
  return n;
}

}  // namespace tssl
