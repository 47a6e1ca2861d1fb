#pragma once

// Shared fixtures for the test binaries.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tssl/lexicon.hpp"
#include "tssl/preprocess.hpp"
#include "tssl/tag_set.hpp"
#include "tssl/tagger.hpp"
#include "tssl/text_util.hpp"

namespace test {

inline const std::filesystem::path kTags = TSSL_FIXTURE_DIR "/tags.jsonl";
inline const std::filesystem::path kCorpus100 =
    TSSL_FIXTURE_DIR "/corpus100.jsonl";
inline const std::filesystem::path kSeed = TSSL_SEED_FILE;
inline const std::string kBridge = TSSL_BRIDGE_EXE;

inline const tssl::Lexicon& lex() {
  static const tssl::Lexicon l = tssl::Lexicon::load(tssl::Lexicon::default_dir());
  return l;
}

inline tssl::FixtureTagger& tagger() {
  static auto t = tssl::FixtureTagger::from_file(kTags);
  return *t;
}

// "word/POS/NER/SRL" tokens, '|' between per-frame SRL labels, like the
// annotation file.
inline tssl::TaggedSentence parse_compact(const std::string& line) {
  tssl::TaggedSentence ts;
  std::istringstream in(line);
  std::string tok;
  std::vector<std::string> words;
  while (in >> tok) {
    std::vector<std::string> f;
    std::size_t end = tok.size();
    for (int k = 0; k < 3; ++k) {
      const auto slash = tok.rfind('/', end - 1);
      f.insert(f.begin(), tok.substr(slash + 1, end - slash - 1));
      end = slash;
    }
    tssl::TaggedToken t;
    t.text = tok.substr(0, end);
    t.pos = f[0];
    if (!f[1].empty()) t.ner = f[1];
    std::string srl = f[2];
    std::size_t start = 0;
    while (true) {
      const auto bar = srl.find('|', start);
      const std::string label = srl.substr(start, bar - start);
      t.srl_by_frame.push_back(label.empty() ? std::nullopt
                                             : std::optional<std::string>(label));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    ts.frame_count = std::max(ts.frame_count, t.srl_by_frame.size());
    words.push_back(t.text);
    ts.tokens.push_back(std::move(t));
  }
  for (auto& t : ts.tokens) t.srl_by_frame.resize(ts.frame_count);
  ts.source_text = tssl::join_tokens(words).text;
  return ts;
}

// Single-frame simple sentence straight from compact notation; no filtering.
inline tssl::SimpleSentence simple(const std::string& line) {
  const auto ts = parse_compact(line);
  tssl::SimpleSentence s;
  for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
    const auto& t = ts.tokens[i];
    s.tokens.push_back({t.text, t.pos, t.ner, t.srl_by_frame[0], i});
  }
  tssl::refresh_text(s);
  return s;
}

inline tssl::TagSetSequence seq(const std::vector<std::string>& items,
                                tssl::SentenceKind kind =
                                    tssl::SentenceKind::kDeclarative) {
  return tssl::parse_sequence(items, kind);
}

// Fresh directory under the build tree's temp area, removed on scope exit.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("tssl-test-" + std::to_string(rd()) + "-" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace test
