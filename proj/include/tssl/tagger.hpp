#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace tssl {

struct TaggedToken {
  std::string text;
  std::string pos;
  std::optional<std::string> ner;
  std::vector<std::optional<std::string>> srl_by_frame;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

struct TaggedSentence {
  std::vector<TaggedToken> tokens;
  std::size_t frame_count = 0;
  std::string source_text;

  friend bool operator==(const TaggedSentence&,
                         const TaggedSentence&) = default;
};

// The tokens labeled in one predicate frame.
struct Frame {
  std::size_t frame_index = 0;
  std::vector<std::pair<std::size_t, std::string>> token_span_labels;
};

std::vector<Frame> frames_of(const TaggedSentence& ts);

// Maps "ARGM-TMP" -> "TMP", "B-ARG0"/"I-ARG0" -> "ARG0", "O" -> nullopt.
std::optional<std::string> normalize_srl_label(std::string_view label);

// Throws Error{kSchemaViolation} describing the first problem found.
void validate(const TaggedSentence& ts);

// Wire format: {"text": ..., "tokens": [{"t", "pos", "ner", "srl"}], "frames": N}
nlohmann::ordered_json to_wire(const TaggedSentence& ts);
TaggedSentence from_wire(const nlohmann::json& record);

std::vector<TaggedSentence> load_fixture_corpus(const std::filesystem::path& path);
void save_fixture_corpus(const std::filesystem::path& path,
                         const std::vector<TaggedSentence>& sentences);

// Boundary to the external SRL/POS/NER annotators.
class Tagger {
 public:
  virtual ~Tagger() = default;
  // Throws Error{kTaggerUnavailable} or Error{kSchemaViolation}.
  virtual TaggedSentence tag(std::string_view text) = 0;
};

// Deterministic tagger answering from a pre-annotated corpus.
class FixtureTagger : public Tagger {
 public:
  explicit FixtureTagger(std::vector<TaggedSentence> corpus);
  static std::unique_ptr<FixtureTagger> from_file(
      const std::filesystem::path& path);

  TaggedSentence tag(std::string_view text) override;

  void add(TaggedSentence ts);
  std::size_t size() const { return corpus_.size(); }
  const std::vector<TaggedSentence>& corpus() const { return corpus_; }

 private:
  std::vector<TaggedSentence> corpus_;
  std::unordered_map<std::string, std::size_t> by_text_;
  std::unordered_map<std::string, std::size_t> by_loose_text_;
};

// Talks to a bridge process over stdin/stdout, one line per request.
class ProcessTagger : public Tagger {
 public:
  explicit ProcessTagger(std::string command);
  ~ProcessTagger() override;
  ProcessTagger(const ProcessTagger&) = delete;
  ProcessTagger& operator=(const ProcessTagger&) = delete;

  TaggedSentence tag(std::string_view text) override;

 private:
  void start();
  void stop();
  bool read_line(std::string& line);

  std::string command_;
  std::mutex mu_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

// POSTs {"text": ...} to <base_url>/tag and expects one wire record back.
class HttpTagger : public Tagger {
 public:
  explicit HttpTagger(std::string base_url);
  TaggedSentence tag(std::string_view text) override;

 private:
  std::string base_url_;
  std::mutex mu_;
};

// "fixture:FILE", "external:http://HOST:PORT" or "external:exec:COMMAND".
std::unique_ptr<Tagger> make_tagger(std::string_view spec);

}  // namespace tssl
