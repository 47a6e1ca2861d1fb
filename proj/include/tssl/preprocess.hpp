#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tssl/lexicon.hpp"
#include "tssl/tagger.hpp"

namespace tssl {

// One token as seen through a single predicate frame.
struct FrameToken {
  std::string text;
  std::string pos;
  std::optional<std::string> ner;
  std::optional<std::string> srl;  // label in this frame
  std::size_t source_index = 0;    // position in the tagged sentence

  bool is_core_arg() const;
  bool is_verb() const { return srl && *srl == "V"; }
};

struct SimpleSentence {
  std::vector<FrameToken> tokens;
  std::size_t sentence_id = 0;
  std::size_t frame_index = 0;
  std::string text;  // surface string rebuilt from tokens
};

enum class DiscardReason { kEmptyFrame, kMissingSubject, kMissingObject };

std::string_view discard_reason_name(DiscardReason reason);

struct DiscardedFrame {
  std::size_t frame_index = 0;
  DiscardReason reason = DiscardReason::kEmptyFrame;
};

struct Extraction {
  std::vector<SimpleSentence> sentences;
  std::vector<DiscardedFrame> discarded;
};

enum class ExtractMode {
  kDeclarative,    // frame span only; subject/object filter applied
  kInterrogative,  // every token up to the frame's last label; no filter
};

// Contraction/slang expansion followed by whitespace collapsing.
std::string normalize(std::string_view text, const Lexicon& lex);

Extraction extract_frames(const TaggedSentence& ts, std::size_t sentence_id,
                          ExtractMode mode = ExtractMode::kDeclarative);

std::vector<SimpleSentence> extract_simple_sentences(const TaggedSentence& ts,
                                                     std::size_t sentence_id = 0);

// ArgN before the verb group and ArgN after it.
bool has_subject_and_object(const SimpleSentence& s);

// Removes CC-tagged or CC-listed words ahead of the subject, plus any
// punctuation left dangling at the front.
SimpleSentence strip_leading_cc(const SimpleSentence& s, const Lexicon& lex);

// Recomputes s.text from its tokens.
void refresh_text(SimpleSentence& s);

// Full front half of the pipeline for one input sentence: normalize, tag,
// extract and strip.
struct Analysis {
  std::string normalized;
  TaggedSentence tagged;
  Extraction extraction;
};

Analysis analyze(std::string_view text, Tagger& tagger, const Lexicon& lex,
                 std::size_t sentence_id = 0);
Analysis analyze_tagged(TaggedSentence tagged, const Lexicon& lex,
                        std::size_t sentence_id = 0);

}  // namespace tssl
