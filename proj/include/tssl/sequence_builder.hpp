#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tssl/lexicon.hpp"
#include "tssl/preprocess.hpp"
#include "tssl/tag_set.hpp"
#include "tssl/text_util.hpp"

namespace tssl {

struct TsTextEntry {
  std::size_t position = 0;
  TagSet tag_set;
  std::string text;
  CharSpan char_span{0, 0};  // into BuiltSequence::source.text
  // The entry starts with the sentence's first word; proper_initial tells
  // whether that word keeps its capital when moved.
  bool sentence_initial = false;
  bool proper_initial = false;
};

struct TsTextMap {
  std::vector<TsTextEntry> entries;

  // First entry whose tag set equals ts under the policy.
  const TsTextEntry* find(const TagSet& ts,
                          const EquivalencePolicy& policy) const;
  const TsTextEntry* verb() const;
};

struct BuiltSequence {
  TagSetSequence sequence;
  TsTextMap text_map;
  SimpleSentence source;
};

// Token index groups; each group is one basic unit.
std::vector<std::vector<std::size_t>> segment_units(const SimpleSentence& s,
                                                    const Lexicon& lex);

// Tag set for one basic unit. Unlabeled tokens do not contribute.
TagSet merge_unit(const std::vector<FrameToken>& unit);

// Merge of two neighbours that share an SRL label (or are identical).
TagSet merge_pair(const TagSet& left, const TagSet& right);

std::vector<TagSet> merge_consecutive(const std::vector<TagSet>& seq);

// Throws Error{kUnmergeableSentence} when the merged result breaks the
// sequence invariants or has no V.
BuiltSequence build(const SimpleSentence& s, const Lexicon& lex,
                    SentenceKind kind = SentenceKind::kDeclarative);

}  // namespace tssl
