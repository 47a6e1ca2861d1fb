#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tssl/tag_set.hpp"
#include "tssl/tssp_db.hpp"

namespace tssl {

// Interns canonical tag-set keys as small integers.
class SymbolTable {
 public:
  explicit SymbolTable(EquivalencePolicy policy = EquivalencePolicy::matcher())
      : policy_(policy) {}

  int intern(const TagSet& ts);
  // -1 for a tag set never interned.
  int lookup(const TagSet& ts) const;
  std::vector<int> intern_all(const TagSetSequence& seq);
  std::vector<int> lookup_all(const TagSetSequence& seq) const;

  const EquivalencePolicy& policy() const { return policy_; }

 private:
  EquivalencePolicy policy_;
  std::unordered_map<std::string, int> ids_;
};

// Suffix automaton of one symbol string. Walking another string through it
// yields their longest common substring in time linear in both.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(const std::vector<int>& text);

  struct Match {
    std::size_t length = 0;
    std::size_t text_start = 0;   // in the automaton's own text
    std::size_t query_start = 0;  // in the walked string
  };

  // Longest common substring; among equals the leftmost in query wins.
  Match longest_common(const std::vector<int>& query) const;

 private:
  struct State {
    std::size_t len = 0;
    int link = -1;
    std::size_t first_end = 0;  // end index of first occurrence
    std::map<int, int> next;
  };
  std::vector<State> states_;
};

struct LcsResult {
  std::size_t length = 0;
  std::size_t x_start = 0;
  std::size_t xs_start = 0;
};

LcsResult lcs(const TagSetSequence& x, const TagSetSequence& xs,
              const EquivalencePolicy& policy = EquivalencePolicy::matcher());

enum class MatchClass { kUnsuccessful, kSuccessful, kPerfect };

std::string_view match_class_name(MatchClass c);

// Perfect iff z = x = xs; Successful iff z holds an ArgN before a V and
// another after it.
MatchClass classify(const TagSetSequence& z, const TagSetSequence& x,
                    const TagSetSequence& xs);

struct MatchResult {
  std::int64_t entry_id = 0;
  TagSetSequence z;  // taken from the xs side
  std::size_t x_start = 0;
  std::size_t xs_start = 0;
  MatchClass match_class = MatchClass::kUnsuccessful;
};

struct BestMatch {
  MatchResult result;
  TsspEntry entry;
};

// Read-only matching structure over one DB state: one automaton per
// distinct X.
class MatchIndex {
 public:
  MatchIndex() = default;
  explicit MatchIndex(const TsspDb& db);

  // All entries reaching the longest LCS, by (|X|, id). Empty when the DB
  // is empty or nothing overlaps at all.
  std::vector<BestMatch> best_match(const TagSetSequence& xs) const;

 private:
  struct Pattern {
    TagSetSequence x;
    SuffixAutomaton automaton;
    std::vector<std::size_t> entries;  // indices into entries_
  };
  std::vector<TsspEntry> entries_;
  std::vector<Pattern> patterns_;
  SymbolTable symbols_;
};

}  // namespace tssl
