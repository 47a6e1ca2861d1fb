#pragma once

// Brute-force references the fast implementations are checked against.

#include <cstddef>
#include <vector>

#include "tssl/tag_set.hpp"

namespace oracle {

struct Lcs {
  std::size_t length = 0;
  std::size_t xs_start = 0;  // leftmost among the longest
};

// Quadratic table of common-suffix lengths.
inline Lcs lcs_dp(const tssl::TagSetSequence& x, const tssl::TagSetSequence& xs,
                  const tssl::EquivalencePolicy& p) {
  const std::size_t n = x.size(), m = xs.size();
  std::vector<std::vector<std::size_t>> t(n + 1,
                                          std::vector<std::size_t>(m + 1, 0));
  Lcs best;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      if (tssl::tag_sets_equal(x[i - 1], xs[j - 1], p)) {
        t[i][j] = t[i - 1][j - 1] + 1;
        const std::size_t start = j - t[i][j];
        if (t[i][j] > best.length ||
            (t[i][j] == best.length && best.length > 0 &&
             start < best.xs_start)) {
          best.length = t[i][j];
          best.xs_start = start;
        }
      }
  return best;
}

inline bool equal_run(const tssl::TagSetSequence& a, std::size_t ia,
                      const tssl::TagSetSequence& b, std::size_t ib,
                      std::size_t len, const tssl::EquivalencePolicy& p) {
  if (ia + len > a.size() || ib + len > b.size()) return false;
  for (std::size_t k = 0; k < len; ++k)
    if (!tssl::tag_sets_equal(a[ia + k], b[ib + k], p)) return false;
  return true;
}

// Y' - ((X' & Y') - Xs') | (Xs' - Z'), evaluated on membership bits over a
// small universe: bit i set means universe element i is present.
inline unsigned question_bag_bits(unsigned x, unsigned y, unsigned xs,
                                  unsigned z) {
  const unsigned removed = (x & y) & ~xs;
  return (y & ~removed) | (xs & ~z);
}

}  // namespace oracle
