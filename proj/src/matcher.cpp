#include "tssl/matcher.hpp"

#include <algorithm>

namespace tssl {

int SymbolTable::intern(const TagSet& ts) {
  auto [it, inserted] =
      ids_.try_emplace(canonical_key(ts, policy_), static_cast<int>(ids_.size()));
  return it->second;
}

int SymbolTable::lookup(const TagSet& ts) const {
  auto it = ids_.find(canonical_key(ts, policy_));
  return it == ids_.end() ? -1 : it->second;
}

std::vector<int> SymbolTable::intern_all(const TagSetSequence& seq) {
  std::vector<int> out;
  out.reserve(seq.size());
  for (const auto& ts : seq.items) out.push_back(intern(ts));
  return out;
}

std::vector<int> SymbolTable::lookup_all(const TagSetSequence& seq) const {
  std::vector<int> out;
  out.reserve(seq.size());
  for (const auto& ts : seq.items) out.push_back(lookup(ts));
  return out;
}

SuffixAutomaton::SuffixAutomaton(const std::vector<int>& text) {
  states_.reserve(2 * text.size() + 1);
  states_.push_back(State{});
  int last = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = text[i];
    const int cur = static_cast<int>(states_.size());
    states_.push_back(State{states_[last].len + 1, -1, i, {}});
    int p = last;
    while (p != -1 && !states_[p].next.count(c)) {
      states_[p].next[c] = cur;
      p = states_[p].link;
    }
    if (p == -1) {
      states_[cur].link = 0;
    } else {
      const int q = states_[p].next[c];
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        const int clone = static_cast<int>(states_.size());
        State copy = states_[q];
        copy.len = states_[p].len + 1;
        states_.push_back(std::move(copy));
        while (p != -1) {
          auto it = states_[p].next.find(c);
          if (it == states_[p].next.end() || it->second != q) break;
          it->second = clone;
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    last = cur;
  }
}

SuffixAutomaton::Match SuffixAutomaton::longest_common(
    const std::vector<int>& query) const {
  Match best;
  int v = 0;
  std::size_t l = 0;
  for (std::size_t i = 0; i < query.size(); ++i) {
    const int c = query[i];
    while (v != 0 && !states_[v].next.count(c)) {
      v = states_[v].link;
      l = states_[v].len;
    }
    auto it = states_[v].next.find(c);
    if (it != states_[v].next.end()) {
      v = it->second;
      ++l;
    }
    if (l > best.length) {
      best.length = l;
      best.query_start = i + 1 - l;
      best.text_start = states_[v].first_end + 1 - l;
    }
  }
  return best;
}

LcsResult lcs(const TagSetSequence& x, const TagSetSequence& xs,
              const EquivalencePolicy& policy) {
  SymbolTable table(policy);
  const SuffixAutomaton sa(table.intern_all(x));
  const auto m = sa.longest_common(table.lookup_all(xs));
  return {m.length, m.text_start, m.query_start};
}

std::string_view match_class_name(MatchClass c) {
  switch (c) {
    case MatchClass::kPerfect: return "perfect";
    case MatchClass::kSuccessful: return "successful";
    case MatchClass::kUnsuccessful: return "unsuccessful";
  }
  return "unsuccessful";
}

MatchClass classify(const TagSetSequence& z, const TagSetSequence& x,
                    const TagSetSequence& xs) {
  if (!z.empty() && z.size() == x.size() && z.size() == xs.size())
    return MatchClass::kPerfect;
  bool arg_before = false;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].is_core_arg()) arg_before = true;
    if (z[i].is_verb() && arg_before) {
      for (std::size_t k = i + 1; k < z.size(); ++k)
        if (z[k].is_core_arg()) return MatchClass::kSuccessful;
    }
  }
  return MatchClass::kUnsuccessful;
}

MatchIndex::MatchIndex(const TsspDb& db) : entries_(db.entries()) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const TsspEntry& e = entries_[i];
    auto it = std::find_if(
        patterns_.begin(), patterns_.end(),
        [&](const Pattern& p) { return p.x.items == e.x.items; });
    if (it != patterns_.end()) {
      it->entries.push_back(i);
      continue;
    }
    patterns_.push_back(
        Pattern{e.x, SuffixAutomaton(symbols_.intern_all(e.x)), {i}});
  }
}

std::vector<BestMatch> MatchIndex::best_match(const TagSetSequence& xs) const {
  const auto query = symbols_.lookup_all(xs);
  std::size_t best_len = 0;
  std::vector<std::pair<const Pattern*, SuffixAutomaton::Match>> hits;
  for (const auto& p : patterns_) {
    const auto m = p.automaton.longest_common(query);
    if (m.length == 0 || m.length < best_len) continue;
    if (m.length > best_len) {
      best_len = m.length;
      hits.clear();
    }
    hits.emplace_back(&p, m);
  }

  std::vector<BestMatch> out;
  for (const auto& [p, m] : hits) {
    TagSetSequence z;
    z.items.assign(xs.items.begin() + static_cast<std::ptrdiff_t>(m.query_start),
                   xs.items.begin() +
                       static_cast<std::ptrdiff_t>(m.query_start + m.length));
    const MatchClass cls = classify(z, p->x, xs);
    for (std::size_t i : p->entries) {
      const TsspEntry& e = entries_[i];
      BestMatch bm;
      bm.result = {e.id, z, m.text_start, m.query_start, cls};
      bm.entry = e;
      out.push_back(std::move(bm));
    }
  }
  std::sort(out.begin(), out.end(), [](const BestMatch& a, const BestMatch& b) {
    if (a.entry.x.size() != b.entry.x.size())
      return a.entry.x.size() < b.entry.x.size();
    return a.entry.id < b.entry.id;
  });
  return out;
}

}  // namespace tssl
