#include "tssl/sequence_builder.hpp"

#include <algorithm>

#include "tssl/error.hpp"

namespace tssl {

namespace {

TagSet token_set(const FrameToken& t) {
  TagSet ts;
  ts.srl = t.srl;
  ts.pos = t.pos;
  ts.ner = t.ner;
  return ts;
}

bool is_terminal(const FrameToken& t) {
  return t.text == "." || t.text == "?" || t.text == "!";
}

bool valid_pronoun_text(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == ' ' ||
           c == '-' || c == '\'';
  });
}

std::vector<std::vector<std::size_t>> segment_range(
    const std::vector<FrameToken>& tokens, std::size_t begin, std::size_t end,
    const Lexicon& lex) {
  std::vector<std::string> texts;
  texts.reserve(tokens.size());
  for (const auto& t : tokens) texts.push_back(t.text);

  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> pending;  // unlabeled tokens before any unit
  std::size_t i = begin;
  while (i < end) {
    const FrameToken& tok = tokens[i];
    if (!tok.srl) {
      if (groups.empty())
        pending.push_back(i);
      else
        groups.back().push_back(i);
      ++i;
      continue;
    }
    std::size_t len = 1;
    if (is_verb_pos(tok.pos))
      len = std::min(lex.match_phrasal_verb(texts, i), end - i);
    std::vector<std::size_t> group = std::move(pending);
    pending.clear();
    for (std::size_t k = i; k < i + len; ++k) group.push_back(k);
    groups.push_back(std::move(group));
    i += len;
  }
  if (!pending.empty()) groups.push_back(std::move(pending));
  return groups;
}

}  // namespace

const TsTextEntry* TsTextMap::find(const TagSet& ts,
                                   const EquivalencePolicy& policy) const {
  for (const auto& e : entries)
    if (tag_sets_equal(e.tag_set, ts, policy)) return &e;
  return nullptr;
}

const TsTextEntry* TsTextMap::verb() const {
  for (const auto& e : entries)
    if (e.tag_set.is_verb()) return &e;
  return nullptr;
}

std::vector<std::vector<std::size_t>> segment_units(const SimpleSentence& s,
                                                    const Lexicon& lex) {
  return segment_range(s.tokens, 0, s.tokens.size(), lex);
}

TagSet merge_unit(const std::vector<FrameToken>& unit) {
  const FrameToken* verb = nullptr;
  const FrameToken* noun = nullptr;
  const FrameToken* last = nullptr;
  for (const auto& t : unit) {
    if (!t.srl) continue;
    if (t.is_verb() && !verb) verb = &t;
    if (is_noun_pos(t.pos)) noun = &t;
    last = &t;
  }
  if (verb) {
    TagSet ts = token_set(*verb);
    for (const auto& t : unit) {
      if (is_verb_pos(t.pos)) {
        ts.pos = t.pos;
        break;
      }
    }
    return ts;
  }
  if (noun) return token_set(*noun);
  if (last) return token_set(*last);
  return TagSet{};
}

TagSet merge_pair(const TagSet& left, const TagSet& right) {
  if (left == right) return left;
  TagSet out = left;
  if (right.pos) out.pos = right.pos;
  if (right.ner) out.ner = right.ner;
  return out;
}

namespace {

bool mergeable(const TagSet& a, const TagSet& b) {
  return a == b || (a.srl && a.srl == b.srl);
}

// Single left-to-right pass: a merged set keeps the shared label, so it can
// never become mergeable with the item before it.
void merge_groups(std::vector<TagSet>& sets,
                  std::vector<std::vector<std::size_t>>& groups) {
  std::vector<TagSet> out_sets;
  std::vector<std::vector<std::size_t>> out_groups;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!out_sets.empty() && mergeable(out_sets.back(), sets[i])) {
      out_sets.back() = merge_pair(out_sets.back(), sets[i]);
      auto& g = out_groups.back();
      g.insert(g.end(), groups[i].begin(), groups[i].end());
    } else {
      out_sets.push_back(sets[i]);
      out_groups.push_back(groups[i]);
    }
  }
  sets = std::move(out_sets);
  groups = std::move(out_groups);
}

[[noreturn]] void unmergeable(const SimpleSentence& s, const std::string& why) {
  throw Error(ErrorCode::kUnmergeableSentence,
              "cannot build \"" + s.text + "\": " + why);
}

}  // namespace

std::vector<TagSet> merge_consecutive(const std::vector<TagSet>& seq) {
  std::vector<TagSet> sets = seq;
  std::vector<std::vector<std::size_t>> groups(seq.size());
  merge_groups(sets, groups);
  return sets;
}

BuiltSequence build(const SimpleSentence& s, const Lexicon& lex,
                    SentenceKind kind) {
  BuiltSequence out;
  out.source = s;
  auto& tokens = out.source.tokens;
  while (!tokens.empty() && is_terminal(tokens.back())) tokens.pop_back();
  refresh_text(out.source);
  if (tokens.empty()) unmergeable(s, "no tokens");

  std::vector<std::string> texts;
  for (const auto& t : tokens) texts.push_back(t.text);
  const JoinedText joined = join_tokens(texts);

  std::vector<TagSet> sets;
  std::vector<std::vector<std::size_t>> groups;
  std::size_t start = 0;
  if (kind == SentenceKind::kInterrogative) {
    const std::size_t n = lex.match_pronoun(texts);
    if (n > 0) {
      // The wh-phrase runs on through the rest of the pronoun's argument
      // ("how many times").
      std::optional<std::string> label;
      for (std::size_t k = 0; k < n && !label; ++k) label = tokens[k].srl;
      std::size_t end = n;
      if (label && *label != "V")
        while (end < tokens.size() && tokens[end].srl == label) ++end;
      std::string phrase;
      for (std::size_t k = 0; k < end; ++k) {
        if (k) phrase += ' ';
        phrase += to_lower(texts[k]);
      }
      if (!valid_pronoun_text(phrase)) {
        end = n;
        phrase.clear();
        for (std::size_t k = 0; k < n; ++k) {
          if (k) phrase += ' ';
          phrase += to_lower(texts[k]);
        }
      }
      std::vector<std::size_t> g;
      for (std::size_t k = 0; k < end; ++k) g.push_back(k);
      groups.push_back(std::move(g));
      sets.push_back(TagSet::make_pronoun(phrase));
      start = end;
    }
  }

  for (auto& g : segment_range(tokens, start, tokens.size(), lex)) {
    std::vector<FrameToken> unit;
    for (auto k : g) unit.push_back(tokens[k]);
    sets.push_back(merge_unit(unit));
    groups.push_back(std::move(g));
  }
  merge_groups(sets, groups);

  out.sequence.kind = kind;
  out.sequence.items = sets;
  for (const auto& ts : sets)
    if (!ts.srl && !ts.pronoun) unmergeable(s, "unit without an SRL label");
  if (auto why = sequence_violation(out.sequence)) unmergeable(s, *why);
  if (std::none_of(sets.begin(), sets.end(),
                   [](const TagSet& ts) { return ts.is_verb(); }))
    unmergeable(s, "no V tag set");

  for (std::size_t p = 0; p < sets.size(); ++p) {
    auto g = groups[p];
    std::sort(g.begin(), g.end());
    std::size_t lo = 0;
    std::size_t hi = g.size();
    auto loose = [&](std::size_t k) {
      return !tokens[g[k]].srl && is_punctuation_pos(tokens[g[k]].pos);
    };
    while (lo < hi && loose(lo)) ++lo;
    while (hi > lo && loose(hi - 1)) --hi;
    if (lo == hi) {
      lo = 0;
      hi = g.size();
    }
    TsTextEntry e;
    e.position = p;
    e.tag_set = sets[p];
    e.char_span = {joined.spans[g[lo]].first, joined.spans[g[hi - 1]].second};
    e.text = joined.text.substr(e.char_span.first,
                                e.char_span.second - e.char_span.first);
    e.sentence_initial = g[lo] == 0;
    if (e.sentence_initial) {
      const FrameToken& first = tokens[0];
      e.proper_initial =
          first.pos == "NNP" || first.pos == "NNPS" || first.text == "I";
    }
    out.text_map.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace tssl
