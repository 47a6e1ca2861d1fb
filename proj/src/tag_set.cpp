#include "tssl/tag_set.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "tssl/error.hpp"

namespace tssl {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedTagSet: return "malformed_tag_set";
    case ErrorCode::kTaggerUnavailable: return "tagger_unavailable";
    case ErrorCode::kSchemaViolation: return "schema_violation";
    case ErrorCode::kUnmergeableSentence: return "unmergeable_sentence";
    case ErrorCode::kUnresolvableTagSet: return "unresolvable_tag_set";
    case ErrorCode::kEmptyAnswer: return "empty_answer";
    case ErrorCode::kCorruptDb: return "corrupt_db";
    case ErrorCode::kBadRequest: return "bad_request";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kIo: return "io_error";
  }
  return "unknown";
}

namespace {

constexpr std::array<std::string_view, 52> kPennTags = {
    "CC",  "CD",   "DT",  "EX",   "FW",  "IN",   "JJ",   "JJR", "JJS",
    "LS",  "MD",   "NN",  "NNS",  "NNP", "NNPS", "PDT",  "POS", "PRP",
    "PRP$", "RB",  "RBR", "RBS",  "RP",  "SYM",  "TO",   "UH",  "VB",
    "VBD", "VBG",  "VBN", "VBP",  "VBZ", "WDT",  "WP",   "WP$", "WRB",
    "#",   "$",    ".",   ",",    ":",   "(",    ")",    "``",  "''",
    "-LRB-", "-RRB-", "HYPH", "NFP", "ADD", "AFX", "XX"};

bool all_of_chars(std::string_view s, bool (*pred)(char)) {
  return !s.empty() && std::all_of(s.begin(), s.end(), pred);
}

bool upper_or_digit(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '-';
}

bool pronoun_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == ' ' ||
         c == '-' || c == '\'';
}

bool is_core_label(std::string_view s) {
  return s.size() == 4 && s.substr(0, 3) == "ARG" && s[3] >= '0' &&
         s[3] <= '5';
}

void render_slot(std::string& out, const std::optional<std::string>& slot) {
  if (slot) out += *slot;
}

[[noreturn]] void malformed(std::string_view s, std::string_view why) {
  throw Error(ErrorCode::kMalformedTagSet,
              "malformed tag set '" + std::string(s) + "': " +
                  std::string(why));
}

}  // namespace

TagSet TagSet::make(std::string srl, std::string pos, std::string ner) {
  TagSet ts;
  ts.srl = std::move(srl);
  if (!pos.empty()) ts.pos = std::move(pos);
  if (!ner.empty()) ts.ner = std::move(ner);
  return ts;
}

TagSet TagSet::make_pronoun(std::string pronoun) {
  TagSet ts;
  ts.pronoun = std::move(pronoun);
  return ts;
}

bool TagSet::is_core_arg() const { return srl && is_core_label(*srl); }

bool TagSet::is_modifier() const {
  return srl && !is_core_label(*srl) && *srl != "V";
}

bool is_valid_srl_label(std::string_view label) {
  if (label == "V" || is_core_label(label)) return true;
  // Continuation / reference arguments, e.g. C-ARG1, R-ARG0.
  if (label.size() > 2 && (label[0] == 'C' || label[0] == 'R') &&
      label[1] == '-') {
    return is_valid_srl_label(label.substr(2));
  }
  // ArgM subtypes are open-ended: TMP, LOC, MNR, DIS, ...
  if (label.size() < 2 || label.size() > 5 || label.substr(0, 3) == "ARG")
    return false;
  return std::all_of(label.begin(), label.end(),
                     [](char c) { return c >= 'A' && c <= 'Z'; });
}

bool is_valid_pos_label(std::string_view label) {
  return std::find(kPennTags.begin(), kPennTags.end(), label) !=
         kPennTags.end();
}

bool is_noun_pos(std::string_view pos) {
  return pos == "NN" || pos == "NNS" || pos == "NNP" || pos == "NNPS";
}

bool is_verb_pos(std::string_view pos) {
  return pos == "MD" || (pos.size() >= 2 && pos.substr(0, 2) == "VB");
}

bool is_punctuation_pos(std::string_view pos) {
  return pos == "." || pos == "," || pos == ":" || pos == "``" ||
         pos == "''" || pos == "(" || pos == ")" || pos == "-LRB-" ||
         pos == "-RRB-" || pos == "HYPH" || pos == "NFP" || pos == "#";
}

std::string_view canonical_pos(std::string_view pos,
                               const EquivalencePolicy& policy) {
  if (policy.noun_class && is_noun_pos(pos)) return "NN";
  if (policy.present_class && (pos == "VBP" || pos == "VBZ")) return "VBP";
  return pos;
}

std::string canonical_key(const TagSet& ts, const EquivalencePolicy& policy) {
  std::string key;
  key.reserve(24);
  render_slot(key, ts.srl);
  key += '/';
  if (ts.pos) key += canonical_pos(*ts.pos, policy);
  key += '/';
  render_slot(key, ts.ner);
  key += '/';
  render_slot(key, ts.pronoun);
  return key;
}

bool tag_sets_equal(const TagSet& a, const TagSet& b,
                    const EquivalencePolicy& policy) {
  if (a.srl != b.srl || a.ner != b.ner || a.pronoun != b.pronoun) return false;
  if (a.pos.has_value() != b.pos.has_value()) return false;
  if (!a.pos) return true;
  return canonical_pos(*a.pos, policy) == canonical_pos(*b.pos, policy);
}

std::string render_tag_set(const TagSet& ts) {
  std::string out = "[";
  render_slot(out, ts.srl);
  out += '/';
  render_slot(out, ts.pos);
  out += '/';
  render_slot(out, ts.ner);
  out += '/';
  render_slot(out, ts.pronoun);
  out += ']';
  return out;
}

TagSet parse_tag_set(std::string_view s) {
  if (s.size() < 5 || s.front() != '[' || s.back() != ']')
    malformed(s, "expected bracketed form");
  std::string_view body = s.substr(1, s.size() - 2);
  std::array<std::string_view, 4> slots;
  std::size_t slot = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == '/') {
      if (slot >= slots.size()) malformed(s, "too many slots");
      slots[slot++] = body.substr(start, i - start);
      start = i + 1;
    }
  }
  if (slot != slots.size()) malformed(s, "expected exactly four slots");

  TagSet ts;
  if (!slots[0].empty()) {
    if (!is_valid_srl_label(slots[0])) malformed(s, "unknown SRL label");
    ts.srl = std::string(slots[0]);
  }
  if (!slots[1].empty()) {
    if (!is_valid_pos_label(slots[1])) malformed(s, "unknown POS label");
    ts.pos = std::string(slots[1]);
  }
  if (!slots[2].empty()) {
    if (!all_of_chars(slots[2], upper_or_digit))
      malformed(s, "bad NER label");
    ts.ner = std::string(slots[2]);
  }
  if (!slots[3].empty()) {
    if (!all_of_chars(slots[3], pronoun_char)) malformed(s, "bad pronoun");
    ts.pronoun = std::string(slots[3]);
  }
  if (!ts.srl && !ts.pronoun) malformed(s, "needs an SRL tag or a pronoun");
  if (ts.pronoun && (ts.srl || ts.pos || ts.ner))
    malformed(s, "pronoun slot must stand alone");
  return ts;
}

std::string render_sequence(const TagSetSequence& seq) {
  std::string out;
  for (const auto& ts : seq.items) {
    if (!out.empty()) out += ' ';
    out += render_tag_set(ts);
  }
  return out;
}

std::vector<std::string> render_items(const TagSetSequence& seq) {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (const auto& ts : seq.items) out.push_back(render_tag_set(ts));
  return out;
}

TagSetSequence parse_sequence(const std::vector<std::string>& items,
                              SentenceKind kind) {
  TagSetSequence seq;
  seq.kind = kind;
  seq.items.reserve(items.size());
  for (const auto& s : items) seq.items.push_back(parse_tag_set(s));
  return seq;
}

std::optional<std::string> sequence_violation(const TagSetSequence& seq) {
  std::map<std::string, int> counts;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const TagSet& ts = seq[i];
    if (i > 0 && ts.srl && seq[i - 1].srl == ts.srl)
      return "consecutive tag sets share SRL label " + *ts.srl;
    if (ts.srl) ++counts[*ts.srl];
  }
  const int v_bound = seq.kind == SentenceKind::kInterrogative ? 2 : 1;
  for (const auto& [label, n] : counts) {
    if (label == "V") {
      if (n > v_bound) return "too many V tag sets (" + std::to_string(n) + ")";
    } else if (n > 1) {
      return "SRL label " + label + " appears " + std::to_string(n) + " times";
    }
  }
  return std::nullopt;
}

TagSetBag TagSetBag::from(const TagSetSequence& seq, EquivalencePolicy policy) {
  return from(seq.items, policy);
}

TagSetBag TagSetBag::from(const std::vector<TagSet>& items,
                          EquivalencePolicy policy) {
  TagSetBag bag(policy);
  for (const auto& ts : items) bag.insert(ts);
  return bag;
}

bool TagSetBag::contains(const TagSet& ts) const {
  return std::any_of(members_.begin(), members_.end(), [&](const TagSet& m) {
    return tag_sets_equal(m, ts, policy_);
  });
}

bool TagSetBag::insert(const TagSet& ts) {
  if (contains(ts)) return false;
  members_.push_back(ts);
  return true;
}

TagSetBag TagSetBag::set_union(const TagSetBag& other) const {
  TagSetBag out = *this;
  for (const auto& m : other.members_) out.insert(m);
  return out;
}

TagSetBag TagSetBag::set_intersection(const TagSetBag& other) const {
  TagSetBag out(policy_);
  for (const auto& m : members_)
    if (other.contains(m)) out.members_.push_back(m);
  return out;
}

TagSetBag TagSetBag::set_difference(const TagSetBag& other) const {
  TagSetBag out(policy_);
  for (const auto& m : members_)
    if (!other.contains(m)) out.members_.push_back(m);
  return out;
}

bool TagSetBag::same_members(const TagSetBag& other) const {
  if (size() != other.size()) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](const TagSet& m) { return other.contains(m); });
}

}  // namespace tssl
