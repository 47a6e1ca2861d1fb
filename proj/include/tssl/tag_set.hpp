#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tssl {

// A four-slot tag set [srl/pos/ner/pronoun] attached to one basic unit.
//
// Either an SRL-bearing set (srl present, pronoun absent) or a pure
// interrogative-pronoun slot such as [///where].
struct TagSet {
  std::optional<std::string> srl;
  std::optional<std::string> pos;
  std::optional<std::string> ner;
  std::optional<std::string> pronoun;

  static TagSet make(std::string srl, std::string pos = {},
                     std::string ner = {});
  static TagSet make_pronoun(std::string pronoun);

  bool is_pronoun() const { return pronoun.has_value(); }
  bool is_verb() const { return srl && *srl == "V"; }
  bool is_core_arg() const;  // ARG0..ARG5
  bool is_modifier() const;  // any ArgM subtype

  // Literal equality over all four slots.
  friend bool operator==(const TagSet&, const TagSet&) = default;
};

// POS equivalence classes applied when comparing tag sets. Literal policy
// compares every slot verbatim.
struct EquivalencePolicy {
  bool noun_class = true;     // NN, NNP, NNS, NNPS
  bool present_class = true;  // VBP, VBZ

  static EquivalencePolicy matcher() { return {true, true}; }
  static EquivalencePolicy literal() { return {false, false}; }
};

enum class SentenceKind { kDeclarative, kInterrogative };

struct TagSetSequence {
  std::vector<TagSet> items;
  SentenceKind kind = SentenceKind::kDeclarative;

  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }
  const TagSet& operator[](std::size_t i) const { return items[i]; }

  friend bool operator==(const TagSetSequence&,
                         const TagSetSequence&) = default;
};

std::string render_tag_set(const TagSet& ts);

// Inverse of render_tag_set. Throws Error{kMalformedTagSet}.
TagSet parse_tag_set(std::string_view s);

bool is_valid_srl_label(std::string_view label);
bool is_valid_pos_label(std::string_view label);
bool is_noun_pos(std::string_view pos);
bool is_verb_pos(std::string_view pos);  // VB* or MD
bool is_punctuation_pos(std::string_view pos);

// Representative POS under the policy (NNS -> NN, VBZ -> VBP, ...).
std::string_view canonical_pos(std::string_view pos,
                               const EquivalencePolicy& policy);

// Hashable key identifying the equivalence class of a tag set.
std::string canonical_key(const TagSet& ts, const EquivalencePolicy& policy);

bool tag_sets_equal(const TagSet& a, const TagSet& b,
                    const EquivalencePolicy& policy);

// Space-separated canonical forms, e.g. "[ARG1/NNP/PER/] [V/VBZ//]".
std::string render_sequence(const TagSetSequence& seq);
std::vector<std::string> render_items(const TagSetSequence& seq);
TagSetSequence parse_sequence(const std::vector<std::string>& items,
                              SentenceKind kind);

// Checks the tag-set-sequence invariants: no two consecutive items with the
// same SRL label, each ArgN/ArgM label at most once, and a V bound of one
// (declarative) or two (interrogative). Returns a description of the first
// violation, or nullopt.
std::optional<std::string> sequence_violation(const TagSetSequence& seq);

// A set of tag sets under an equality policy. Members keep the concrete
// tag set that was inserted first.
class TagSetBag {
 public:
  explicit TagSetBag(EquivalencePolicy policy = EquivalencePolicy::matcher())
      : policy_(policy) {}

  static TagSetBag from(const TagSetSequence& seq,
                        EquivalencePolicy policy = EquivalencePolicy::matcher());
  static TagSetBag from(const std::vector<TagSet>& items,
                        EquivalencePolicy policy = EquivalencePolicy::matcher());

  // No-op when an equal member already exists. Returns true if added.
  bool insert(const TagSet& ts);
  bool contains(const TagSet& ts) const;

  const std::vector<TagSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const EquivalencePolicy& policy() const { return policy_; }

  // Set algebra; results keep the left operand's concrete members first.
  TagSetBag set_union(const TagSetBag& other) const;
  TagSetBag set_intersection(const TagSetBag& other) const;
  TagSetBag set_difference(const TagSetBag& other) const;

  // Same members under the policy, regardless of order or concrete form.
  bool same_members(const TagSetBag& other) const;

 private:
  EquivalencePolicy policy_;
  std::vector<TagSet> members_;
};

}  // namespace tssl
