#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tssl/lexicon.hpp"
#include "tssl/matcher.hpp"
#include "tssl/preprocess.hpp"
#include "tssl/sequence_builder.hpp"
#include "tssl/tag_set.hpp"
#include "tssl/tagger.hpp"

namespace tssl {

struct Qap {
  std::string question;
  std::string answer;
  std::string source_sentence;
  std::int64_t entry_id = 0;
  MatchClass match_class = MatchClass::kPerfect;
};

enum class TeachStatus { kOpen, kResolved, kSkipped };

std::string_view teach_status_name(TeachStatus s);

struct TeachRequest {
  std::int64_t id = 0;  // assigned by the queue
  std::string sentence_text;
  std::size_t frame_index = 0;
  std::vector<std::string> built_sequence;
  std::optional<MatchClass> best_match_class;  // nullopt: nothing matched
  std::string created_at;
  TeachStatus status = TeachStatus::kOpen;
  std::optional<std::int64_t> entry_id;  // set once resolved
};

// (Y' - ((X' & Y') - Xs')) | (Xs' - Z')
TagSetBag question_tag_bag(const TagSetBag& x, const TagSetBag& y,
                           const TagSetBag& xs, const TagSetBag& z);

// Y restricted to ys_bag, then the bag's members found after the Z span
// of xs, then those before it.
TagSetSequence order_question(const TagSetSequence& y, const TagSetBag& ys_bag,
                              const TagSetSequence& xs, std::size_t z_start,
                              std::size_t z_length);

// Surface question for an ordered Ys. map belongs to the input sentence.
// Throws Error{kUnresolvableTagSet}.
std::string realize_question(const TagSetSequence& ys, const TsTextMap& map,
                             const Lexicon& lex);

// Text of X' - Y' in xs order. Throws Error{kEmptyAnswer}.
std::string extract_answer(const TagSetBag& x, const TagSetBag& y,
                           const TagSetSequence& xs, const TsTextMap& map);

// One QAP from one matched pair, or nullopt when the answer would be
// revealed by the question. Realization errors propagate.
std::optional<Qap> make_qap(const BuiltSequence& input, const BestMatch& match,
                            const Lexicon& lex, std::string_view source);

struct Generation {
  std::vector<Qap> qaps;
  std::vector<TeachRequest> teach_requests;
  std::vector<std::string> notes;  // per-frame diagnostics
  double tag_seconds = 0;   // time spent in the tagger
  double core_seconds = 0;  // everything else
};

// Only tagger errors escape.
Generation generate(std::string_view sentence, const MatchIndex& index,
                    const Lexicon& lex, Tagger& tagger);

// Same, for a sentence that is already tagged.
Generation generate_from_tagged(const TaggedSentence& tagged,
                                const MatchIndex& index, const Lexicon& lex);

nlohmann::ordered_json qap_record(const Qap& qap);
nlohmann::ordered_json teach_request_record(const TeachRequest& r);
TeachRequest teach_request_from_record(const nlohmann::json& rec);

}  // namespace tssl
