#include "tssl/qap_generator.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "tssl/error.hpp"
#include "tssl/text_util.hpp"

namespace tssl {

std::string_view teach_status_name(TeachStatus s) {
  switch (s) {
    case TeachStatus::kOpen: return "open";
    case TeachStatus::kResolved: return "resolved";
    case TeachStatus::kSkipped: return "skipped";
  }
  return "open";
}

TagSetBag question_tag_bag(const TagSetBag& x, const TagSetBag& y,
                           const TagSetBag& xs, const TagSetBag& z) {
  const TagSetBag removed = x.set_intersection(y).set_difference(xs);
  return y.set_difference(removed).set_union(xs.set_difference(z));
}

TagSetSequence order_question(const TagSetSequence& y, const TagSetBag& ys_bag,
                              const TagSetSequence& xs, std::size_t z_start,
                              std::size_t z_length) {
  TagSetSequence out;
  out.kind = SentenceKind::kInterrogative;
  TagSetBag present(ys_bag.policy());
  for (const auto& ts : y.items) {
    if (!ys_bag.contains(ts)) continue;
    out.items.push_back(ts);
    present.insert(ts);
  }
  auto take = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to && i < xs.size(); ++i) {
      if (!ys_bag.contains(xs[i]) || present.contains(xs[i])) continue;
      out.items.push_back(xs[i]);
      present.insert(xs[i]);
    }
  };
  take(z_start + z_length, xs.size());  // Y_a
  take(0, z_start);                     // Y_b
  return out;
}

namespace {

[[noreturn]] void unresolvable(const TagSet& ts, const std::string& why) {
  throw Error(ErrorCode::kUnresolvableTagSet,
              "cannot realize " + render_tag_set(ts) + ": " + why);
}

GrammaticalNumber subject_number(const TsTextMap& map) {
  const TsTextEntry* subject = nullptr;
  for (const auto& e : map.entries) {
    if (e.tag_set.srl && *e.tag_set.srl == "ARG0") {
      subject = &e;
      break;
    }
  }
  if (!subject) {
    for (const auto& e : map.entries) {
      if (e.tag_set.is_verb()) break;
      if (e.tag_set.is_core_arg()) {
        subject = &e;
        break;
      }
    }
  }
  if (!subject) return GrammaticalNumber::kSingular;
  const auto& pos = subject->tag_set.pos;
  if (pos && (*pos == "NNS" || *pos == "NNPS"))
    return GrammaticalNumber::kPlural;
  static const std::set<std::string> kPluralPronouns = {"i", "you", "we",
                                                        "they"};
  if (kPluralPronouns.count(to_lower(subject->text)))
    return GrammaticalNumber::kPlural;
  return GrammaticalNumber::kSingular;
}

struct Part {
  std::string text;
  bool lower_if_moved = false;
};

Part from_entry(const TsTextEntry& e) {
  return {e.text, e.sentence_initial && !e.proper_initial};
}

}  // namespace

std::string realize_question(const TagSetSequence& ys, const TsTextMap& map,
                             const Lexicon& lex) {
  const auto policy = EquivalencePolicy::matcher();
  std::vector<std::size_t> verbs;
  for (std::size_t i = 0; i < ys.size(); ++i)
    if (ys[i].is_verb()) verbs.push_back(i);
  const TsTextEntry* input_verb = map.verb();

  std::vector<Part> parts;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const TagSet& ts = ys[i];
    if (ts.is_pronoun()) {
      parts.push_back({*ts.pronoun, false});
      continue;
    }
    if (!ts.is_verb()) {
      const TsTextEntry* e = map.find(ts, policy);
      if (!e) unresolvable(ts, "no text in the input sentence");
      parts.push_back(from_entry(*e));
      continue;
    }
    if (!input_verb) unresolvable(ts, "input sentence has no verb");
    if (verbs.size() == 1) {
      if (!tag_sets_equal(ts, input_verb->tag_set, policy))
        unresolvable(ts, "differs from the input verb " +
                             render_tag_set(input_verb->tag_set));
      parts.push_back(from_entry(*input_verb));
      continue;
    }
    if (verbs.size() != 2) unresolvable(ts, "more than two verbs");

    const std::vector<std::string> words = split_words(input_verb->text);
    const bool aux_split = words.size() >= 2 && lex.is_auxiliary(words[0]);
    if (i == verbs[0]) {
      if (aux_split) {
        parts.push_back({words[0], true});
        continue;
      }
      Tense tense;
      const std::string pos = ts.pos.value_or("");
      if (pos == "VBD")
        tense = Tense::kPast;
      else if (pos == "VBP" || pos == "VBZ")
        tense = Tense::kPresent;
      else
        unresolvable(ts, "helping verb needs a VBD, VBP or VBZ tag");
      parts.push_back(
          {Lexicon::conjugate_do(tense, subject_number(map)), false});
    } else if (aux_split) {
      std::string rest;
      for (std::size_t k = 1; k < words.size(); ++k) {
        if (k > 1) rest += ' ';
        rest += words[k];
      }
      parts.push_back({rest, false});
    } else {
      parts.push_back({lex.lemma(input_verb->text), false});
    }
  }

  std::string q;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string text = parts[i].text;
    if (i > 0 && parts[i].lower_if_moved) text = lowercase_first(text);
    if (text.empty()) continue;
    if (!q.empty()) q += ' ';
    q += text;
  }
  return capitalize_first(std::move(q)) + "?";
}

std::string extract_answer(const TagSetBag& x, const TagSetBag& y,
                           const TagSetSequence& xs, const TsTextMap& map) {
  const TagSetBag answer = x.set_difference(y);
  TagSetBag used(answer.policy());
  std::string out;
  for (std::size_t i = 0; i < xs.size() && i < map.entries.size(); ++i) {
    if (!answer.contains(xs[i]) || !used.insert(xs[i])) continue;
    if (!out.empty()) out += ' ';
    out += map.entries[i].text;
  }
  if (out.empty())
    throw Error(ErrorCode::kEmptyAnswer, "the matched pattern leaves no answer");
  return out;
}

std::optional<Qap> make_qap(const BuiltSequence& input, const BestMatch& match,
                            const Lexicon& lex, std::string_view source) {
  const auto policy = EquivalencePolicy::matcher();
  const TagSetSequence& xs = input.sequence;
  const TagSetBag x = TagSetBag::from(match.entry.x, policy);
  const TagSetBag y = TagSetBag::from(match.entry.y, policy);
  const TagSetBag xs_bag = TagSetBag::from(xs, policy);
  const TagSetBag z = TagSetBag::from(match.result.z, policy);

  const TagSetBag ys_bag = question_tag_bag(x, y, xs_bag, z);
  const TagSetSequence ys =
      order_question(match.entry.y, ys_bag, xs, match.result.xs_start,
                     match.result.z.size());
  Qap qap;
  qap.question = realize_question(ys, input.text_map, lex);
  qap.answer = extract_answer(x, y, xs, input.text_map);
  qap.source_sentence = std::string(source);
  qap.entry_id = match.entry.id;
  qap.match_class = match.result.match_class;
  if (contains_case_insensitive(qap.question, qap.answer)) return std::nullopt;
  return qap;
}

namespace {

void generate_frames(const Analysis& analysis, std::string_view source,
                     const MatchIndex& index, const Lexicon& lex,
                     Generation& out) {
  std::set<std::string> seen;
  for (const auto& q : out.qaps) seen.insert(to_lower(q.question));

  for (const auto& d : analysis.extraction.discarded)
    out.notes.push_back("frame " + std::to_string(d.frame_index) +
                        " discarded: " +
                        std::string(discard_reason_name(d.reason)));

  for (const auto& s : analysis.extraction.sentences) {
    const std::string frame = "frame " + std::to_string(s.frame_index);
    BuiltSequence built;
    try {
      built = build(s, lex, SentenceKind::kDeclarative);
    } catch (const Error& e) {
      out.notes.push_back(frame + ": " + e.what());
      continue;
    }
    const auto matches = index.best_match(built.sequence);
    bool teach = matches.empty();
    std::optional<MatchClass> best;
    for (const auto& m : matches) {
      const MatchClass c = m.result.match_class;
      if (!best || c > *best) best = c;
      if (c == MatchClass::kUnsuccessful) continue;
      try {
        auto qap = make_qap(built, m, lex, source);
        if (!qap) {
          out.notes.push_back(frame + ": entry " + std::to_string(m.entry.id) +
                              " would reveal its answer");
          continue;
        }
        if (!seen.insert(to_lower(qap->question)).second) continue;
        out.qaps.push_back(std::move(*qap));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kUnresolvableTagSet) teach = true;
        out.notes.push_back(frame + ": entry " + std::to_string(m.entry.id) +
                            ": " + e.what());
      }
    }
    if (best != MatchClass::kPerfect) teach = true;
    if (teach) {
      TeachRequest r;
      r.sentence_text = std::string(source);
      r.frame_index = s.frame_index;
      r.built_sequence = render_items(built.sequence);
      r.best_match_class = best;
      r.created_at = utc_timestamp();
      out.teach_requests.push_back(std::move(r));
    }
  }
}

}  // namespace

Generation generate(std::string_view sentence, const MatchIndex& index,
                    const Lexicon& lex, Tagger& tagger) {
  Generation out;
  const std::string source = collapse_whitespace(sentence);
  if (source.empty()) return out;
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const std::string normalized = normalize(source, lex);
  const auto t1 = clock::now();
  TaggedSentence tagged = tagger.tag(normalized);
  const auto t2 = clock::now();
  const Analysis analysis = analyze_tagged(std::move(tagged), lex);
  generate_frames(analysis, source, index, lex, out);
  const auto t3 = clock::now();
  out.tag_seconds = std::chrono::duration<double>(t2 - t1).count();
  out.core_seconds = std::chrono::duration<double>((t1 - t0) + (t3 - t2)).count();
  return out;
}

Generation generate_from_tagged(const TaggedSentence& tagged,
                                const MatchIndex& index, const Lexicon& lex) {
  Generation out;
  const auto t0 = std::chrono::steady_clock::now();
  const Analysis analysis = analyze_tagged(tagged, lex);
  generate_frames(analysis, collapse_whitespace(tagged.source_text), index, lex,
                  out);
  out.core_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return out;
}

nlohmann::ordered_json qap_record(const Qap& qap) {
  nlohmann::ordered_json rec;
  rec["question"] = qap.question;
  rec["answer"] = qap.answer;
  rec["source"] = qap.source_sentence;
  rec["entry_id"] = qap.entry_id;
  return rec;
}

nlohmann::ordered_json teach_request_record(const TeachRequest& r) {
  nlohmann::ordered_json rec;
  rec["id"] = r.id;
  rec["sentence_text"] = r.sentence_text;
  rec["frame_index"] = r.frame_index;
  rec["built_sequence"] = r.built_sequence;
  rec["best_match_class"] =
      r.best_match_class
          ? nlohmann::ordered_json(std::string(match_class_name(*r.best_match_class)))
          : nlohmann::ordered_json(nullptr);
  rec["created_at"] = r.created_at;
  rec["status"] = teach_status_name(r.status);
  rec["entry_id"] = r.entry_id ? nlohmann::ordered_json(*r.entry_id)
                               : nlohmann::ordered_json(nullptr);
  return rec;
}

TeachRequest teach_request_from_record(const nlohmann::json& rec) {
  TeachRequest r;
  r.id = rec.at("id").get<std::int64_t>();
  r.sentence_text = rec.at("sentence_text").get<std::string>();
  r.frame_index = rec.at("frame_index").get<std::size_t>();
  r.built_sequence = rec.at("built_sequence").get<std::vector<std::string>>();
  const auto& cls = rec.at("best_match_class");
  if (!cls.is_null()) {
    const auto name = cls.get<std::string>();
    if (name == "perfect")
      r.best_match_class = MatchClass::kPerfect;
    else if (name == "successful")
      r.best_match_class = MatchClass::kSuccessful;
    else
      r.best_match_class = MatchClass::kUnsuccessful;
  }
  r.created_at = rec.at("created_at").get<std::string>();
  const auto status = rec.value("status", std::string("open"));
  r.status = status == "resolved"  ? TeachStatus::kResolved
             : status == "skipped" ? TeachStatus::kSkipped
                                   : TeachStatus::kOpen;
  if (rec.contains("entry_id") && !rec["entry_id"].is_null())
    r.entry_id = rec["entry_id"].get<std::int64_t>();
  return r;
}

}  // namespace tssl
