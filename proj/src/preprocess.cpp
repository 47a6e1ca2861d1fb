#include "tssl/preprocess.hpp"

#include "tssl/tag_set.hpp"
#include "tssl/text_util.hpp"

namespace tssl {

bool FrameToken::is_core_arg() const {
  return srl && srl->size() == 4 && srl->compare(0, 3, "ARG") == 0 &&
         (*srl)[3] >= '0' && (*srl)[3] <= '5';
}

std::string_view discard_reason_name(DiscardReason reason) {
  switch (reason) {
    case DiscardReason::kEmptyFrame: return "empty_frame";
    case DiscardReason::kMissingSubject: return "missing_subject";
    case DiscardReason::kMissingObject: return "missing_object";
  }
  return "unknown";
}

std::string normalize(std::string_view text, const Lexicon& lex) {
  return collapse_whitespace(lex.expand_contractions(text));
}

void refresh_text(SimpleSentence& s) {
  std::vector<std::string> words;
  words.reserve(s.tokens.size());
  for (const auto& t : s.tokens) words.push_back(t.text);
  s.text = join_tokens(words).text;
}

namespace {

std::optional<DiscardReason> check_subject_object(const SimpleSentence& s) {
  std::size_t first_v = s.tokens.size();
  std::size_t last_v = 0;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (!s.tokens[i].is_verb()) continue;
    if (first_v == s.tokens.size()) first_v = i;
    last_v = i;
  }
  if (first_v == s.tokens.size()) return DiscardReason::kEmptyFrame;
  bool subject = false;
  bool object = false;
  for (std::size_t i = 0; i < first_v; ++i)
    subject = subject || s.tokens[i].is_core_arg();
  for (std::size_t i = last_v + 1; i < s.tokens.size(); ++i)
    object = object || s.tokens[i].is_core_arg();
  if (!subject) return DiscardReason::kMissingSubject;
  if (!object) return DiscardReason::kMissingObject;
  return std::nullopt;
}

}  // namespace

bool has_subject_and_object(const SimpleSentence& s) {
  return !check_subject_object(s).has_value();
}

Extraction extract_frames(const TaggedSentence& ts, std::size_t sentence_id,
                          ExtractMode mode) {
  Extraction out;
  for (std::size_t f = 0; f < ts.frame_count; ++f) {
    std::size_t first = ts.tokens.size();
    std::size_t last = 0;
    for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
      if (!ts.tokens[i].srl_by_frame[f]) continue;
      if (first == ts.tokens.size()) first = i;
      last = i;
    }
    if (first == ts.tokens.size()) {
      out.discarded.push_back({f, DiscardReason::kEmptyFrame});
      continue;
    }
    if (mode == ExtractMode::kInterrogative) first = 0;

    SimpleSentence s;
    s.sentence_id = sentence_id;
    s.frame_index = f;
    for (std::size_t i = first; i <= last; ++i) {
      const TaggedToken& tok = ts.tokens[i];
      const auto& label = tok.srl_by_frame[f];
      const bool keep = label || is_punctuation_pos(tok.pos) ||
                        mode == ExtractMode::kInterrogative;
      if (!keep) continue;
      s.tokens.push_back({tok.text, tok.pos, tok.ner, label, i});
    }
    refresh_text(s);

    if (mode == ExtractMode::kDeclarative) {
      if (auto reason = check_subject_object(s)) {
        out.discarded.push_back({f, *reason});
        continue;
      }
    }
    out.sentences.push_back(std::move(s));
  }
  return out;
}

std::vector<SimpleSentence> extract_simple_sentences(const TaggedSentence& ts,
                                                     std::size_t sentence_id) {
  return extract_frames(ts, sentence_id, ExtractMode::kDeclarative).sentences;
}

SimpleSentence strip_leading_cc(const SimpleSentence& s, const Lexicon& lex) {
  std::size_t subject = s.tokens.size();
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.tokens[i].is_core_arg()) {
      subject = i;
      break;
    }
  }
  SimpleSentence out = s;
  out.tokens.clear();
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const FrameToken& t = s.tokens[i];
    if (i < subject) {
      // Listed words only go when they are not inside a content argument
      // ("For three years" keeps its preposition).
      const bool discourse = !t.srl || *t.srl == "DIS";
      if (t.pos == "CC" || (lex.is_cc_word(t.text) && discourse)) continue;
      if (out.tokens.empty() && is_punctuation_pos(t.pos)) continue;
    }
    out.tokens.push_back(t);
  }
  refresh_text(out);
  return out;
}

Analysis analyze_tagged(TaggedSentence tagged, const Lexicon& lex,
                        std::size_t sentence_id) {
  Analysis a;
  a.normalized = tagged.source_text;
  a.tagged = std::move(tagged);
  a.extraction = extract_frames(a.tagged, sentence_id);
  for (auto& s : a.extraction.sentences) s = strip_leading_cc(s, lex);
  return a;
}

Analysis analyze(std::string_view text, Tagger& tagger, const Lexicon& lex,
                 std::size_t sentence_id) {
  std::string normalized = normalize(text, lex);
  Analysis a = analyze_tagged(tagger.tag(normalized), lex, sentence_id);
  a.normalized = std::move(normalized);
  return a;
}

}  // namespace tssl
