#include "tssl/tagger.hpp"

#include <fstream>

#include "tssl/error.hpp"
#include "tssl/tag_set.hpp"
#include "tssl/text_util.hpp"

namespace tssl {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, what);
}

bool is_interrogative_text(std::string_view text) {
  auto end = text.find_last_not_of(" \t\r\n");
  return end != std::string_view::npos && text[end] == '?';
}

// Key that ignores terminal punctuation, for lenient fixture lookups.
std::string loose_key(std::string_view text) {
  std::string key = collapse_whitespace(text);
  while (!key.empty() &&
         (key.back() == '.' || key.back() == '?' || key.back() == '!' ||
          key.back() == ' '))
    key.pop_back();
  return key;
}

}  // namespace

std::optional<std::string> normalize_srl_label(std::string_view label) {
  if (label.empty() || label == "O") return std::nullopt;
  if (label.size() > 2 && (label[0] == 'B' || label[0] == 'I') &&
      label[1] == '-')
    label.remove_prefix(2);
  if (label.size() > 5 && label.substr(0, 5) == "ARGM-") label.remove_prefix(5);
  return std::string(label);
}

std::vector<Frame> frames_of(const TaggedSentence& ts) {
  std::vector<Frame> frames(ts.frame_count);
  for (std::size_t f = 0; f < ts.frame_count; ++f) frames[f].frame_index = f;
  for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
    const auto& srl = ts.tokens[i].srl_by_frame;
    for (std::size_t f = 0; f < ts.frame_count && f < srl.size(); ++f)
      if (srl[f]) frames[f].token_span_labels.emplace_back(i, *srl[f]);
  }
  return frames;
}

void validate(const TaggedSentence& ts) {
  if (ts.tokens.empty()) schema_error("empty sentence");
  std::string joined;
  for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
    const auto& tok = ts.tokens[i];
    const std::string where = "token " + std::to_string(i);
    if (tok.text.empty()) schema_error(where + ": empty text");
    if (!is_valid_pos_label(tok.pos))
      schema_error(where + ": unknown POS '" + tok.pos + "'");
    if (tok.srl_by_frame.size() != ts.frame_count)
      schema_error(where + ": srl has " +
                   std::to_string(tok.srl_by_frame.size()) +
                   " labels, expected " + std::to_string(ts.frame_count));
    for (const auto& label : tok.srl_by_frame)
      if (label && !is_valid_srl_label(*label))
        schema_error(where + ": unknown SRL label '" + *label + "'");
    joined += tok.text;
  }
  if (!ts.source_text.empty() &&
      strip_whitespace(joined) != strip_whitespace(ts.source_text))
    schema_error("tokens do not reconstruct the sentence text");

  const std::size_t max_groups = is_interrogative_text(ts.source_text) ? 2 : 1;
  for (std::size_t f = 0; f < ts.frame_count; ++f) {
    std::size_t groups = 0;
    bool in_group = false;
    for (const auto& tok : ts.tokens) {
      const bool is_v = tok.srl_by_frame[f] && *tok.srl_by_frame[f] == "V";
      if (is_v && !in_group) ++groups;
      in_group = is_v;
    }
    if (groups == 0)
      schema_error("frame " + std::to_string(f) + " has no V token");
    if (groups > max_groups)
      schema_error("frame " + std::to_string(f) + " has " +
                   std::to_string(groups) + " disjoint V groups");
  }
}

nlohmann::ordered_json to_wire(const TaggedSentence& ts) {
  nlohmann::ordered_json rec;
  rec["text"] = ts.source_text;
  auto tokens = nlohmann::ordered_json::array();
  for (const auto& tok : ts.tokens) {
    nlohmann::ordered_json t;
    t["t"] = tok.text;
    t["pos"] = tok.pos;
    t["ner"] = tok.ner ? nlohmann::ordered_json(*tok.ner) : nullptr;
    auto srl = nlohmann::ordered_json::array();
    for (const auto& label : tok.srl_by_frame)
      srl.push_back(label ? nlohmann::ordered_json(*label) : nullptr);
    t["srl"] = std::move(srl);
    tokens.push_back(std::move(t));
  }
  rec["tokens"] = std::move(tokens);
  rec["frames"] = ts.frame_count;
  return rec;
}

TaggedSentence from_wire(const nlohmann::json& rec) {
  if (!rec.is_object()) schema_error("record is not an object");
  if (rec.contains("error"))
    throw Error(ErrorCode::kTaggerUnavailable,
                "tagger reported: " + rec["error"].dump());
  TaggedSentence ts;
  try {
    ts.source_text = rec.at("text").get<std::string>();
    const auto& frames = rec.at("frames");
    if (!frames.is_number_integer() || frames.get<long long>() < 0)
      schema_error("'frames' must be a non-negative integer");
    ts.frame_count = frames.get<std::size_t>();
    const auto& tokens = rec.at("tokens");
    if (!tokens.is_array()) schema_error("'tokens' must be an array");
    for (const auto& t : tokens) {
      TaggedToken tok;
      tok.text = t.at("t").get<std::string>();
      tok.pos = t.at("pos").get<std::string>();
      if (t.contains("ner") && !t["ner"].is_null()) {
        auto ner = t["ner"].get<std::string>();
        if (!ner.empty() && ner != "O") tok.ner = std::move(ner);
      }
      const auto& srl = t.at("srl");
      if (!srl.is_array()) schema_error("'srl' must be an array");
      for (const auto& label : srl) {
        if (label.is_null())
          tok.srl_by_frame.emplace_back(std::nullopt);
        else
          tok.srl_by_frame.push_back(
              normalize_srl_label(label.get<std::string>()));
      }
      ts.tokens.push_back(std::move(tok));
    }
  } catch (const nlohmann::json::exception& e) {
    schema_error(std::string("bad wire record: ") + e.what());
  }
  validate(ts);
  return ts;
}

std::vector<TaggedSentence> load_fixture_corpus(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<TaggedSentence> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (collapse_whitespace(line).empty()) continue;
    try {
      out.push_back(from_wire(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kSchemaViolation,
                  path.string() + ":" + std::to_string(line_no) + ": " +
                      e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::kSchemaViolation,
                  path.string() + ":" + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return out;
}

void save_fixture_corpus(const std::filesystem::path& path,
                         const std::vector<TaggedSentence>& sentences) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  for (const auto& ts : sentences) out << to_wire(ts).dump() << '\n';
}

FixtureTagger::FixtureTagger(std::vector<TaggedSentence> corpus) {
  for (auto& ts : corpus) add(std::move(ts));
}

std::unique_ptr<FixtureTagger> FixtureTagger::from_file(
    const std::filesystem::path& path) {
  return std::make_unique<FixtureTagger>(load_fixture_corpus(path));
}

void FixtureTagger::add(TaggedSentence ts) {
  const std::size_t idx = corpus_.size();
  by_text_.insert_or_assign(collapse_whitespace(ts.source_text), idx);
  by_loose_text_.insert_or_assign(loose_key(ts.source_text), idx);
  corpus_.push_back(std::move(ts));
}

TaggedSentence FixtureTagger::tag(std::string_view text) {
  const std::string key = collapse_whitespace(text);
  if (key.empty()) schema_error("empty sentence");
  if (auto it = by_text_.find(key); it != by_text_.end())
    return corpus_[it->second];
  if (auto it = by_loose_text_.find(loose_key(key));
      it != by_loose_text_.end())
    return corpus_[it->second];
  throw Error(ErrorCode::kTaggerUnavailable,
              "no fixture annotation for: " + key);
}

}  // namespace tssl
