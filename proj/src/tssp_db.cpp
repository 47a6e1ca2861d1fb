#include "tssl/tssp_db.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tssl/error.hpp"
#include "tssl/preprocess.hpp"
#include "tssl/sequence_builder.hpp"
#include "tssl/text_util.hpp"

namespace tssl {

using ojson = nlohmann::ordered_json;

std::string_view origin_name(Origin origin) {
  return origin == Origin::kTaught ? "taught" : "seed";
}

const TsspEntry* TsspDb::find(std::int64_t id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

std::optional<std::int64_t> TsspDb::find_pair(const TagSetSequence& x,
                                              const TagSetSequence& y) const {
  for (const auto& e : entries_)
    if (e.x.items == x.items && e.y.items == y.items) return e.id;
  return std::nullopt;
}

const TsspEntry& TsspDb::add(TsspEntry entry) {
  entry.id = next_id_++;
  entry.x.kind = SentenceKind::kDeclarative;
  entry.y.kind = SentenceKind::kInterrogative;
  if (entry.created_at.empty()) entry.created_at = utc_timestamp();
  entries_.push_back(std::move(entry));
  return entries_.back();
}

bool TsspDb::remove(std::int64_t id) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const TsspEntry& e) { return e.id == id; });
  if (it == entries_.end()) return false;
  entries_.erase(it);
  return true;
}

nlohmann::ordered_json entry_record(const TsspEntry& e) {
  ojson rec;
  rec["id"] = e.id;
  rec["x"] = render_items(e.x);
  rec["y"] = render_items(e.y);
  rec["decl"] = e.source_declarative;
  rec["interr"] = e.source_interrogative;
  rec["origin"] = origin_name(e.origin);
  rec["created_at"] = e.created_at;
  return rec;
}

std::string TsspDb::serialize() const {
  std::string out;
  ojson header;
  header["format"] = "tssp-db";
  header["version"] = 1;
  header["next_id"] = next_id_;
  out += header.dump();
  out += '\n';
  for (const auto& e : entries_) {
    out += entry_record(e).dump();
    out += '\n';
  }
  return out;
}

namespace {

[[noreturn]] void corrupt(std::string_view name, int line,
                          const std::string& why) {
  throw Error(ErrorCode::kCorruptDb,
              std::string(name) + ":" + std::to_string(line) + ": " + why);
}

TagSetSequence parse_side(const nlohmann::json& items, SentenceKind kind) {
  if (!items.is_array()) throw std::invalid_argument("tag sets must be a list");
  std::vector<std::string> strs;
  for (const auto& s : items) strs.push_back(s.get<std::string>());
  TagSetSequence seq = parse_sequence(strs, kind);
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  if (auto why = sequence_violation(seq)) throw std::invalid_argument(*why);
  return seq;
}

}  // namespace

TsspDb TsspDb::parse(std::string_view content, std::string_view name) {
  TsspDb db;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  std::set<std::int64_t> ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (collapse_whitespace(line).empty()) continue;
    try {
      const auto rec = nlohmann::json::parse(line);
      if (!header_seen) {
        if (rec.value("format", "") != "tssp-db")
          corrupt(name, line_no, "missing tssp-db header");
        if (rec.at("version").get<int>() != 1)
          corrupt(name, line_no, "unsupported version");
        db.next_id_ = rec.at("next_id").get<std::int64_t>();
        header_seen = true;
        continue;
      }
      TsspEntry e;
      e.id = rec.at("id").get<std::int64_t>();
      e.x = parse_side(rec.at("x"), SentenceKind::kDeclarative);
      e.y = parse_side(rec.at("y"), SentenceKind::kInterrogative);
      e.source_declarative = rec.at("decl").get<std::string>();
      e.source_interrogative = rec.at("interr").get<std::string>();
      e.created_at = rec.at("created_at").get<std::string>();
      const auto origin = rec.at("origin").get<std::string>();
      if (origin == "seed")
        e.origin = Origin::kSeed;
      else if (origin == "taught")
        e.origin = Origin::kTaught;
      else
        corrupt(name, line_no, "unknown origin '" + origin + "'");
      if (e.id <= 0 || e.id >= db.next_id_)
        corrupt(name, line_no, "id " + std::to_string(e.id) +
                                   " outside [1, next_id)");
      if (!ids.insert(e.id).second)
        corrupt(name, line_no, "duplicate id " + std::to_string(e.id));
      db.entries_.push_back(std::move(e));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kCorruptDb) throw;
      corrupt(name, line_no, e.what());
    } catch (const std::exception& e) {
      corrupt(name, line_no, e.what());
    }
  }
  return db;  // an empty file is an empty DB
}

TsspDb TsspDb::load(const std::filesystem::path& path, bool missing_ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (missing_ok && !std::filesystem::exists(path)) return TsspDb{};
    throw Error(ErrorCode::kIo, "cannot open database " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

void TsspDb::save(const std::filesystem::path& path) const {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out << serialize();
    if (!out.flush())
      throw Error(ErrorCode::kIo, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    throw Error(ErrorCode::kIo,
                "cannot replace " + path.string() + ": " + ec.message());
}

namespace {

std::size_t labeled_count(const SimpleSentence& s) {
  return static_cast<std::size_t>(std::count_if(
      s.tokens.begin(), s.tokens.end(),
      [](const FrameToken& t) { return t.srl.has_value(); }));
}

// Tries candidates richest-first and returns the first that builds.
BuiltSequence build_best(std::vector<SimpleSentence> candidates,
                         const Lexicon& lex, SentenceKind kind,
                         std::string_view what) {
  if (candidates.empty())
    throw Error(ErrorCode::kUnmergeableSentence,
                "no usable simple sentence in " + std::string(what));
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const SimpleSentence& a, const SimpleSentence& b) {
                     return labeled_count(a) > labeled_count(b);
                   });
  std::optional<Error> first_error;
  for (const auto& c : candidates) {
    try {
      return build(c, lex, kind);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnmergeableSentence) throw;
      if (!first_error) first_error = e;
    }
  }
  throw *first_error;
}

}  // namespace

LearnOutcome learn_pair(TsspDb& db, std::string_view declarative,
                        std::string_view interrogative, Tagger& tagger,
                        const Lexicon& lex, Origin origin,
                        std::optional<std::size_t> frame_hint) {
  const Analysis decl = analyze(declarative, tagger, lex);
  std::vector<SimpleSentence> decl_candidates;
  for (const auto& s : decl.extraction.sentences)
    if (!frame_hint || s.frame_index == *frame_hint)
      decl_candidates.push_back(s);
  const BuiltSequence x = build_best(std::move(decl_candidates), lex,
                                     SentenceKind::kDeclarative,
                                     "\"" + std::string(declarative) + "\"");

  const std::string interr_text = normalize(interrogative, lex);
  const TaggedSentence interr_tagged = tagger.tag(interr_text);
  const BuiltSequence y = build_best(
      extract_frames(interr_tagged, 0, ExtractMode::kInterrogative).sentences,
      lex, SentenceKind::kInterrogative,
      "\"" + std::string(interrogative) + "\"");

  if (auto id = db.find_pair(x.sequence, y.sequence)) return Duplicate{*id};
  TsspEntry e;
  e.x = x.sequence;
  e.y = y.sequence;
  e.source_declarative = collapse_whitespace(declarative);
  e.source_interrogative = collapse_whitespace(interrogative);
  e.origin = origin;
  return db.add(std::move(e));
}

namespace {

std::optional<SeedPair> parse_seed_line(const std::string& line) {
  if (collapse_whitespace(line).empty()) return std::nullopt;
  const auto rec = nlohmann::json::parse(line);
  SeedPair p;
  p.declarative = rec.at("declarative").get<std::string>();
  p.interrogative = rec.at("interrogative").get<std::string>();
  return p;
}

}  // namespace

std::vector<SeedPair> load_seed_pairs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<SeedPair> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      if (auto p = parse_seed_line(line)) out.push_back(std::move(*p));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kSchemaViolation,
                  path.string() + ":" + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return out;
}

ImportCounts import_seed(TsspDb& db, const std::filesystem::path& path,
                         Tagger& tagger, const Lexicon& lex) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  ImportCounts counts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      auto pair = parse_seed_line(line);
      if (!pair) continue;
      auto outcome =
          learn_pair(db, pair->declarative, pair->interrogative, tagger, lex);
      if (std::holds_alternative<TsspEntry>(outcome))
        ++counts.added;
      else
        ++counts.duplicates;
    } catch (const std::exception& e) {
      ++counts.failed;
      counts.failures.push_back("line " + std::to_string(line_no) + ": " +
                                e.what());
    }
  }
  return counts;
}

}  // namespace tssl
