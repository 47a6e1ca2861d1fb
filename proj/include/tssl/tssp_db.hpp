#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tssl/lexicon.hpp"
#include "tssl/tag_set.hpp"
#include "tssl/tagger.hpp"

namespace tssl {

enum class Origin { kSeed, kTaught };

std::string_view origin_name(Origin origin);

struct TsspEntry {
  std::int64_t id = 0;
  TagSetSequence x;  // declarative
  TagSetSequence y;  // interrogative
  std::string source_declarative;
  std::string source_interrogative;
  std::string created_at;
  Origin origin = Origin::kSeed;

  friend bool operator==(const TsspEntry&, const TsspEntry&) = default;
};

// One DB line: {"id","x","y","decl","interr","origin","created_at"}.
nlohmann::ordered_json entry_record(const TsspEntry& e);

// Learned pattern pairs. File format: a header line
//   {"format":"tssp-db","version":1,"next_id":N}
// then one JSON object per entry with tag sets in bracket notation.
class TsspDb {
 public:
  const std::vector<TsspEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::int64_t next_id() const { return next_id_; }

  const TsspEntry* find(std::int64_t id) const;

  // Literal tag-set equality on both sides.
  std::optional<std::int64_t> find_pair(const TagSetSequence& x,
                                        const TagSetSequence& y) const;

  // Assigns the next id (and a timestamp when created_at is empty). The
  // caller is expected to have checked find_pair.
  const TsspEntry& add(TsspEntry entry);

  // Ids of removed entries are not handed out again.
  bool remove(std::int64_t id);

  std::string serialize() const;

  // Throws Error{kCorruptDb} naming the offending line.
  static TsspDb parse(std::string_view content, std::string_view name = "db");

  // A missing file is an Error{kIo} unless missing_ok, in which case an
  // empty DB is returned.
  static TsspDb load(const std::filesystem::path& path, bool missing_ok = false);

  // Atomic: written to a sibling temp file, then renamed.
  void save(const std::filesystem::path& path) const;

 private:
  std::vector<TsspEntry> entries_;
  std::int64_t next_id_ = 1;
};

struct Duplicate {
  std::int64_t existing_id = 0;
};

using LearnOutcome = std::variant<TsspEntry, Duplicate>;

// Builds X and Y and deposits the pair unless it is already known. Only the
// in-memory db is touched. frame_hint picks the declarative frame; by
// default the frame with the most labeled tokens is used.
LearnOutcome learn_pair(TsspDb& db, std::string_view declarative,
                        std::string_view interrogative, Tagger& tagger,
                        const Lexicon& lex, Origin origin = Origin::kSeed,
                        std::optional<std::size_t> frame_hint = std::nullopt);

struct ImportCounts {
  std::size_t added = 0;
  std::size_t duplicates = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // "line N: message"
};

// Seed file: one {"declarative": ..., "interrogative": ...} per line.
// Per-record problems are counted; an unreadable file throws Error{kIo}.
ImportCounts import_seed(TsspDb& db, const std::filesystem::path& path,
                         Tagger& tagger, const Lexicon& lex);

struct SeedPair {
  std::string declarative;
  std::string interrogative;
};

std::vector<SeedPair> load_seed_pairs(const std::filesystem::path& path);

}  // namespace tssl
