#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>

#include "tssl/matcher.hpp"
#include "tssl/tssp_db.hpp"

namespace tssl {

// Single-writer, many-reader access to one DB file. Readers hold an
// immutable snapshot; writes copy, persist, then swap the snapshot in.
class DbStore {
 public:
  struct Snapshot {
    TsspDb db;
    MatchIndex index;
  };

  // An empty path keeps the DB in memory only.
  explicit DbStore(std::filesystem::path path, TsspDb db = {});

  // Missing file -> empty DB.
  static std::unique_ptr<DbStore> open(const std::filesystem::path& path);

  std::shared_ptr<const Snapshot> snapshot() const;
  const std::filesystem::path& path() const { return path_; }

  LearnOutcome learn(std::string_view declarative,
                     std::string_view interrogative, Tagger& tagger,
                     const Lexicon& lex, Origin origin,
                     std::optional<std::size_t> frame_hint = std::nullopt);

  ImportCounts import_seed(const std::filesystem::path& seed, Tagger& tagger,
                           const Lexicon& lex);

 private:
  void publish(TsspDb db);

  std::filesystem::path path_;
  mutable std::mutex snapshot_mu_;
  std::mutex writer_mu_;
  std::shared_ptr<const Snapshot> current_;
};

}  // namespace tssl
