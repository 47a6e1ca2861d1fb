#include "tssl/db_store.hpp"

namespace tssl {

DbStore::DbStore(std::filesystem::path path, TsspDb db)
    : path_(std::move(path)) {
  MatchIndex index(db);
  current_ = std::make_shared<const Snapshot>(
      Snapshot{std::move(db), std::move(index)});
}

std::unique_ptr<DbStore> DbStore::open(const std::filesystem::path& path) {
  return std::make_unique<DbStore>(path, TsspDb::load(path, true));
}

std::shared_ptr<const DbStore::Snapshot> DbStore::snapshot() const {
  std::lock_guard lock(snapshot_mu_);
  return current_;
}

void DbStore::publish(TsspDb db) {
  if (!path_.empty()) db.save(path_);
  MatchIndex index(db);
  auto next = std::make_shared<const Snapshot>(
      Snapshot{std::move(db), std::move(index)});
  std::lock_guard lock(snapshot_mu_);
  current_ = std::move(next);
}

LearnOutcome DbStore::learn(std::string_view declarative,
                            std::string_view interrogative, Tagger& tagger,
                            const Lexicon& lex, Origin origin,
                            std::optional<std::size_t> frame_hint) {
  std::lock_guard lock(writer_mu_);
  TsspDb db = snapshot()->db;
  auto outcome =
      learn_pair(db, declarative, interrogative, tagger, lex, origin, frame_hint);
  if (std::holds_alternative<TsspEntry>(outcome)) publish(std::move(db));
  return outcome;
}

ImportCounts DbStore::import_seed(const std::filesystem::path& seed,
                                  Tagger& tagger, const Lexicon& lex) {
  std::lock_guard lock(writer_mu_);
  TsspDb db = snapshot()->db;
  ImportCounts counts = tssl::import_seed(db, seed, tagger, lex);
  if (counts.added > 0 || (!path_.empty() && !std::filesystem::exists(path_)))
    publish(std::move(db));
  return counts;
}

}  // namespace tssl
