#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <vector>

#include "tssl/qap_generator.hpp"

namespace tssl {

// Pending teaching requests, kept as an append-only log next to the DB
// (<db>.teach.jsonl) so the CLI and the service see the same queue.
// Each line is {"op": "open"|"resolve"|"skip", ...}; state is the replay.
class TeachQueue {
 public:
  // An empty path keeps the queue in memory.
  explicit TeachQueue(std::filesystem::path log_path = {});

  static std::filesystem::path log_path_for(const std::filesystem::path& db);

  // Returns the stored request. An open request for the same sentence and
  // frame is returned instead of adding a second one.
  TeachRequest open(TeachRequest request);
  // Throws Error{kNotFound}.
  TeachRequest resolve(std::int64_t id, std::int64_t entry_id);
  TeachRequest skip(std::int64_t id);

  std::optional<TeachRequest> find(std::int64_t id) const;
  std::vector<TeachRequest> open_requests() const;
  std::vector<TeachRequest> all() const;

 private:
  void append(const nlohmann::ordered_json& rec);
  TeachRequest& require(std::int64_t id);

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::vector<TeachRequest> requests_;
  std::int64_t next_id_ = 1;
};

}  // namespace tssl
