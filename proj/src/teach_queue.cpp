#include "tssl/teach_queue.hpp"

#include <algorithm>
#include <fstream>

#include "tssl/error.hpp"
#include "tssl/text_util.hpp"

namespace tssl {

TeachQueue::TeachQueue(std::filesystem::path log_path)
    : path_(std::move(log_path)) {
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;  // nothing queued yet
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (collapse_whitespace(line).empty()) continue;
    try {
      const auto rec = nlohmann::json::parse(line);
      const auto op = rec.at("op").get<std::string>();
      if (op == "open") {
        TeachRequest r = teach_request_from_record(rec.at("request"));
        next_id_ = std::max(next_id_, r.id + 1);
        requests_.push_back(std::move(r));
        continue;
      }
      const auto id = rec.at("id").get<std::int64_t>();
      auto it = std::find_if(requests_.begin(), requests_.end(),
                             [&](const TeachRequest& r) { return r.id == id; });
      if (it == requests_.end()) continue;
      if (op == "resolve") {
        it->status = TeachStatus::kResolved;
        it->entry_id = rec.at("entry_id").get<std::int64_t>();
      } else if (op == "skip") {
        it->status = TeachStatus::kSkipped;
      }
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kCorruptDb, path_.string() + ":" +
                                             std::to_string(line_no) + ": " +
                                             e.what());
    }
  }
}

std::filesystem::path TeachQueue::log_path_for(
    const std::filesystem::path& db) {
  auto p = db;
  p += ".teach.jsonl";
  return p;
}

void TeachQueue::append(const nlohmann::ordered_json& rec) {
  if (path_.empty()) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(ErrorCode::kIo, "cannot append to " + path_.string());
  out << rec.dump() << '\n';
}

TeachRequest TeachQueue::open(TeachRequest request) {
  std::lock_guard lock(mu_);
  for (const auto& r : requests_)
    if (r.status == TeachStatus::kOpen &&
        r.sentence_text == request.sentence_text &&
        r.frame_index == request.frame_index)
      return r;
  request.id = next_id_++;
  request.status = TeachStatus::kOpen;
  request.entry_id.reset();
  if (request.created_at.empty()) request.created_at = utc_timestamp();
  nlohmann::ordered_json rec;
  rec["op"] = "open";
  rec["request"] = teach_request_record(request);
  append(rec);
  requests_.push_back(request);
  return request;
}

TeachRequest& TeachQueue::require(std::int64_t id) {
  for (auto& r : requests_)
    if (r.id == id) return r;
  throw Error(ErrorCode::kNotFound,
              "no teach request with id " + std::to_string(id));
}

TeachRequest TeachQueue::resolve(std::int64_t id, std::int64_t entry_id) {
  std::lock_guard lock(mu_);
  TeachRequest& r = require(id);
  nlohmann::ordered_json rec;
  rec["op"] = "resolve";
  rec["id"] = id;
  rec["entry_id"] = entry_id;
  append(rec);
  r.status = TeachStatus::kResolved;
  r.entry_id = entry_id;
  return r;
}

TeachRequest TeachQueue::skip(std::int64_t id) {
  std::lock_guard lock(mu_);
  TeachRequest& r = require(id);
  nlohmann::ordered_json rec;
  rec["op"] = "skip";
  rec["id"] = id;
  append(rec);
  r.status = TeachStatus::kSkipped;
  return r;
}

std::optional<TeachRequest> TeachQueue::find(std::int64_t id) const {
  std::lock_guard lock(mu_);
  for (const auto& r : requests_)
    if (r.id == id) return r;
  return std::nullopt;
}

std::vector<TeachRequest> TeachQueue::open_requests() const {
  std::lock_guard lock(mu_);
  std::vector<TeachRequest> out;
  for (const auto& r : requests_)
    if (r.status == TeachStatus::kOpen) out.push_back(r);
  return out;
}

std::vector<TeachRequest> TeachQueue::all() const {
  std::lock_guard lock(mu_);
  return requests_;
}

}  // namespace tssl
