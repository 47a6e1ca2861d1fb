#include "tssl/service.hpp"

#include "httplib.h"
#include "tssl/error.hpp"
#include "tssl/qap_generator.hpp"

namespace tssl {

using ojson = nlohmann::ordered_json;

int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadRequest:
    case ErrorCode::kMalformedTagSet: return 400;
    case ErrorCode::kNotFound: return 404;
    case ErrorCode::kUnmergeableSentence:
    case ErrorCode::kUnresolvableTagSet:
    case ErrorCode::kEmptyAnswer: return 422;
    case ErrorCode::kSchemaViolation: return 502;
    case ErrorCode::kTaggerUnavailable: return 503;
    case ErrorCode::kCorruptDb:
    case ErrorCode::kIo: return 500;
  }
  return 500;
}

std::string error_body(ErrorCode code, const std::string& message) {
  ojson body;
  body["error"]["code"] = error_code_name(code);
  body["error"]["message"] = message;
  return body.dump();
}

namespace {

HttpReply ok(const ojson& body) { return {200, body.dump()}; }

HttpReply fail(ErrorCode code, const std::string& message) {
  return {http_status_for(code), error_body(code, message)};
}

nlohmann::json parse_body(const std::string& body) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kBadRequest, "body is not valid JSON");
  }
  if (!j.is_object()) throw Error(ErrorCode::kBadRequest, "body must be an object");
  return j;
}

std::string string_field(const nlohmann::json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_string())
    throw Error(ErrorCode::kBadRequest,
                std::string("field '") + name + "' must be a string");
  return j[name].get<std::string>();
}

std::size_t query_number(const std::map<std::string, std::string>& query,
                         const std::string& name, std::size_t fallback) {
  auto it = query.find(name);
  if (it == query.end() || it->second.empty()) return fallback;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(it->second, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != it->second.size() || it->second[0] == '-')
    throw Error(ErrorCode::kBadRequest, "'" + name + "' must be a number");
  return static_cast<std::size_t>(v);
}

ojson qap_list(const std::vector<Qap>& qaps) {
  auto out = ojson::array();
  for (const auto& q : qaps) out.push_back(qap_record(q));
  return out;
}

}  // namespace

HttpReply Service::handle(const std::string& method, const std::string& path,
                          const std::map<std::string, std::string>& query,
                          const std::string& body) {
  try {
    if (path == "/generate" && method == "POST") return generate(body);
    if (path == "/teach/queue" && method == "GET") return teach_queue();
    if (path == "/teach" && method == "POST") return teach(body);
    if (path == "/db/entries" && method == "GET") return db_entries(query);
    if (path == "/health" && method == "GET") return health();
    return fail(ErrorCode::kNotFound, "no route for " + method + " " + path);
  } catch (const Error& e) {
    return fail(e.code(), e.what());
  } catch (const std::exception& e) {
    return fail(ErrorCode::kIo, e.what());
  }
}

HttpReply Service::generate(const std::string& body) {
  const std::string text = string_field(parse_body(body), "text");
  const auto snap = store_.snapshot();
  Generation g = tssl::generate(text, snap->index, lex_, tagger_);
  auto requests = ojson::array();
  for (auto& r : g.teach_requests)
    requests.push_back(teach_request_record(queue_.open(std::move(r))));
  ojson out;
  out["qaps"] = qap_list(g.qaps);
  out["teach_requests"] = std::move(requests);
  return ok(out);
}

HttpReply Service::teach_queue() {
  auto requests = ojson::array();
  for (const auto& r : queue_.open_requests())
    requests.push_back(teach_request_record(r));
  ojson out;
  out["requests"] = std::move(requests);
  return ok(out);
}

HttpReply Service::teach(const std::string& body) {
  const auto j = parse_body(body);
  if (!j.contains("request_id") || !j["request_id"].is_number_integer())
    throw Error(ErrorCode::kBadRequest, "field 'request_id' must be an integer");
  const std::int64_t id = j["request_id"].get<std::int64_t>();
  const std::string interrogative = string_field(j, "interrogative");
  if (collapse_whitespace(interrogative).empty())
    throw Error(ErrorCode::kBadRequest, "interrogative sentence is empty");
  const auto request = queue_.find(id);
  if (!request)
    throw Error(ErrorCode::kNotFound,
                "no teach request with id " + std::to_string(id));

  ojson out;
  try {
    auto outcome = store_.learn(request->sentence_text, interrogative, tagger_,
                                lex_, Origin::kTaught, request->frame_index);
    if (auto* entry = std::get_if<TsspEntry>(&outcome)) {
      queue_.resolve(id, entry->id);
      out["status"] = "entry";
      out["entry"] = entry_record(*entry);
    } else {
      out["status"] = "duplicate";
      out["existing_id"] = std::get<Duplicate>(outcome).existing_id;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnmergeableSentence) throw;
    ojson err;
    err["status"] = "error";
    err["error"]["code"] = error_code_name(e.code());
    err["error"]["message"] = e.what();
    return {http_status_for(e.code()), err.dump()};
  }
  const auto snap = store_.snapshot();
  out["qaps_now"] =
      qap_list(tssl::generate(request->sentence_text, snap->index, lex_, tagger_)
                   .qaps);
  return ok(out);
}

HttpReply Service::db_entries(const std::map<std::string, std::string>& query) {
  const std::size_t offset = query_number(query, "offset", 0);
  const std::size_t limit = query_number(query, "limit", 50);
  const auto snap = store_.snapshot();
  const auto& entries = snap->db.entries();
  auto list = ojson::array();
  for (std::size_t i = offset; i < entries.size() && i - offset < limit; ++i)
    list.push_back(entry_record(entries[i]));
  ojson out;
  out["total"] = entries.size();
  out["offset"] = offset;
  out["limit"] = limit;
  out["entries"] = std::move(list);
  return ok(out);
}

HttpReply Service::health() {
  ojson out;
  out["status"] = "ok";
  out["entries"] = store_.snapshot()->db.size();
  out["open_requests"] = queue_.open_requests().size();
  return ok(out);
}

bool Service::run(const std::string& host, int port) {
  httplib::Server server;
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const HttpReply reply = handle(req.method, req.path, query, req.body);
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  };
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Get(".*", forward);
  server.Post(".*", forward);
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  if (port == 0) {
    port = server.bind_to_any_port(host);
    if (port <= 0) return false;
  } else if (!server.bind_to_port(host, port)) {
    return false;
  }
  {
    std::lock_guard lock(server_mu_);
    server_ = &server;
  }
  port_ = port;
  const bool ok = server.listen_after_bind();
  std::lock_guard lock(server_mu_);
  server_ = nullptr;
  port_ = 0;
  return ok;
}

void Service::stop() {
  std::lock_guard lock(server_mu_);
  if (server_) server_->stop();
}

}  // namespace tssl
