#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <string>

#include "tssl/db_store.hpp"
#include "tssl/error.hpp"
#include "tssl/lexicon.hpp"
#include "tssl/tagger.hpp"
#include "tssl/teach_queue.hpp"

namespace httplib {
class Server;
}

namespace tssl {

struct HttpReply {
  int status = 200;
  std::string body;  // JSON
};

int http_status_for(ErrorCode code);

// Error body: {"error": {"code": "...", "message": "..."}}
std::string error_body(ErrorCode code, const std::string& message);

// HTTP front end for generation and teaching.
//   POST /generate      {text}
//   GET  /teach/queue
//   POST /teach         {request_id, interrogative}
//   GET  /db/entries    ?offset=&limit=
//   GET  /health
class Service {
 public:
  Service(DbStore& store, TeachQueue& queue, Tagger& tagger,
          const Lexicon& lex)
      : store_(store), queue_(queue), tagger_(tagger), lex_(lex) {}

  // Transport-free dispatch; run() forwards every request here.
  HttpReply handle(const std::string& method, const std::string& path,
                   const std::map<std::string, std::string>& query,
                   const std::string& body);

  // Blocks until stop() or a bind failure (returns false). Port 0 picks a
  // free port; port() reports it once bound.
  bool run(const std::string& host, int port);
  void stop();
  int port() const { return port_.load(); }

 private:
  HttpReply generate(const std::string& body);
  HttpReply teach_queue();
  HttpReply teach(const std::string& body);
  HttpReply db_entries(const std::map<std::string, std::string>& query);
  HttpReply health();

  DbStore& store_;
  TeachQueue& queue_;
  Tagger& tagger_;
  const Lexicon& lex_;
  std::mutex server_mu_;
  httplib::Server* server_ = nullptr;  // set while run() is active
  std::atomic<int> port_{0};
};

}  // namespace tssl
