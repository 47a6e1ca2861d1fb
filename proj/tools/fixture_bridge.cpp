// Stand-in for the Python tagger bridge: answers from a fixture corpus.
//   stdio: one sentence per line in, one wire record per line out
//   --port N: POST /tag {"text": ...}
// A sentence missing from the corpus gets {"error": ...}.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"
#include "tssl/error.hpp"
#include "tssl/tagger.hpp"

namespace {

nlohmann::ordered_json answer(tssl::FixtureTagger& tagger,
                              const std::string& text) {
  try {
    return tssl::to_wire(tagger.tag(text));
  } catch (const tssl::Error& e) {
    nlohmann::ordered_json err;
    err["error"] = e.what();
    err["text"] = text;
    return err;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixture-backed tagger bridge"};
  std::string corpus;
  int port = 0;
  std::string host = "127.0.0.1";
  app.add_option("corpus", corpus, "tagged-sentence JSONL")->required();
  app.add_option("--port", port, "serve HTTP instead of stdio");
  app.add_option("--host", host);
  CLI11_PARSE(app, argc, argv);

  std::unique_ptr<tssl::FixtureTagger> tagger;
  try {
    tagger = tssl::FixtureTagger::from_file(corpus);
  } catch (const std::exception& e) {
    std::cerr << "fixture_bridge: " << e.what() << "\n";
    return 2;
  }

  if (port > 0) {
    httplib::Server server;
    server.Post("/tag", [&](const httplib::Request& req, httplib::Response& res) {
      nlohmann::ordered_json out;
      try {
        out = answer(*tagger, nlohmann::json::parse(req.body).at("text"));
      } catch (const nlohmann::json::exception& e) {
        out["error"] = std::string("malformed request: ") + e.what();
      }
      res.set_content(out.dump(), "application/json");
    });
    return server.listen(host, port) ? 0 : 2;
  }

  std::string line;
  while (std::getline(std::cin, line))
    std::cout << answer(*tagger, line).dump() << std::endl;
  return 0;
}
