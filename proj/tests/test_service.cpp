#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "support.hpp"
#include "tssl/service.hpp"

using namespace tssl;
using json = nlohmann::json;
using test::lex;
using test::tagger;

namespace {

const std::map<std::string, std::string> kNoQuery;

struct Fixture {
  test::TempDir dir;
  std::unique_ptr<DbStore> store;
  TeachQueue queue;
  Service service;

  Fixture()
      : store(DbStore::open(dir / "svc.db")),
        queue(TeachQueue::log_path_for(dir / "svc.db")),
        service(*store, queue, tagger(), lex()) {
    store->learn("John traveled to Boston last week.",
                 "Where did John travel to last week?", tagger(), lex(),
                 Origin::kSeed);
  }

  std::pair<int, json> call(const std::string& method, const std::string& path,
                            const json& body = nullptr,
                            const std::map<std::string, std::string>& query = kNoQuery) {
    const auto r = service.handle(method, path, query,
                                  body.is_null() ? "" : body.dump());
    return {r.status, json::parse(r.body)};
  }
};

}  // namespace

TEST_CASE("status mapping") {
  CHECK(http_status_for(ErrorCode::kBadRequest) == 400);
  CHECK(http_status_for(ErrorCode::kMalformedTagSet) == 400);
  CHECK(http_status_for(ErrorCode::kNotFound) == 404);
  CHECK(http_status_for(ErrorCode::kUnmergeableSentence) == 422);
  CHECK(http_status_for(ErrorCode::kSchemaViolation) == 502);
  CHECK(http_status_for(ErrorCode::kTaggerUnavailable) == 503);
  CHECK(http_status_for(ErrorCode::kCorruptDb) == 500);
  CHECK(json::parse(error_body(ErrorCode::kNotFound, "x")) ==
        json{{"error", {{"code", "not_found"}, {"message", "x"}}}});
}

TEST_CASE("generate") {
  Fixture f;
  auto [status, body] =
      f.call("POST", "/generate", {{"text", "Mary flew to London last month."}});
  CHECK(status == 200);
  REQUIRE(body["qaps"].size() == 1);
  CHECK(body["qaps"][0]["question"] == "Where did Mary fly to last month?");
  CHECK(body["qaps"][0]["answer"] == "London");
  CHECK(body["qaps"][0]["entry_id"] == 1);
  CHECK(body["teach_requests"].empty());
}

TEST_CASE("teach round trip") {
  Fixture f;
  auto [s1, gen] = f.call("POST", "/generate",
                          {{"text", "The girls walked to the park yesterday."}});
  CHECK(s1 == 200);
  CHECK(gen["qaps"].empty());
  REQUIRE(gen["teach_requests"].size() == 1);
  const auto id = gen["teach_requests"][0]["id"].get<int>();
  CHECK(gen["teach_requests"][0]["status"] == "open");

  // Asking again does not queue a second copy.
  f.call("POST", "/generate", {{"text", "The girls walked to the park yesterday."}});
  auto [s2, queue] = f.call("GET", "/teach/queue");
  CHECK(s2 == 200);
  REQUIRE(queue["requests"].size() == 1);

  auto [s3, taught] = f.call(
      "POST", "/teach",
      {{"request_id", id}, {"interrogative", "Where did the girls walk to yesterday?"}});
  CHECK(s3 == 200);
  CHECK(taught["status"] == "entry");
  CHECK(taught["entry"]["id"] == 2);
  CHECK(taught["entry"]["origin"] == "taught");
  REQUIRE(taught["qaps_now"].size() == 1);
  CHECK(taught["qaps_now"][0]["question"] == "Where did the girls walk to yesterday?");
  CHECK(taught["qaps_now"][0]["answer"] == "the park");
  CHECK(f.call("GET", "/teach/queue").second["requests"].empty());
  CHECK(f.queue.find(id)->status == TeachStatus::kResolved);
  CHECK(*f.queue.find(id)->entry_id == 2);

  // The new pattern now serves other sentences too.
  auto [s4, boys] =
      f.call("POST", "/generate", {{"text", "The boys walked to the river yesterday."}});
  CHECK(boys["qaps"][0]["question"] == "Where did the boys walk to yesterday?");
}

TEST_CASE("teach: duplicate and unmergeable") {
  Fixture f;
  auto [s1, gen] = f.call("POST", "/generate",
                          {{"text", "The boys walked to the river yesterday."}});
  const auto id = gen["teach_requests"][0]["id"].get<int>();
  auto [s2, first] = f.call(
      "POST", "/teach",
      {{"request_id", id}, {"interrogative", "Where did the girls walk to yesterday?"}});
  CHECK(first["status"] == "entry");

  auto [s3, gen2] = f.call("POST", "/generate",
                           {{"text", "The girls walked to the park yesterday."}});
  CHECK(gen2["teach_requests"].empty());  // perfect now

  f.queue.open([&] {
    TeachRequest r;
    r.sentence_text = "The girls walked to the park yesterday.";
    return r;
  }());
  const auto open_id = f.queue.open_requests().back().id;
  auto [s4, dup] = f.call(
      "POST", "/teach",
      {{"request_id", open_id},
       {"interrogative", "Where did the girls walk to yesterday?"}});
  CHECK(s4 == 200);
  CHECK(dup["status"] == "duplicate");
  CHECK(dup["existing_id"] == first["entry"]["id"]);
  CHECK(dup["qaps_now"].size() == 1);
  CHECK(f.queue.find(open_id)->status == TeachStatus::kOpen);

  auto [s5, bad] = f.call("POST", "/teach",
                          {{"request_id", open_id},
                           {"interrogative", "Who met whom and paid whom?"}});
  CHECK(s5 == 422);
  CHECK(bad["status"] == "error");
  CHECK(bad["error"]["code"] == "unmergeable_sentence");
  CHECK(f.queue.find(open_id)->status == TeachStatus::kOpen);
}

TEST_CASE("request errors") {
  Fixture f;
  auto check = [&](int status, const std::string& code, const std::string& method,
                   const std::string& path, const std::string& raw,
                   const std::map<std::string, std::string>& q = kNoQuery) {
    const auto r = f.service.handle(method, path, q, raw);
    CHECK(r.status == status);
    CHECK(json::parse(r.body)["error"]["code"] == code);
  };
  check(400, "bad_request", "POST", "/generate", "{not json");
  check(400, "bad_request", "POST", "/generate", "[1,2]");
  check(400, "bad_request", "POST", "/generate", R"({"txt":"x"})");
  check(400, "bad_request", "POST", "/teach", R"({"request_id":"1","interrogative":"x"})");
  check(400, "bad_request", "POST", "/teach", R"({"request_id":1,"interrogative":"  "})");
  check(404, "not_found", "POST", "/teach", R"({"request_id":77,"interrogative":"Who?"})");
  check(404, "not_found", "GET", "/nope", "");
  check(404, "not_found", "GET", "/generate", "");
  check(503, "tagger_unavailable", "POST", "/generate", R"({"text":"Nobody annotated this."})");
  check(400, "bad_request", "GET", "/db/entries", "", {{"limit", "abc"}});
  check(400, "bad_request", "GET", "/db/entries", "", {{"offset", "-1"}});
}

TEST_CASE("db entries and health") {
  Fixture f;
  f.store->import_seed(test::kSeed, tagger(), lex());
  auto [s1, page] = f.call("GET", "/db/entries", nullptr, {{"offset", "1"}, {"limit", "2"}});
  CHECK(s1 == 200);
  CHECK(page["total"] == 33);
  CHECK(page["offset"] == 1);
  CHECK(page["limit"] == 2);
  REQUIRE(page["entries"].size() == 2);
  CHECK(page["entries"][0]["id"] == 2);
  CHECK(page["entries"][0]["x"].is_array());
  auto [s2, all] = f.call("GET", "/db/entries");
  CHECK(all["entries"].size() == 33);
  CHECK(all["limit"] == 50);
  auto [s3, past] = f.call("GET", "/db/entries", nullptr, {{"offset", "100"}});
  CHECK(past["entries"].empty());

  auto [s4, health] = f.call("GET", "/health");
  CHECK(s4 == 200);
  CHECK(health["status"] == "ok");
  CHECK(health["entries"] == 33);
  CHECK(health["open_requests"] == 0);
}

TEST_CASE("concurrent generate while teaching") {
  Fixture f;
  const auto pairs = load_seed_pairs(test::kSeed);
  std::atomic<bool> done{false};
  std::atomic<int> bad{0};
  std::vector<std::thread> readers;
  for (int r = 0; r < 4; ++r)
    readers.emplace_back([&] {
      while (!done) {
        const auto reply = f.service.handle(
            "POST", "/generate", kNoQuery,
            R"({"text":"Mary flew to London last month."})");
        const auto body = json::parse(reply.body);
        if (reply.status != 200 || body["qaps"].empty() ||
            body["qaps"][0]["question"] != "Where did Mary fly to last month?")
          ++bad;
      }
    });
  for (const auto& p : pairs)
    f.store->learn(p.declarative, p.interrogative, tagger(), lex(), Origin::kSeed);
  done = true;
  for (auto& t : readers) t.join();
  CHECK(bad == 0);
}

TEST_CASE("live HTTP server") {
  Fixture f;
  std::thread th([&] { f.service.run("127.0.0.1", 0); });
  for (int i = 0; i < 500 && f.service.port() == 0; ++i)
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  REQUIRE(f.service.port() > 0);

  httplib::Client client("127.0.0.1", f.service.port());
  auto health = client.Get("/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(health->get_header_value("Access-Control-Allow-Origin") == "*");

  auto gen = client.Post("/generate", R"({"text":"Mary flew to London last month."})",
                         "application/json");
  REQUIRE(gen);
  CHECK(gen->status == 200);
  CHECK(json::parse(gen->body)["qaps"][0]["answer"] == "London");

  auto page = client.Get("/db/entries?offset=0&limit=1");
  REQUIRE(page);
  CHECK(json::parse(page->body)["entries"].size() == 1);

  auto bad = client.Post("/generate", "{", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);

  auto pre = client.Options("/teach");
  REQUIRE(pre);
  CHECK(pre->status == 204);

  f.service.stop();
  th.join();
}
