#include <fstream>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "support.hpp"
#include "tssl/db_store.hpp"
#include "tssl/error.hpp"
#include "tssl/tssp_db.hpp"

using namespace tssl;
using test::lex;
using test::tagger;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& p, const std::string& s) {
  std::ofstream(p, std::ios::binary) << s;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

}  // namespace

TEST_CASE("learn a pair and detect its duplicate") {
  TsspDb db;
  auto first = learn_pair(db, "John traveled to Boston last week.",
                          "Where did John travel to last week?", tagger(), lex());
  REQUIRE(std::holds_alternative<TsspEntry>(first));
  const auto& e = std::get<TsspEntry>(first);
  CHECK(e.id == 1);
  CHECK(render_sequence(e.x) ==
        "[ARG0/NNP/PER/] [V/VBD//] [ARG1/NNP/LOC/] [TMP/NN//]");
  CHECK(render_sequence(e.y) ==
        "[///where] [V/VBD//] [ARG0/NNP/PER/] [V/VB//] [TMP/NN//]");
  CHECK(e.y.kind == SentenceKind::kInterrogative);
  CHECK(e.origin == Origin::kSeed);
  CHECK_FALSE(e.created_at.empty());

  // Same patterns from different words.
  auto again = learn_pair(db, "Mary flew to London last month.",
                          "Where did John travel to last week?", tagger(), lex());
  REQUIRE(std::holds_alternative<Duplicate>(again));
  CHECK(std::get<Duplicate>(again).existing_id == 1);
  CHECK(db.size() == 1);
}

TEST_CASE("duplicates use literal tag sets") {
  TsspDb db;
  TsspEntry a;
  a.x = test::seq({"[ARG0/NN//]", "[V/VBD//]", "[ARG1/NN//]"});
  a.y = test::seq({"[///what]", "[V/VBD//]", "[ARG0/NN//]", "[V/VB//]"},
                  SentenceKind::kInterrogative);
  db.add(a);
  TsspEntry b = a;
  b.x.items[0].pos = "NNS";
  CHECK(db.find_pair(a.x, a.y) == 1);
  CHECK_FALSE(db.find_pair(b.x, b.y));
}

TEST_CASE("seed import counts and idempotence") {
  TsspDb db;
  const auto c1 = import_seed(db, test::kSeed, tagger(), lex());
  CHECK(c1.added == 33);
  CHECK(c1.failed == 0);
  CHECK(c1.duplicates == 0);
  const auto c2 = import_seed(db, test::kSeed, tagger(), lex());
  CHECK(c2.added == 0);
  CHECK(c2.duplicates == 33);
  CHECK(db.size() == 33);
  CHECK(code_of([&] { import_seed(db, "/nonexistent.jsonl", tagger(), lex()); }) ==
        ErrorCode::kIo);
}

TEST_CASE("bad seed lines are counted, not fatal") {
  test::TempDir dir;
  spit(dir / "seed.jsonl",
       "{\"declarative\": \"John traveled to Boston last week.\", "
       "\"interrogative\": \"Where did John travel to last week?\"}\n"
       "\n"
       "not json\n"
       "{\"declarative\": \"Nobody annotated this.\", \"interrogative\": \"Who?\"}\n"
       "{\"declarative\": \"It rained heavily yesterday.\", "
       "\"interrogative\": \"Where did John travel to last week?\"}\n");
  TsspDb db;
  const auto c = import_seed(db, dir / "seed.jsonl", tagger(), lex());
  CHECK(c.added == 1);
  CHECK(c.failed == 3);
  REQUIRE(c.failures.size() == 3);
  CHECK(c.failures[0].rfind("line 3:", 0) == 0);
}

TEST_CASE("save and load round trip byte for byte") {
  test::TempDir dir;
  TsspDb db;
  import_seed(db, test::kSeed, tagger(), lex());
  db.remove(5);
  db.save(dir / "a.db");
  const TsspDb back = TsspDb::load(dir / "a.db");
  CHECK(back.entries() == db.entries());
  CHECK(back.next_id() == 34);
  back.save(dir / "b.db");
  CHECK(slurp(dir / "a.db") == slurp(dir / "b.db"));
  CHECK(slurp(dir / "a.db") == db.serialize());
  // Removed ids stay retired.
  TsspDb more = back;
  TsspEntry e = db.entries()[0];
  e.id = 0;
  CHECK(more.add(e).id == 34);
}

TEST_CASE("corrupt files name the line") {
  test::TempDir dir;
  TsspDb db;
  import_seed(db, test::kSeed, tagger(), lex());
  const std::string good = db.serialize();

  auto load_text = [&](const std::string& text) {
    try {
      TsspDb::parse(text, "x.db");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kCorruptDb);
      return std::string(e.what());
    }
    return std::string("loaded");
  };
  CHECK(load_text("") == "loaded");
  CHECK(load_text("{\"format\":\"other\"}\n").find("x.db:1") != std::string::npos);
  std::string bad_line = good;
  const auto second = bad_line.find('\n', bad_line.find('\n') + 1);
  bad_line.insert(second + 1, "{oops\n");
  CHECK(load_text(bad_line).find("x.db:3") != std::string::npos);
  std::string bad_tag = good;
  bad_tag.replace(bad_tag.find("[V/VBD//]"), 9, "[V/VERB//]");
  CHECK(load_text(bad_tag) != "loaded");
  std::string dup_id = good;
  dup_id.replace(dup_id.find("\"id\":2"), 6, "\"id\":1");
  CHECK(load_text(dup_id).find("duplicate id") != std::string::npos);

  CHECK(code_of([&] { TsspDb::load(dir / "missing.db"); }) == ErrorCode::kIo);
  CHECK(TsspDb::load(dir / "missing.db", true).empty());
}

TEST_CASE("store: learn publishes a new snapshot and persists") {
  test::TempDir dir;
  auto store = DbStore::open(dir / "s.db");
  const auto before = store->snapshot();
  CHECK(before->db.empty());
  store->learn("John traveled to Boston last week.",
               "Where did John travel to last week?", tagger(), lex(),
               Origin::kTaught);
  CHECK(before->db.empty());  // old snapshot untouched
  CHECK(store->snapshot()->db.size() == 1);
  CHECK(store->snapshot()->db.entries()[0].origin == Origin::kTaught);
  CHECK(TsspDb::load(dir / "s.db").size() == 1);

  const auto dup = store->learn("John traveled to Boston last week.",
                                "Where did John travel to last week?",
                                tagger(), lex(), Origin::kTaught);
  CHECK(std::holds_alternative<Duplicate>(dup));
  CHECK(store->snapshot()->db.size() == 1);
}

TEST_CASE("store: concurrent readers during writes") {
  test::TempDir dir;
  auto store = DbStore::open(dir / "c.db");
  const auto pairs = load_seed_pairs(test::kSeed);
  std::atomic<bool> done{false};
  std::atomic<int> reads{0};
  std::atomic<bool> shrank{false};
  std::vector<std::thread> readers;
  for (int r = 0; r < 4; ++r)
    readers.emplace_back([&] {
      std::size_t last = 0;
      while (!done) {
        const auto snap = store->snapshot();
        if (snap->db.size() < last) shrank = true;
        last = snap->db.size();
        ++reads;
      }
    });
  // The fixture tagger is read-only, so writers may share it.
  std::vector<std::thread> writers;
  for (int w = 0; w < 3; ++w)
    writers.emplace_back([&, w] {
      for (std::size_t i = w; i < pairs.size(); i += 3)
        store->learn(pairs[i].declarative, pairs[i].interrogative, tagger(),
                     lex(), Origin::kSeed);
    });
  for (auto& t : writers) t.join();
  done = true;
  for (auto& t : readers) t.join();
  CHECK(store->snapshot()->db.size() == 33);
  CHECK(TsspDb::load(dir / "c.db").size() == 33);
  CHECK(reads > 0);
  CHECK_FALSE(shrank);
}
