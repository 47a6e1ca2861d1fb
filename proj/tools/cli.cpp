#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tssl/db_store.hpp"
#include "tssl/error.hpp"
#include "tssl/lexicon.hpp"
#include "tssl/qap_generator.hpp"
#include "tssl/service.hpp"
#include "tssl/tagger.hpp"
#include "tssl/teach_queue.hpp"
#include "tssl/text_util.hpp"

namespace fs = std::filesystem;
using namespace tssl;

namespace {

struct Options {
  std::string db = "tssp.db";
  std::string tagger = std::string("fixture:") + TSSL_FIXTURE_TAGS;
  std::string lexicon;

  std::string seed;

  std::string input;
  std::string out_path;
  bool timing = false;
  bool pretty = false;
  bool verbose = false;

  std::string sentence;

  std::string host = "127.0.0.1";
  int port = 8080;
};

struct Env {
  Lexicon lex;
  std::unique_ptr<Tagger> tagger;
};

Env make_env(const Options& o) {
  Env env;
  env.lex = Lexicon::load(o.lexicon.empty() ? Lexicon::default_dir()
                                            : fs::path(o.lexicon));
  env.tagger = make_tagger(o.tagger);
  return env;
}

void print_qap(std::ostream& out, const Qap& q, bool pretty) {
  if (!pretty) {
    out << qap_record(q).dump() << "\n";
    return;
  }
  out << "Q: " << q.question << "\n"
      << "A: " << q.answer << "\n"
      << "   entry " << q.entry_id << ", "
      << match_class_name(q.match_class) << ", from: " << q.source_sentence
      << "\n";
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& i : items) {
    if (!s.empty()) s += ' ';
    s += i;
  }
  return s;
}

int cmd_learn(const Options& o, std::ostream& out, std::ostream& err) {
  if (!fs::exists(o.seed)) {
    err << "tssl: seed file not found: " << o.seed << "\n";
    return 2;
  }
  Env env = make_env(o);
  auto store = DbStore::open(o.db);
  const ImportCounts c = store->import_seed(o.seed, *env.tagger, env.lex);
  for (const auto& f : c.failures) err << "tssl: " << f << "\n";
  out << "added " << c.added << ", duplicates " << c.duplicates
      << ", failed " << c.failed << " (db now " << store->snapshot()->db.size()
      << " entries)\n";
  return c.failed == 0 ? 0 : 1;
}

int cmd_generate(const Options& o, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  if (!fs::exists(o.db)) {
    err << "tssl: no DB at " << o.db << " (run 'tssl learn' first)\n";
    return 2;
  }
  std::ifstream file;
  std::istream* src = &in;
  if (!o.input.empty() && o.input != "-") {
    file.open(o.input);
    if (!file) {
      err << "tssl: cannot read " << o.input << "\n";
      return 2;
    }
    src = &file;
  }
  std::ofstream out_file;
  std::ostream* dst = &out;
  if (!o.out_path.empty()) {
    out_file.open(o.out_path, std::ios::trunc);
    if (!out_file) {
      err << "tssl: cannot write " << o.out_path << "\n";
      return 2;
    }
    dst = &out_file;
  }

  Env env = make_env(o);
  auto store = DbStore::open(o.db);
  TeachQueue queue(TeachQueue::log_path_for(o.db));
  const auto snap = store->snapshot();

  std::size_t n = 0, failures = 0, queued = 0;
  double tag_total = 0, core_total = 0;
  std::string line;
  while (std::getline(*src, line)) {
    if (collapse_whitespace(line).empty()) continue;
    ++n;
    Generation g;
    try {
      g = generate(line, snap->index, env.lex, *env.tagger);
    } catch (const Error& e) {
      ++failures;
      err << "tssl: sentence " << n << ": " << error_code_name(e.code())
          << ": " << e.what() << "\n";
      continue;
    }
    for (const auto& q : g.qaps) print_qap(*dst, q, o.pretty);
    for (auto& r : g.teach_requests) {
      queue.open(std::move(r));
      ++queued;
    }
    if (o.verbose)
      for (const auto& note : g.notes)
        err << "tssl: sentence " << n << ": " << note << "\n";
    if (o.timing) {
      tag_total += g.tag_seconds;
      core_total += g.core_seconds;
      err << std::fixed << std::setprecision(3) << "timing: sentence " << n
          << " tag " << g.tag_seconds * 1e3 << " ms, core "
          << g.core_seconds * 1e3 << " ms\n";
    }
  }
  dst->flush();
  if (o.verbose && queued > 0)
    err << "tssl: " << queued << " teach request(s) queued\n";
  if (o.timing && n > 0)
    err << std::fixed << std::setprecision(3) << "timing: " << n
        << " sentences, mean core " << core_total * 1e3 / n
        << " ms, mean tag " << tag_total * 1e3 / n << " ms\n";
  return failures == 0 ? 0 : 1;
}

int cmd_teach(const Options& o, std::istream& in, std::ostream& out,
              std::ostream& err) {
  Env env = make_env(o);
  auto store = DbStore::open(o.db);
  TeachQueue queue(TeachQueue::log_path_for(o.db));

  std::vector<TeachRequest> todo;
  if (!o.sentence.empty()) {
    Generation g =
        generate(o.sentence, store->snapshot()->index, env.lex, *env.tagger);
    for (auto& r : g.teach_requests) todo.push_back(queue.open(std::move(r)));
    if (todo.empty()) {
      out << "Nothing to teach; current QAPs:\n";
      for (const auto& q : g.qaps) print_qap(out, q, true);
      return 0;
    }
  } else {
    todo = queue.open_requests();
    if (todo.empty()) {
      out << "The teach queue is empty.\n";
      return 0;
    }
  }

  int status = 0;
  for (const auto& r : todo) {
    out << "\n#" << r.id << " " << r.sentence_text << "\n"
        << "   frame " << r.frame_index << ": " << join(r.built_sequence)
        << "\n"
        << "question> " << std::flush;
    std::string answer;
    if (!std::getline(in, answer)) {
      out << "\n";
      break;
    }
    if (collapse_whitespace(answer).empty()) {
      out << "left open\n";
      continue;
    }
    try {
      auto outcome = store->learn(r.sentence_text, answer, *env.tagger,
                                  env.lex, Origin::kTaught, r.frame_index);
      if (auto* e = std::get_if<TsspEntry>(&outcome)) {
        queue.resolve(r.id, e->id);
        out << "learned entry " << e->id << ": " << join(render_items(e->x))
            << " => " << join(render_items(e->y)) << "\n";
      } else {
        out << "duplicate of entry " << std::get<Duplicate>(outcome).existing_id
            << "\n";
      }
      const Generation g = generate(r.sentence_text, store->snapshot()->index,
                                    env.lex, *env.tagger);
      for (const auto& q : g.qaps) print_qap(out, q, true);
    } catch (const Error& e) {
      status = 1;
      err << error_code_name(e.code()) << ": " << e.what() << "\n";
    }
  }
  return status;
}

int cmd_serve(const Options& o, std::ostream& out, std::ostream& err) {
  Env env = make_env(o);
  auto store = DbStore::open(o.db);
  TeachQueue queue(TeachQueue::log_path_for(o.db));
  Service service(*store, queue, *env.tagger, env.lex);
  out << "serving " << o.db << " on http://" << o.host << ":" << o.port
      << std::endl;
  if (!service.run(o.host, o.port)) {
    err << "tssl: cannot bind " << o.host << ":" << o.port << "\n";
    return 2;
  }
  return 0;
}

int cmd_db_list(const Options& o, std::ostream& out, std::ostream& err) {
  if (!fs::exists(o.db)) {
    err << "tssl: no DB at " << o.db << "\n";
    return 2;
  }
  const TsspDb db = TsspDb::load(o.db);
  for (const auto& e : db.entries()) {
    if (o.pretty)
      out << std::setw(4) << e.id << "  " << join(render_items(e.x))
          << "  =>  " << join(render_items(e.y)) << "\n";
    else
      out << entry_record(e).dump() << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Learns question patterns from sentence pairs and generates "
               "question-answer pairs."};
  app.require_subcommand(1);
  app.add_option("--db", o.db, "pattern DB file (TSS_DB overrides)")
      ->capture_default_str();
  app.add_option("--tagger", o.tagger,
                 "fixture:FILE | external:http://HOST:PORT | external:exec:CMD")
      ->capture_default_str();
  app.add_option("--lexicon", o.lexicon, "lexicon table directory");

  auto* learn = app.add_subcommand("learn", "import a seed pair file");
  learn->add_option("seed", o.seed, "JSONL of {declarative, interrogative}")
      ->required();

  auto* gen = app.add_subcommand("generate", "generate QAPs, one per line");
  gen->add_option("input", o.input, "one sentence per line (default stdin)");
  gen->add_option("--out", o.out_path, "write records here instead of stdout");
  gen->add_flag("--timing", o.timing, "per-sentence timing on stderr");
  gen->add_flag("--pretty", o.pretty, "human-readable output");
  gen->add_flag("-v,--verbose", o.verbose, "explain discarded frames");

  auto* teach = app.add_subcommand("teach", "answer open teach requests");
  teach->add_option("--sentence", o.sentence, "teach for this sentence only");

  auto* serve = app.add_subcommand("serve", "run the HTTP service");
  serve->add_option("--host", o.host)->capture_default_str();
  serve->add_option("--port", o.port)->capture_default_str();

  auto* db = app.add_subcommand("db", "inspect the pattern DB");
  db->require_subcommand(1);
  auto* db_list = db->add_subcommand("list", "print all entries");
  db_list->add_flag("--pretty", o.pretty, "one aligned line per entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (const char* env = std::getenv("TSS_DB"); env && *env) o.db = env;

  try {
    if (*learn) return cmd_learn(o, out, err);
    if (*gen) return cmd_generate(o, in, out, err);
    if (*teach) return cmd_teach(o, in, out, err);
    if (*serve) return cmd_serve(o, out, err);
    if (*db_list) return cmd_db_list(o, out, err);
  } catch (const Error& e) {
    err << "tssl: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "tssl: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
