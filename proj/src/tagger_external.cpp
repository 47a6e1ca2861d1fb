#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "httplib.h"
#include "tssl/error.hpp"
#include "tssl/tagger.hpp"

namespace tssl {

namespace {

[[noreturn]] void unavailable(const std::string& what) {
  throw Error(ErrorCode::kTaggerUnavailable, what);
}

TaggedSentence parse_reply(const std::string& reply) {
  nlohmann::json rec;
  try {
    rec = nlohmann::json::parse(reply);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation,
                std::string("tagger reply is not JSON: ") + e.what());
  }
  return from_wire(rec);
}

}  // namespace

ProcessTagger::ProcessTagger(std::string command)
    : command_(std::move(command)) {
  start();
}

ProcessTagger::~ProcessTagger() { stop(); }

void ProcessTagger::start() {
  int in_pipe[2];
  int out_pipe[2];
  if (pipe(in_pipe) != 0) unavailable("pipe failed");
  if (pipe(out_pipe) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    unavailable("pipe failed");
  }
  const pid_t pid = fork();
  if (pid < 0) unavailable("fork failed");
  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  pid_ = pid;
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  // A dead bridge must surface as an error, not SIGPIPE.
  signal(SIGPIPE, SIG_IGN);
}

void ProcessTagger::stop() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  to_child_ = from_child_ = -1;
  if (pid_ > 0) {
    int status = 0;
    if (waitpid(pid_, &status, WNOHANG) == 0) {
      kill(pid_, SIGTERM);
      waitpid(pid_, &status, 0);
    }
  }
  pid_ = -1;
  buffer_.clear();
}

bool ProcessTagger::read_line(std::string& line) {
  for (;;) {
    auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return true;
    }
    char chunk[4096];
    const ssize_t n = read(from_child_, chunk, sizeof chunk);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return false;
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

TaggedSentence ProcessTagger::tag(std::string_view text) {
  std::lock_guard lock(mu_);
  if (pid_ < 0) start();
  std::string request(text);
  for (auto& c : request)
    if (c == '\n' || c == '\r') c = ' ';
  request += '\n';
  std::size_t written = 0;
  while (written < request.size()) {
    const ssize_t n =
        write(to_child_, request.data() + written, request.size() - written);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) {
      stop();
      unavailable("tagger process is not accepting input: " + command_);
    }
    written += static_cast<std::size_t>(n);
  }
  std::string reply;
  if (!read_line(reply)) {
    stop();
    unavailable("tagger process closed its output: " + command_);
  }
  return parse_reply(reply);
}

HttpTagger::HttpTagger(std::string base_url) : base_url_(std::move(base_url)) {
  while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
}

TaggedSentence HttpTagger::tag(std::string_view text) {
  std::lock_guard lock(mu_);
  httplib::Client client(base_url_);
  client.set_connection_timeout(5);
  client.set_read_timeout(30);
  nlohmann::json body = {{"text", std::string(text)}};
  auto res = client.Post("/tag", body.dump(), "application/json");
  if (!res)
    unavailable("cannot reach tagger at " + base_url_ + ": " +
                httplib::to_string(res.error()));
  if (res->status != 200)
    unavailable("tagger at " + base_url_ + " answered HTTP " +
                std::to_string(res->status));
  return parse_reply(res->body);
}

std::unique_ptr<Tagger> make_tagger(std::string_view spec) {
  constexpr std::string_view kFixture = "fixture:";
  constexpr std::string_view kExternal = "external:";
  constexpr std::string_view kExec = "exec:";
  if (spec.substr(0, kFixture.size()) == kFixture)
    return FixtureTagger::from_file(std::string(spec.substr(kFixture.size())));
  if (spec.substr(0, kExternal.size()) == kExternal) {
    std::string_view target = spec.substr(kExternal.size());
    if (target.substr(0, kExec.size()) == kExec)
      return std::make_unique<ProcessTagger>(
          std::string(target.substr(kExec.size())));
    return std::make_unique<HttpTagger>(std::string(target));
  }
  throw Error(ErrorCode::kBadRequest,
              "tagger spec must be fixture:FILE or external:URL, got '" +
                  std::string(spec) + "'");
}

}  // namespace tssl
