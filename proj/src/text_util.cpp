#include "tssl/text_util.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>

namespace tssl {

namespace {

bool attaches_left(std::string_view tok) {
  static constexpr std::string_view kLeft[] = {
      ",", ".", ";", ":", "!", "?", "%", ")", "]", "}", "''", "'s", "'",
      "n't", "'re", "'ve", "'ll", "'d", "'m", "..."};
  return std::find(std::begin(kLeft), std::end(kLeft), tok) != std::end(kLeft);
}

bool attaches_right(std::string_view tok) {
  return tok == "(" || tok == "[" || tok == "{" || tok == "$" || tok == "``";
}

}  // namespace

JoinedText join_tokens(const std::vector<std::string>& tokens) {
  JoinedText out;
  out.spans.reserve(tokens.size());
  bool glue_next = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (i > 0 && !glue_next && !attaches_left(tok)) out.text += ' ';
    const std::size_t begin = out.text.size();
    out.text += tok;
    out.spans.emplace_back(begin, out.text.size());
    glue_next = attaches_right(tok);
  }
  return out;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

std::string strip_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool contains_case_insensitive(std::string_view haystack,
                               std::string_view needle) {
  if (needle.empty()) return true;
  auto it = std::search(haystack.begin(), haystack.end(), needle.begin(),
                        needle.end(), [](char a, char b) {
                          return std::tolower(static_cast<unsigned char>(a)) ==
                                 std::tolower(static_cast<unsigned char>(b));
                        });
  return it != haystack.end();
}

std::string capitalize_first(std::string s) {
  if (!s.empty())
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string lowercase_first(std::string s) {
  if (!s.empty())
    s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return s;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace tssl
