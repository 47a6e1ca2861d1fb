#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tssl {

using CharSpan = std::pair<std::size_t, std::size_t>;  // [begin, end)

struct JoinedText {
  std::string text;
  std::vector<CharSpan> spans;  // one per input token
};

// Joins tokens with single spaces, except that closing punctuation and
// clitics attach to the left and opening brackets attach to the right.
JoinedText join_tokens(const std::vector<std::string>& tokens);

std::string collapse_whitespace(std::string_view text);

// Removes all whitespace; used to compare token streams with raw text.
std::string strip_whitespace(std::string_view text);

bool contains_case_insensitive(std::string_view haystack,
                               std::string_view needle);

std::string capitalize_first(std::string s);
std::string lowercase_first(std::string s);

// UTC timestamp, ISO-8601 with second precision.
std::string utc_timestamp();

}  // namespace tssl
