#pragma once

#include <charconv>
#include <optional>
#include <string_view>
#include <vector>

namespace sgcolor::detail {

struct DataLine {
  int number;  // 1-based line number in the source text
  std::vector<std::string_view> tokens;
};

// Splits text into whitespace-separated tokens per line, dropping blank lines
// and lines whose first non-blank character is '#'.
inline std::vector<DataLine> data_lines(std::string_view text) {
  std::vector<DataLine> out;
  int number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;

    DataLine dl{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) dl.tokens.push_back(line.substr(start, i - start));
    }
    if (dl.tokens.empty() || dl.tokens.front().front() == '#') continue;
    out.push_back(std::move(dl));
  }
  return out;
}

inline std::optional<int> parse_int(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') {
    tok.remove_prefix(1);
    if (!tok.empty() && tok.front() == '-') return std::nullopt;
  }
  int value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end || tok.empty()) return std::nullopt;
  return value;
}

}  // namespace sgcolor::detail
