#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lightkey::text {

struct Token {
  std::string surface;
  std::string stem;
  bool is_capitalized = false;
  bool is_sentence_initial = false;
  std::size_t char_offset = 0;  // byte offset within the owning sentence text

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::size_t index = 0;  // position within the document, 0-based, gapless
  std::string text;       // raw sentence text, trimmed
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::string id;
  std::string source_path;
  std::vector<Sentence> sentences;

  std::size_t token_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.tokens.size();
    return n;
  }

  bool operator==(const Document&) const = default;
};

inline bool is_digit_only(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace lightkey::text
