#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lightkey/text/segmenter.hpp"
#include "lightkey/text/stemmer.hpp"
#include "lightkey/text/token.hpp"

namespace lightkey::text {

namespace detail {

// Word characters: ASCII alphanumerics plus any non-ASCII UTF-8 byte (accented
// letters). Everything else is splitting punctuation, except periods inside
// acronym-shaped runs.
inline bool is_word_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return (c >= '0' && c <= '9') || is_ascii_letter(c) || u >= 0x80;
}

}  // namespace detail

// Splits sentence text on whitespace and punctuation. Punctuation-only tokens
// are dropped, digit tokens kept. Acronym-shaped runs ("U.S.") stay one token
// with their periods. Offsets are byte positions within sentence_text.
inline std::vector<Token> tokenize(std::string_view sentence_text, Language lang = Language::English) {
  std::vector<Token> tokens;
  auto emit = [&](std::string_view surface, std::size_t offset) {
    Token t;
    t.surface = std::string(surface);
    t.stem = stem_word(surface, lang);
    t.is_capitalized = !surface.empty() && ascii_upper(surface.front());
    t.is_sentence_initial = tokens.empty();
    t.char_offset = offset;
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  const std::size_t n = sentence_text.size();
  while (i < n) {
    if (!detail::is_word_char(sentence_text[i])) {
      ++i;
      continue;
    }
    // Maximal run of word chars and periods, starting at a word char.
    std::size_t run_begin = i;
    std::size_t run_end = i;
    while (run_end < n &&
           (detail::is_word_char(sentence_text[run_end]) || sentence_text[run_end] == '.'))
      ++run_end;
    std::string_view run = sentence_text.substr(run_begin, run_end - run_begin);
    if (detail::is_acronym_shape(run)) {
      emit(run, run_begin);
    } else {
      // Split the run on periods; each piece is a plain token.
      std::size_t piece_begin = run_begin;
      for (std::size_t p = run_begin; p <= run_end; ++p) {
        if (p == run_end || sentence_text[p] == '.') {
          if (p > piece_begin) emit(sentence_text.substr(piece_begin, p - piece_begin), piece_begin);
          piece_begin = p + 1;
        }
      }
    }
    i = run_end;
  }
  return tokens;
}

}  // namespace lightkey::text
