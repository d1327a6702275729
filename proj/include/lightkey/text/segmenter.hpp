#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lightkey/text/stopwords.hpp"
#include "lightkey/util/strings.hpp"

namespace lightkey::text {

namespace detail {

// Common title/latin abbreviations whose trailing period never ends a
// sentence. Stored lowercase without the period.
inline constexpr std::string_view kAbbreviations[] = {
    "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs", "etc",
    "fig", "inc", "ltd", "co", "corp", "gen", "col", "sgt", "lt", "rep",
    "sen", "gov", "pres", "min", "mt", "jan", "feb", "mar", "apr", "jun",
    "jul", "aug", "sep", "sept", "oct", "nov", "dec", "approx", "dept", "ed",
};

}  // namespace detail

class AbbreviationList {
 public:
  AbbreviationList() = default;

  static AbbreviationList builtin() {
    AbbreviationList list;
    for (auto a : detail::kAbbreviations) list.entries_.emplace(a);
    return list;
  }

  // Same file format as stopword lists: one entry per line, '#' comments.
  // Entries may be written with or without the trailing period.
  static AbbreviationList from_file(const std::filesystem::path& path) {
    AbbreviationList list;
    for (auto& w : detail::parse_word_list(read_file(path))) {
      std::string lower = to_lower(w);
      while (!lower.empty() && lower.back() == '.') lower.pop_back();
      if (!lower.empty()) list.entries_.insert(std::move(lower));
    }
    return list;
  }

  bool contains(std::string_view lowercased_no_period) const {
    return entries_.find(lowercased_no_period) != entries_.end();
  }

  bool empty() const { return entries_.empty(); }
  const std::set<std::string, std::less<>>& entries() const { return entries_; }

 private:
  std::set<std::string, std::less<>> entries_;
};

struct Span {
  std::size_t begin = 0;  // byte offsets into the raw input, trimmed
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
inline bool is_terminator(char c) { return c == '.' || c == '?' || c == '!'; }
inline bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// "U.S" / "U.S." style runs: two or more period-separated single letters.
inline bool is_acronym_shape(std::string_view word) {
  std::size_t pieces = 0;
  std::size_t i = 0;
  while (i < word.size()) {
    if (!is_ascii_letter(word[i])) return false;
    ++pieces;
    ++i;
    if (i < word.size()) {
      if (word[i] != '.') return false;
      ++i;
    }
  }
  return pieces >= 2;
}

// The word immediately preceding a '.' decides whether the period may end a
// sentence.
inline bool protected_before_period(std::string_view raw, std::size_t period_pos,
                                    const AbbreviationList& abbrevs) {
  std::size_t start = period_pos;
  while (start > 0 && !is_space(raw[start - 1])) --start;
  std::string_view word = raw.substr(start, period_pos - start);
  if (word.empty()) return false;
  if (is_acronym_shape(word)) return true;
  std::string lower = to_lower(word);
  while (!lower.empty() && lower.back() == '.') lower.pop_back();
  return !lower.empty() && abbrevs.contains(lower);
}

}  // namespace detail

// Splits raw text into sentence spans: newlines are hard boundaries; within a
// line, a run of ".?!" followed by whitespace and a capital letter ends a
// sentence unless the preceding word is a protected abbreviation. Spans cover
// every non-whitespace byte, in order. Whitespace-only input yields no spans.
inline std::vector<Span> segment_sentences(std::string_view raw,
                                           const AbbreviationList& abbrevs = AbbreviationList::builtin()) {
  std::vector<Span> spans;
  auto emit = [&](std::size_t b, std::size_t e) {
    while (b < e && detail::is_space(raw[b])) ++b;
    while (e > b && detail::is_space(raw[e - 1])) --e;
    if (b < e) spans.push_back({b, e});
  };

  std::size_t line_begin = 0;
  for (std::size_t pos = 0; pos <= raw.size(); ++pos) {
    if (pos == raw.size() || raw[pos] == '\n') {
      // Scan one line for intra-line boundaries.
      std::size_t start = line_begin;
      std::size_t i = line_begin;
      while (i < pos) {
        if (detail::is_terminator(raw[i])) {
          std::size_t run_end = i;
          while (run_end < pos && detail::is_terminator(raw[run_end])) ++run_end;
          std::size_t after = run_end;
          while (after < pos && detail::is_space(raw[after])) ++after;
          bool boundary = after > run_end && after < pos && ascii_upper(raw[after]);
          if (boundary && raw[i] == '.' && detail::protected_before_period(raw, i, abbrevs))
            boundary = false;
          if (boundary) {
            emit(start, run_end);
            start = after;
            i = after;
            continue;
          }
          i = run_end;
          continue;
        }
        ++i;
      }
      emit(start, pos);
      line_begin = pos + 1;
    }
  }
  return spans;
}

inline std::vector<std::string> segment_to_strings(std::string_view raw,
                                                   const AbbreviationList& abbrevs = AbbreviationList::builtin()) {
  std::vector<std::string> out;
  for (auto s : segment_sentences(raw, abbrevs)) out.emplace_back(raw.substr(s.begin, s.end - s.begin));
  return out;
}

}  // namespace lightkey::text
