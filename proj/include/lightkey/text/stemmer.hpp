#pragma once

#include <array>
#include <atomic>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>

#include "lightkey/util/strings.hpp"

namespace lightkey::text {

enum class Language { English, Portuguese, LowercaseOnly };

inline Language language_from_code(std::string_view code) {
  if (code == "en") return Language::English;
  if (code == "pt") return Language::Portuguese;
  static std::atomic<bool> warned{false};
  if (!warned.exchange(true)) {
    std::fprintf(stderr, "warning: unknown language code '%.*s'; stemming falls back to lowercasing\n",
                 static_cast<int>(code.size()), code.data());
  }
  return Language::LowercaseOnly;
}

inline const char* language_code(Language lang) {
  switch (lang) {
    case Language::English: return "en";
    case Language::Portuguese: return "pt";
    default: return "raw";
  }
}

namespace detail {

struct SuffixRule {
  std::string_view suffix;
  std::string_view replacement;
  std::size_t min_stem;  // minimum bytes that must remain before the suffix
  bool undouble;         // collapse a trailing doubled consonant after stripping
  bool stop;             // suffix is terminal: matching halts without a rewrite
};

// Rules are retried until none fires. Every non-stop rule strictly shortens
// the word, so the loop terminates and the output is a fixpoint:
// stem(stem(w)) == stem(w) for every input.
inline constexpr std::array<SuffixRule, 12> kEnglishRules{{
    {"sses", "ss", 1, false, false},  // classes -> class
    {"ies", "y", 1, false, false},    // studies -> study
    {"ied", "y", 1, false, false},    // tried -> try
    {"eed", "ee", 1, false, false},   // agreed -> agree
    {"ss", "", 0, false, true},       // class stays class
    {"s", "", 3, false, false},       // cats -> cat
    {"ing", "", 3, true, false},      // running -> run
    {"ed", "", 3, true, false},       // stopped -> stop
    {"ly", "", 4, false, false},      // quickly -> quick
    {"ment", "", 4, false, false},    // government -> govern
    {"ness", "", 4, false, false},    // darkness -> dark
    {"ful", "", 4, false, false},     // useful -> use
}};

inline constexpr std::array<SuffixRule, 5> kPortugueseRules{{
    {"\xc3\xa7\xc3\xb5es", "\xc3\xa7\xc3\xa3o", 1, false, false},  // ções -> ção
    {"\xc3\xb5es", "\xc3\xa3o", 1, false, false},                  // ões -> ão
    {"mente", "", 4, false, false},                                // rapidamente -> rapida
    {"eis", "el", 2, false, false},                                // papeis -> papel
    {"s", "", 3, false, false},                                    // livros -> livro
}};

inline bool is_ascii_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// One rewriting pass; returns true when the word changed and rules should
// be retried.
inline bool apply_rules_once(std::string& w, std::span<const SuffixRule> rules) {
  for (const auto& r : rules) {
    if (w.size() < r.suffix.size() || !w.ends_with(r.suffix)) continue;
    std::size_t stem_len = w.size() - r.suffix.size();
    if (stem_len < r.min_stem) continue;
    if (r.stop) return false;
    w.resize(stem_len);
    w.append(r.replacement);
    if (r.undouble && w.size() >= 2) {
      char c = w.back();
      bool consonant = c >= 'a' && c <= 'z' && !is_ascii_vowel(c);
      if (consonant && w[w.size() - 2] == c && c != 'l' && c != 's' && c != 'z') w.pop_back();
    }
    return true;
  }
  return false;
}

}  // namespace detail

// Deterministic suffix-stripping stemmer. Lowercases ASCII, then applies the
// language's rule table to a fixpoint. Only full-character byte sequences are
// matched, so UTF-8 input is never split mid character.
inline std::string stem_word(std::string_view word, Language lang) {
  std::string w = to_lower(word);
  std::span<const detail::SuffixRule> rules;
  switch (lang) {
    case Language::English: rules = detail::kEnglishRules; break;
    case Language::Portuguese: rules = detail::kPortugueseRules; break;
    case Language::LowercaseOnly: return w;
  }
  while (detail::apply_rules_once(w, rules)) {}
  return w;
}

}  // namespace lightkey::text
