#pragma once

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lightkey/text/stemmer.hpp"
#include "lightkey/util/io.hpp"
#include "lightkey/util/strings.hpp"

namespace lightkey::text {

namespace detail {

// Bundled English list; data/stopwords/en.txt mirrors it and the sync is
// checked by a test.
inline constexpr std::string_view kEnglishStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an", "and",
    "any", "are", "as", "at", "be", "because", "been", "before", "being", "below",
    "between", "both", "but", "by", "can", "could", "did", "do", "does", "doing",
    "down", "during", "each", "few", "for", "from", "further", "had", "has", "have",
    "having", "he", "her", "here", "hers", "him", "his", "how", "i", "if",
    "in", "into", "is", "it", "its", "itself", "just", "me", "more", "most",
    "my", "myself", "no", "nor", "not", "now", "of", "off", "on", "once",
    "only", "or", "other", "our", "ours", "out", "over", "own", "said", "same",
    "she", "should", "so", "some", "such", "than", "that", "the", "their", "theirs",
    "them", "then", "there", "these", "they", "this", "those", "through", "to", "too",
    "under", "until", "up", "very", "was", "we", "were", "what", "when", "where",
    "which", "while", "who", "whom", "why", "will", "with", "would", "you", "your",
    "yours", "yourself",
};

inline constexpr std::string_view kPortugueseStopwords[] = {
    "a", "ao", "aos", "aquela", "aquelas", "aquele", "aqueles", "as", "at\xc3\xa9", "com",
    "como", "da", "das", "de", "dela", "delas", "dele", "deles", "depois", "do",
    "dos", "e", "ela", "elas", "ele", "eles", "em", "entre", "era", "eram",
    "essa", "essas", "esse", "esses", "esta", "estas", "este", "estes", "eu", "foi",
    "foram", "isso", "isto", "j\xc3\xa1", "mais", "mas", "me", "mesmo", "muito", "na",
    "nas", "n\xc3\xa3o", "nem", "no", "nos", "n\xc3\xb3s", "o", "os", "ou", "para",
    "pela", "pelas", "pelo", "pelos", "por", "qual", "quando", "que", "quem", "se",
    "sem", "ser", "seu", "seus", "sua", "suas", "s\xc3\xb3", "tamb\xc3\xa9m", "tem", "t\xc3\xaam",
    "um", "uma", "umas", "uns", "voc\xc3\xaa", "voc\xc3\xaas",
};

// One entry per line, '#' starts a comment, surrounding whitespace ignored.
inline std::vector<std::string> parse_word_list(std::string_view content) {
  std::vector<std::string> words;
  for (auto& line : split(content, '\n')) {
    std::string_view v = line;
    if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (!v.empty()) words.emplace_back(v);
  }
  return words;
}

}  // namespace detail

// Stopword list with both surface and stem lookups: candidate boundaries are
// checked by lowercased surface, term vectors exclude by stem.
class StopwordList {
 public:
  StopwordList() = default;

  static StopwordList from_words(std::span<const std::string> words, Language lang) {
    StopwordList list;
    for (const auto& w : words) list.add(w, lang);
    return list;
  }

  static StopwordList from_file(const std::filesystem::path& path, Language lang) {
    auto words = detail::parse_word_list(read_file(path));
    StopwordList list;
    for (const auto& w : words) list.add(w, lang);
    return list;
  }

  static StopwordList builtin(Language lang) {
    StopwordList list;
    switch (lang) {
      case Language::Portuguese:
        for (auto w : detail::kPortugueseStopwords) list.add(w, lang);
        break;
      default:
        for (auto w : detail::kEnglishStopwords) list.add(w, lang);
        break;
    }
    return list;
  }

  void add(std::string_view word, Language lang) {
    std::string lower = to_lower(word);
    stems_.insert(stem_word(lower, lang));
    surfaces_.insert(std::move(lower));
  }

  bool contains_surface(std::string_view lowercased) const {
    return surfaces_.find(lowercased) != surfaces_.end();
  }

  bool contains_stem(std::string_view stem) const {
    return stems_.find(stem) != stems_.end();
  }

  bool empty() const { return surfaces_.empty(); }
  const std::set<std::string, std::less<>>& surfaces() const { return surfaces_; }

 private:
  std::set<std::string, std::less<>> surfaces_;
  std::set<std::string, std::less<>> stems_;
};

}  // namespace lightkey::text
