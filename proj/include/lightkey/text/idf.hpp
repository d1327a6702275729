#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "lightkey/text/stopwords.hpp"
#include "lightkey/text/term_vector.hpp"
#include "lightkey/text/token.hpp"
#include "lightkey/util/error.hpp"

namespace lightkey::text {

enum class IdfUnit { Document, Sentence };

// Smoothed inverse document frequency: idf(t) = log((N+1)/(df+1)) + 1, always
// positive; unseen stems fall back to df = 0. Raw df counts are kept so the
// table serializes exactly (integers only).
class IdfTable {
 public:
  using DfMap = std::map<std::string, std::uint64_t, std::less<>>;

  IdfTable() = default;
  IdfTable(DfMap df, std::uint64_t unit_count) : df_(std::move(df)), unit_count_(unit_count) {}

  double idf(std::string_view stem) const {
    auto it = df_.find(stem);
    std::uint64_t df = it == df_.end() ? 0 : it->second;
    return std::log((static_cast<double>(unit_count_) + 1.0) / (static_cast<double>(df) + 1.0)) + 1.0;
  }

  bool contains(std::string_view stem) const { return df_.find(stem) != df_.end(); }
  std::uint64_t doc_count() const { return unit_count_; }
  const DfMap& df() const { return df_; }

 private:
  DfMap df_;
  std::uint64_t unit_count_ = 1;
};

// df counts the number of units (documents or sentences) containing each stem.
inline IdfTable build_idf(std::span<const Document> corpus, IdfUnit unit) {
  if (corpus.empty()) throw DataError("build_idf: empty corpus");
  IdfTable::DfMap df;
  std::uint64_t units = 0;
  auto count_unit = [&](auto&& stems_of_unit) {
    ++units;
    for (const auto& stem : stems_of_unit) ++df[stem];
  };
  for (const auto& doc : corpus) {
    if (unit == IdfUnit::Document) {
      std::set<std::string> stems;
      for (const auto& s : doc.sentences)
        for (const auto& t : s.tokens) stems.insert(t.stem);
      count_unit(stems);
    } else {
      for (const auto& s : doc.sentences) {
        std::set<std::string> stems;
        for (const auto& t : s.tokens) stems.insert(t.stem);
        count_unit(stems);
      }
    }
  }
  return IdfTable(std::move(df), units);
}

// TF x IDF over the sentence's stems; stopword stems contribute nothing. An
// all-stopword sentence legally vectorizes to the empty vector.
inline TermVector vectorize(const Sentence& sentence, const IdfTable& idf, const StopwordList& stopwords) {
  std::map<std::string, double> tf;
  for (const auto& t : sentence.tokens) {
    if (stopwords.contains_stem(t.stem)) continue;
    tf[t.stem] += 1.0;
  }
  std::map<std::string, double> weights;
  for (auto& [stem, count] : tf) weights.emplace(stem, count * idf.idf(stem));
  return TermVector(std::move(weights));
}

}  // namespace lightkey::text
