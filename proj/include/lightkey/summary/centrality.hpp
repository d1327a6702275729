#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lightkey/summary/distance.hpp"
#include "lightkey/util/strings.hpp"

namespace lightkey::summary {

// Support-set cardinality: either an absolute neighbor count or a percentage
// of the document's passage count ("10%" vs "8").
struct SscSpec {
  enum class Mode { Absolute, Percent };
  Mode mode = Mode::Percent;
  double value = 10.0;

  static SscSpec absolute(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("absolute SSC must be >= 1");
    return {Mode::Absolute, static_cast<double>(k)};
  }

  static SscSpec percent(double v) {
    if (!(v > 0.0 && v <= 100.0)) throw std::invalid_argument("percent SSC must be in (0, 100]");
    return {Mode::Percent, v};
  }

  // Accepts "10%" or a bare integer like "8".
  static SscSpec parse(std::string_view s) {
    std::string_view t = trim(s);
    if (t.empty()) throw std::invalid_argument("empty SSC spec");
    try {
      if (t.back() == '%') return percent(std::stod(std::string(t.substr(0, t.size() - 1))));
      std::size_t pos = 0;
      long long v = std::stoll(std::string(t), &pos);
      if (pos != t.size() || v < 1) throw std::invalid_argument("");
      return absolute(static_cast<std::uint64_t>(v));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("cannot parse SSC spec: " + std::string(s));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("SSC spec out of range: " + std::string(s));
    }
  }

  std::string to_string() const {
    if (mode == Mode::Percent) {
      std::string v = fmt_g(value);
      return v + "%";
    }
    return fmt_g(value);
  }
};

struct CentralityConfig {
  DistanceMetric metric;
  SscSpec ssc;
};

// Neighbors per support set. Percent mode rounds half away from zero, then
// clamps to [1, n-1]; absolute mode clamps to n-1. A single passage has no
// neighbors at all.
inline std::size_t support_set_cardinality(const SscSpec& spec, std::size_t n_passages) {
  if (n_passages < 1) throw std::invalid_argument("support_set_cardinality: n_passages must be >= 1");
  if (n_passages == 1) return 0;
  if (spec.mode == SscSpec::Mode::Absolute)
    return std::min<std::size_t>(static_cast<std::size_t>(spec.value), n_passages - 1);
  auto rounded = static_cast<std::size_t>(std::lround(spec.value / 100.0 * static_cast<double>(n_passages)));
  return std::clamp<std::size_t>(rounded, 1, n_passages - 1);
}

// Support set of passage i: the k nearest other passages under the configured
// metric. Ties at the k-th position admit the smaller index.
inline std::vector<std::vector<std::size_t>> build_support_sets(std::span<const text::TermVector> vectors,
                                                                const CentralityConfig& config) {
  const std::size_t n = vectors.size();
  if (n == 0) throw std::invalid_argument("build_support_sets: no vectors");
  const std::size_t k = support_set_cardinality(config.ssc, n);

  std::vector<std::vector<std::size_t>> sets(n);
  std::vector<std::pair<double, std::size_t>> order;
  order.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) {
    order.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      order.emplace_back(distance(vectors[i], vectors[j], config.metric), j);
    }
    std::sort(order.begin(), order.end());  // (distance asc, index asc)
    sets[i].reserve(k);
    for (std::size_t r = 0; r < k && r < order.size(); ++r) sets[i].push_back(order[r].second);
    std::sort(sets[i].begin(), sets[i].end());
  }
  return sets;
}

// Per-passage membership counts: how many other passages' support sets the
// passage appears in, with the ranking order (score desc, index asc).
struct CentralityRanking {
  std::vector<std::size_t> scores;
  std::vector<std::size_t> order;
};

inline CentralityRanking centrality_rank(std::span<const text::TermVector> vectors,
                                         const CentralityConfig& config) {
  auto sets = build_support_sets(vectors, config);
  const std::size_t n = vectors.size();
  CentralityRanking rank;
  rank.scores.assign(n, 0);
  for (const auto& set : sets)
    for (std::size_t member : set) ++rank.scores[member];
  rank.order.resize(n);
  std::iota(rank.order.begin(), rank.order.end(), std::size_t{0});
  std::sort(rank.order.begin(), rank.order.end(), [&](std::size_t a, std::size_t b) {
    if (rank.scores[a] != rank.scores[b]) return rank.scores[a] > rank.scores[b];
    return a < b;
  });
  return rank;
}

}  // namespace lightkey::summary
