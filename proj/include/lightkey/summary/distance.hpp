#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lightkey/text/term_vector.hpp"
#include "lightkey/util/error.hpp"

namespace lightkey::summary {

enum class MetricKind { Manhattan, Euclidean, Chebyshev, Minkowski, Cosine };

struct DistanceMetric {
  MetricKind kind = MetricKind::Manhattan;
  double p = 3.0;  // minkowski order; ignored by the other kinds

  static DistanceMetric make(MetricKind kind, double p = 3.0) {
    if (kind == MetricKind::Minkowski && !(p > 0.0 && std::isfinite(p)))
      throw std::invalid_argument("minkowski order must be finite and > 0");
    return {kind, p};
  }

  static DistanceMetric parse(std::string_view name, double p = 3.0) {
    if (name == "manhattan") return make(MetricKind::Manhattan);
    if (name == "euclidean") return make(MetricKind::Euclidean);
    if (name == "chebyshev") return make(MetricKind::Chebyshev);
    if (name == "minkowski") return make(MetricKind::Minkowski, p);
    if (name == "cosine") return make(MetricKind::Cosine);
    throw std::invalid_argument("unknown distance metric: " + std::string(name));
  }

  std::string_view name() const {
    switch (kind) {
      case MetricKind::Manhattan: return "manhattan";
      case MetricKind::Euclidean: return "euclidean";
      case MetricKind::Chebyshev: return "chebyshev";
      case MetricKind::Minkowski: return "minkowski";
      case MetricKind::Cosine: return "cosine";
    }
    return "?";
  }
};

namespace detail {

// Merge-iterates the union of two sorted sparse vectors; missing stems are 0.
template <typename Fn>
void for_each_union(const text::TermVector& u, const text::TermVector& v, Fn&& fn) {
  auto iu = u.weights().begin(), eu = u.weights().end();
  auto iv = v.weights().begin(), ev = v.weights().end();
  while (iu != eu || iv != ev) {
    if (iv == ev || (iu != eu && iu->first < iv->first)) {
      fn(iu->second, 0.0);
      ++iu;
    } else if (iu == eu || iv->first < iu->first) {
      fn(0.0, iv->second);
      ++iv;
    } else {
      fn(iu->second, iv->second);
      ++iu;
      ++iv;
    }
  }
}

}  // namespace detail

// Standard definitions over the union of support. Cosine distance is
// 1 - cos(u, v); by convention any distance involving a zero vector is 1.
inline double distance(const text::TermVector& u, const text::TermVector& v, const DistanceMetric& m) {
  switch (m.kind) {
    case MetricKind::Manhattan: {
      double sum = 0.0;
      detail::for_each_union(u, v, [&](double a, double b) { sum += std::fabs(a - b); });
      return sum;
    }
    case MetricKind::Euclidean: {
      double sum = 0.0;
      detail::for_each_union(u, v, [&](double a, double b) { sum += (a - b) * (a - b); });
      return std::sqrt(sum);
    }
    case MetricKind::Chebyshev: {
      double best = 0.0;
      detail::for_each_union(u, v, [&](double a, double b) { best = std::max(best, std::fabs(a - b)); });
      return best;
    }
    case MetricKind::Minkowski: {
      double sum = 0.0;
      detail::for_each_union(u, v, [&](double a, double b) { sum += std::pow(std::fabs(a - b), m.p); });
      return std::pow(sum, 1.0 / m.p);
    }
    case MetricKind::Cosine: {
      if (u.norm_l2() == 0.0 || v.norm_l2() == 0.0) return 1.0;
      double dot = 0.0;
      detail::for_each_union(u, v, [&](double a, double b) { dot += a * b; });
      return std::max(0.0, 1.0 - dot / (u.norm_l2() * v.norm_l2()));
    }
  }
  return 0.0;
}

}  // namespace lightkey::summary
