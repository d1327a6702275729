#pragma once

#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace lightkey::text {

// Sparse bag-of-stems vector. Zero weights are never stored; the L2 norm is
// cached at construction. Keys are iterated in sorted order, which keeps all
// floating-point reductions over the vector deterministic.
class TermVector {
 public:
  TermVector() = default;

  explicit TermVector(std::map<std::string, double> weights) {
    for (auto it = weights.begin(); it != weights.end();) {
      it = (it->second == 0.0) ? weights.erase(it) : std::next(it);
    }
    weights_ = std::move(weights);
    double sq = 0.0;
    for (const auto& [_, w] : weights_) sq += w * w;
    norm_l2_ = std::sqrt(sq);
  }

  const std::map<std::string, double>& weights() const { return weights_; }
  double norm_l2() const { return norm_l2_; }
  bool empty() const { return weights_.empty(); }

  double at(std::string_view stem) const {
    auto it = weights_.find(std::string(stem));
    return it == weights_.end() ? 0.0 : it->second;
  }

  bool operator==(const TermVector& other) const { return weights_ == other.weights_; }

 private:
  std::map<std::string, double> weights_;
  double norm_l2_ = 0.0;
};

}  // namespace lightkey::text
