#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "ghdist/errors.hpp"
#include "ghdist/metric_space.hpp"

namespace ghdist {

// A relation between the points of two spaces that covers both sides.
// Stored as a sorted, deduplicated list of index pairs.
class Correspondence {
 public:
  using IndexPair = std::pair<std::size_t, std::size_t>;

  Correspondence() = default;

  explicit Correspondence(std::vector<IndexPair> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  }

  static Correspondence identity(std::size_t n) {
    std::vector<IndexPair> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, i);
    return Correspondence(std::move(pairs));
  }

  static Correspondence full(std::size_t nx, std::size_t ny) {
    std::vector<IndexPair> pairs;
    pairs.reserve(nx * ny);
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) pairs.emplace_back(i, j);
    }
    return Correspondence(std::move(pairs));
  }

  // graph(f) together with the transposed graph of g; both functions total.
  static Correspondence from_functions(const std::vector<std::size_t>& x_to_y,
                                       const std::vector<std::size_t>& y_to_x) {
    std::vector<IndexPair> pairs;
    pairs.reserve(x_to_y.size() + y_to_x.size());
    for (std::size_t i = 0; i < x_to_y.size(); ++i) pairs.emplace_back(i, x_to_y[i]);
    for (std::size_t j = 0; j < y_to_x.size(); ++j) pairs.emplace_back(y_to_x[j], j);
    return Correspondence(std::move(pairs));
  }

  const std::vector<IndexPair>& pairs() const noexcept { return pairs_; }

  std::size_t size() const noexcept { return pairs_.size(); }

  bool is_valid_between(std::size_t nx, std::size_t ny) const noexcept {
    std::vector<bool> left(nx, false), right(ny, false);
    for (const auto& [i, j] : pairs_) {
      if (i >= nx || j >= ny) return false;
      left[i] = true;
      right[j] = true;
    }
    return std::find(left.begin(), left.end(), false) == left.end() &&
           std::find(right.begin(), right.end(), false) == right.end();
  }

  void require_valid_between(std::size_t nx, std::size_t ny) const {
    std::vector<bool> left(nx, false), right(ny, false);
    for (const auto& [i, j] : pairs_) {
      if (i >= nx || j >= ny) {
        throw GhError(Errc::IndexOutOfRange,
                      "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") outside " + std::to_string(nx) + " x " +
                          std::to_string(ny));
      }
      left[i] = true;
      right[j] = true;
    }
    for (std::size_t i = 0; i < nx; ++i) {
      if (!left[i]) {
        throw GhError(Errc::NotSurjectiveOnLeft,
                      "left point " + std::to_string(i) + " is not covered");
      }
    }
    for (std::size_t j = 0; j < ny; ++j) {
      if (!right[j]) {
        throw GhError(Errc::NotSurjectiveOnRight,
                      "right point " + std::to_string(j) + " is not covered");
      }
    }
  }

  bool operator==(const Correspondence& other) const = default;

 private:
  std::vector<IndexPair> pairs_;
};

// Largest additive error the relation makes between the two metrics:
// max |d_X(i, i') - d_Y(j, j')| over related pairs (i, j), (i', j').
inline Rational distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                           const Correspondence& relation) {
  relation.require_valid_between(x.size(), y.size());
  const auto& pairs = relation.pairs();
  Rational worst = 0;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      Rational gap = x.dist(pairs[a].first, pairs[b].first) -
                     y.dist(pairs[a].second, pairs[b].second);
      if (gap < 0) gap = -gap;
      if (gap > worst) worst = gap;
    }
  }
  return worst;
}

// Diameter, inside Y, of the set of points related to the single point i.
inline Rational image_diameter(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                               const Correspondence& relation, std::size_t i) {
  relation.require_valid_between(x.size(), y.size());
  if (i >= x.size()) {
    throw GhError(Errc::IndexOutOfRange,
                  "point index " + std::to_string(i) + " out of range");
  }
  std::vector<std::size_t> image;
  for (const auto& [a, b] : relation.pairs()) {
    if (a == i) image.push_back(b);
  }
  Rational worst = 0;
  for (std::size_t a = 0; a < image.size(); ++a) {
    for (std::size_t b = a + 1; b < image.size(); ++b) {
      const Rational& d = y.dist(image[a], image[b]);
      if (d > worst) worst = d;
    }
  }
  return worst;
}

}  // namespace ghdist
