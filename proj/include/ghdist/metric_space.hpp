#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghdist/errors.hpp"
#include "ghdist/rational.hpp"

namespace ghdist {

using Matrix = std::vector<std::vector<Rational>>;

// Reports every violated axiom, not just the first. A shape mismatch makes
// the entry checks meaningless, so that one short-circuits.
inline std::vector<MetricViolation> validate(
    const std::vector<std::string>& labels, const Matrix& matrix) {
  std::vector<MetricViolation> out;
  const std::size_t n = labels.size();

  bool square = n >= 1 && matrix.size() == n;
  for (const auto& row : matrix) {
    if (row.size() != n) square = false;
  }
  if (!square) {
    out.push_back({Errc::NonSquare, 0, 0, 0});
    return out;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (labels[i] == labels[j]) {
        out.push_back({Errc::DuplicateLabel, i, j, 0});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0) {
      out.push_back({Errc::NonzeroDiagonal, i, 0, 0});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) {
        out.push_back({Errc::Asymmetric, i, j, 0});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && matrix[i][j] <= 0) {
        out.push_back({Errc::NonpositiveOffDiagonal, i, j, 0});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (matrix[i][k] > matrix[i][j] + matrix[j][k]) {
          out.push_back({Errc::TriangleViolation, i, j, k});
        }
      }
    }
  }
  return out;
}

// Finite metric space: distinct point labels plus an exact distance matrix.
// Instances are immutable and always satisfy the metric axioms; the only way
// to build one is through create(), which validates.
class FiniteMetricSpace {
 public:
  static FiniteMetricSpace create(std::vector<std::string> labels, Matrix matrix) {
    auto violations = validate(labels, matrix);
    if (!violations.empty()) {
      throw ValidationError(std::move(violations));
    }
    return FiniteMetricSpace(std::move(labels), matrix);
  }

  std::size_t size() const noexcept { return labels_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const std::string& label(std::size_t i) const { return labels_.at(i); }

  const Rational& dist(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) {
      throw GhError(Errc::IndexOutOfRange, "point index out of range");
    }
    return dist_[i * size() + j];
  }

  Matrix matrix() const {
    Matrix out(size(), std::vector<Rational>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        out[i][j] = dist_[i * size() + j];
      }
    }
    return out;
  }

  bool operator==(const FiniteMetricSpace& other) const = default;

 private:
  FiniteMetricSpace(std::vector<std::string> labels, const Matrix& matrix)
      : labels_(std::move(labels)) {
    dist_.reserve(labels_.size() * labels_.size());
    for (const auto& row : matrix) {
      for (const auto& entry : row) {
        dist_.push_back(entry);
      }
    }
  }

  std::vector<std::string> labels_;
  std::vector<Rational> dist_;  // flattened n x n
};

inline Rational diameter(const FiniteMetricSpace& space) {
  Rational best = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      if (space.dist(i, j) > best) best = space.dist(i, j);
    }
  }
  return best;
}

inline FiniteMetricSpace one_point() {
  return FiniteMetricSpace::create({"pt"}, {{Rational(0)}});
}

// m points, every pair at distance exactly 1.
inline FiniteMetricSpace simplex(std::size_t m) {
  if (m < 1) {
    throw GhError(Errc::InvalidParameter, "simplex needs at least one point");
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    labels.push_back("s" + std::to_string(i));
  }
  Matrix matrix(m, std::vector<Rational>(m, Rational(1)));
  for (std::size_t i = 0; i < m; ++i) matrix[i][i] = 0;
  return FiniteMetricSpace::create(std::move(labels), std::move(matrix));
}

// Multiplies every distance by factor. factor == 0 collapses the space to
// the one-point space; negative factors are rejected.
inline FiniteMetricSpace scale(const FiniteMetricSpace& space, const Rational& factor) {
  if (factor < 0) {
    throw GhError(Errc::NegativeScale, "scale factor must be nonnegative, got " +
                                           to_string(factor));
  }
  if (factor == 0) return one_point();
  Matrix matrix = space.matrix();
  for (auto& row : matrix) {
    for (auto& entry : row) entry *= factor;
  }
  return FiniteMetricSpace::create(space.labels(), std::move(matrix));
}

// Appends an m-point simplex hanging off one base point: the new points sit
// at distance 1 from each other and at dist(x, base) + 1 from each old point
// x. Every new point is therefore exactly 1 away from the base, so the old
// space is a 1-net of the extension.
inline FiniteMetricSpace simplex_extend(const FiniteMetricSpace& space,
                                        std::size_t base, std::size_t m) {
  const std::size_t n = space.size();
  if (base >= n) {
    throw GhError(Errc::IndexOutOfRange, "base index " + std::to_string(base) +
                                             " out of range for " +
                                             std::to_string(n) + " points");
  }
  if (m < 1) {
    throw GhError(Errc::InvalidParameter, "extension needs at least one point");
  }

  std::vector<std::string> labels = space.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (std::size_t added = 0, k = 1; added < m; ++k) {
    std::string candidate = "s" + std::to_string(k);
    if (used.count(candidate)) continue;
    labels.push_back(candidate);
    used.insert(candidate);
    ++added;
  }

  const std::size_t total = n + m;
  Matrix matrix(total, std::vector<Rational>(total, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) matrix[i][j] = space.dist(i, j);
  }
  for (std::size_t s = n; s < total; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational d = space.dist(i, base) + 1;
      matrix[s][i] = d;
      matrix[i][s] = d;
    }
    for (std::size_t s2 = n; s2 < total; ++s2) {
      if (s2 != s) matrix[s][s2] = 1;
    }
  }
  return FiniteMetricSpace::create(std::move(labels), std::move(matrix));
}

}  // namespace ghdist
