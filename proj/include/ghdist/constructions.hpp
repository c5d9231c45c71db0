#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghdist/errors.hpp"
#include "ghdist/metric_space.hpp"
#include "ghdist/rational.hpp"

namespace ghdist {

// Points on the line, metric |a - b|, labeled by their coordinates.
inline FiniteMetricSpace line_space(const std::vector<Rational>& coords) {
  std::vector<std::string> labels;
  labels.reserve(coords.size());
  for (const auto& c : coords) labels.push_back(to_string(c));
  Matrix matrix(coords.size(), std::vector<Rational>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t j = 0; j < coords.size(); ++j) {
      Rational d = coords[i] - coords[j];
      if (d < 0) d = -d;
      matrix[i][j] = d;
    }
  }
  return FiniteMetricSpace::create(std::move(labels), std::move(matrix));
}

// Points in the plane under the L1 metric |dx| + |dy|.
inline FiniteMetricSpace l1_space(
    const std::vector<std::pair<Rational, Rational>>& points) {
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const auto& [px, py] : points) {
    labels.push_back("(" + to_string(px) + "," + to_string(py) + ")");
  }
  Matrix matrix(points.size(), std::vector<Rational>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      Rational dx = points[i].first - points[j].first;
      Rational dy = points[i].second - points[j].second;
      if (dx < 0) dx = -dx;
      if (dy < 0) dy = -dy;
      matrix[i][j] = dx + dy;
    }
  }
  return FiniteMetricSpace::create(std::move(labels), std::move(matrix));
}

namespace detail {

inline long require_positive_long(const Rational& value, const char* name) {
  if (!is_integer(value) || value < 1) {
    throw GhError(Errc::InvalidParameter,
                  std::string(name) + " must be a positive integer, got " +
                      to_string(value));
  }
  auto fits = to_int64(numerator(value));
  if (!fits || *fits > 1000000) {
    throw GhError(Errc::InvalidParameter,
                  std::string(name) + " is unreasonably large");
  }
  return static_cast<long>(*fits);
}

inline std::vector<Rational> grid_coords(long n, const Rational& h) {
  if (h <= 0) {
    throw GhError(Errc::InvalidParameter, "step must be positive, got " + to_string(h));
  }
  Rational steps = Rational(2 * n) / h;
  if (!is_integer(steps)) {
    throw GhError(Errc::StepDoesNotDivide,
                  "step " + to_string(h) + " does not divide the segment [-" +
                      std::to_string(n) + ", " + std::to_string(n) + "]");
  }
  auto count = to_int64(numerator(steps));
  if (!count || *count > 100000) {
    throw GhError(Errc::InvalidParameter, "grid would have too many points");
  }
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(*count) + 1);
  for (long k = 0; k <= *count; ++k) {
    coords.push_back(Rational(-n) + Rational(k) * h);
  }
  return coords;
}

}  // namespace detail

// The integers -n..n with the line metric.
inline FiniteMetricSpace integers(long n) {
  if (n < 1) throw GhError(Errc::InvalidParameter, "n must be at least 1");
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(2 * n + 1));
  for (long v = -n; v <= n; ++v) coords.push_back(Rational(v));
  return line_space(coords);
}

// The segment [-n, n] sampled every h; h must divide the length 2n.
inline FiniteMetricSpace segment_grid(long n, const Rational& h) {
  if (n < 1) throw GhError(Errc::InvalidParameter, "n must be at least 1");
  return line_space(detail::grid_coords(n, h));
}

// segment_grid(n, h) plus one extra point "t" at distance |x| + 1 from each
// grid point x. Realized in the plane under L1 as the grid on the x-axis
// together with (0, 1).
inline FiniteMetricSpace rtilde_grid(long n, const Rational& h) {
  if (n < 1) throw GhError(Errc::InvalidParameter, "n must be at least 1");
  auto coords = detail::grid_coords(n, h);
  std::vector<std::string> labels;
  labels.reserve(coords.size() + 1);
  for (const auto& c : coords) labels.push_back(to_string(c));
  labels.push_back("t");

  const std::size_t total = coords.size() + 1;
  Matrix matrix(total, std::vector<Rational>(total, Rational(0)));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t j = 0; j < coords.size(); ++j) {
      Rational d = coords[i] - coords[j];
      if (d < 0) d = -d;
      matrix[i][j] = d;
    }
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Rational d = coords[i] < 0 ? -coords[i] : coords[i];
    d += 1;
    matrix[i][total - 1] = d;
    matrix[total - 1][i] = d;
  }
  return FiniteMetricSpace::create(std::move(labels), std::move(matrix));
}

// Powers p^-n .. p^n of an integer base p >= 2 on the line.
inline FiniteMetricSpace geometric(long p, long n) {
  if (p < 2) throw GhError(Errc::InvalidParameter, "base must be at least 2");
  if (n < 1) throw GhError(Errc::InvalidParameter, "n must be at least 1");
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(2 * n + 1));
  for (long e = -n; e <= n; ++e) coords.push_back(rational_pow(Rational(p), e));
  return line_space(coords);
}

enum class PhiKind { Squares, PowersOfTwo };

// Powers q^phi(k), k = 1..n, for a rational base q > 1 and a strictly
// increasing exponent sequence: phi(k) = k^2 or phi(k) = 2^k.
inline FiniteMetricSpace phi_powers(const Rational& q, PhiKind phi, long n) {
  if (q <= 1) {
    throw GhError(Errc::InvalidParameter, "base must exceed 1, got " + to_string(q));
  }
  if (n < 1) throw GhError(Errc::InvalidParameter, "n must be at least 1");
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (long k = 1; k <= n; ++k) {
    long exponent = phi == PhiKind::Squares ? k * k : (1L << k);
    if (exponent > 4096 || k >= 62) {
      throw GhError(Errc::InvalidParameter, "exponent overflow at k = " + std::to_string(k));
    }
    coords.push_back(rational_pow(q, exponent));
  }
  return line_space(coords);
}

// The segment grid with every point strictly inside (a - d, a + d) removed.
// The gap must fit inside the segment with room on both sides.
inline FiniteMetricSpace gapped_segment(long n, const Rational& a,
                                        const Rational& d, const Rational& h) {
  if (n < 1) throw GhError(Errc::InvalidParameter, "n must be at least 1");
  if (d <= 0) {
    throw GhError(Errc::InvalidParameter, "gap radius must be positive, got " + to_string(d));
  }
  if (a - d <= -n || a + d >= n) {
    throw GhError(Errc::GapOutOfRange,
                  "gap (" + to_string(a - d) + ", " + to_string(a + d) +
                      ") is not strictly inside the segment");
  }
  std::vector<Rational> coords;
  for (const auto& c : detail::grid_coords(n, h)) {
    if (c > a - d && c < a + d) continue;
    coords.push_back(c);
  }
  return line_space(coords);
}

enum class Family { Integers, SegmentGrid, RTildeGrid, Geometric, PhiPowers, GappedSegment };

inline Family family_from_name(std::string_view name) {
  if (name == "integers") return Family::Integers;
  if (name == "segment") return Family::SegmentGrid;
  if (name == "rtilde") return Family::RTildeGrid;
  if (name == "geometric") return Family::Geometric;
  if (name == "phi") return Family::PhiPowers;
  if (name == "gapped") return Family::GappedSegment;
  throw GhError(Errc::InvalidParameter, "unknown family '" + std::string(name) + "'");
}

inline std::string_view family_name(Family kind) {
  switch (kind) {
    case Family::Integers: return "integers";
    case Family::SegmentGrid: return "segment";
    case Family::RTildeGrid: return "rtilde";
    case Family::Geometric: return "geometric";
    case Family::PhiPowers: return "phi";
    case Family::GappedSegment: return "gapped";
  }
  return "?";
}

// A family name plus its parameters, e.g. for building spaces from CLI
// flags or probing a whole parameterized family.
struct FamilySpec {
  Family kind = Family::Integers;
  std::map<std::string, Rational> params;
};

namespace detail {

inline const Rational& require_param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw GhError(Errc::InvalidParameter,
                  "family '" + std::string(family_name(spec.kind)) +
                      "' needs parameter '" + key + "'");
  }
  return it->second;
}

}  // namespace detail

inline FiniteMetricSpace instantiate(const FamilySpec& spec) {
  using detail::require_param;
  using detail::require_positive_long;
  switch (spec.kind) {
    case Family::Integers:
      return integers(require_positive_long(require_param(spec, "n"), "n"));
    case Family::SegmentGrid:
      return segment_grid(require_positive_long(require_param(spec, "n"), "n"),
                          require_param(spec, "h"));
    case Family::RTildeGrid:
      return rtilde_grid(require_positive_long(require_param(spec, "n"), "n"),
                         require_param(spec, "h"));
    case Family::Geometric:
      return geometric(require_positive_long(require_param(spec, "p"), "p"),
                       require_positive_long(require_param(spec, "n"), "n"));
    case Family::PhiPowers: {
      PhiKind phi = PhiKind::Squares;
      if (auto it = spec.params.find("phi"); it != spec.params.end()) {
        if (it->second == 1) {
          phi = PhiKind::Squares;
        } else if (it->second == 2) {
          phi = PhiKind::PowersOfTwo;
        } else {
          throw GhError(Errc::InvalidParameter,
                        "phi selector must be 1 (squares) or 2 (powers of two)");
        }
      }
      return phi_powers(require_param(spec, "q"), phi,
                        require_positive_long(require_param(spec, "n"), "n"));
    }
    case Family::GappedSegment:
      return gapped_segment(require_positive_long(require_param(spec, "n"), "n"),
                            require_param(spec, "a"), require_param(spec, "d"),
                            require_param(spec, "h"));
  }
  throw GhError(Errc::InvalidParameter, "unknown family");
}

}  // namespace ghdist
