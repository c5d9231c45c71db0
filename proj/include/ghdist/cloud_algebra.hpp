#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ghdist/constructions.hpp"
#include "ghdist/errors.hpp"
#include "ghdist/gh_search.hpp"
#include "ghdist/metric_space.hpp"

namespace ghdist {

// Distance to the one-point space: half the diameter. The only
// correspondence matches everything to the single point, so the distortion
// is exactly the diameter.
inline Rational dist_to_point(const FiniteMetricSpace& space) {
  return diameter(space) / 2;
}

// A checked identity: the searched value and the closed form it must equal.
struct IdentityReport {
  Rational searched;
  Rational closed_form;
};

namespace detail {

inline Rational exact_or_throw(const FiniteMetricSpace& x,
                               const FiniteMetricSpace& y,
                               const SearchOptions& options,
                               const char* what) {
  GHResult result = gh_exact(x, y, options);
  if (result.status != SolveStatus::Exact) {
    throw GhError(Errc::SearchIncomplete,
                  std::string(what) + ": budget ran out with bounds [" +
                      to_string(result.lower) + ", " + to_string(result.upper) +
                      "]");
  }
  return result.value;
}

}  // namespace detail

// |aX, bX| = |a - b| * diam(X) / 2. Solves the left side by search and
// fails hard if it disagrees with the closed form.
inline IdentityReport check_scaling_identity(const FiniteMetricSpace& space,
                                             const Rational& lambda,
                                             const Rational& mu,
                                             const SearchOptions& options = {}) {
  FiniteMetricSpace left = scale(space, lambda);
  FiniteMetricSpace right = scale(space, mu);
  Rational searched = detail::exact_or_throw(left, right, options, "scaling identity");
  Rational gap = lambda - mu;
  if (gap < 0) gap = -gap;
  Rational closed = gap * diameter(space) / 2;
  if (searched != closed) {
    throw GhError(Errc::IdentityViolated,
                  "scaling identity violated: searched " + to_string(searched) +
                      ", closed form " + to_string(closed));
  }
  return {searched, closed};
}

// |lambda X, lambda Y| = lambda * |X, Y| for lambda > 0.
inline IdentityReport check_homogeneity(const FiniteMetricSpace& x,
                                        const FiniteMetricSpace& y,
                                        const Rational& lambda,
                                        const SearchOptions& options = {}) {
  if (lambda <= 0) {
    throw GhError(Errc::InvalidParameter,
                  "homogeneity needs a positive factor, got " + to_string(lambda));
  }
  Rational base = detail::exact_or_throw(x, y, options, "homogeneity (base pair)");
  Rational scaled = detail::exact_or_throw(scale(x, lambda), scale(y, lambda),
                                           options, "homogeneity (scaled pair)");
  Rational closed = lambda * base;
  if (scaled != closed) {
    throw GhError(Errc::IdentityViolated,
                  "homogeneity violated: searched " + to_string(scaled) +
                      ", closed form " + to_string(closed));
  }
  return {scaled, closed};
}

// |X1, X2| <= max(|X1, pt|, |X2, pt|): the two-sided collapse through the
// one-point space is never beaten by more than the larger collapse.
inline IdentityReport check_ultrametric(const FiniteMetricSpace& x1,
                                        const FiniteMetricSpace& x2,
                                        const SearchOptions& options = {}) {
  Rational searched = detail::exact_or_throw(x1, x2, options, "ultrametric bound");
  Rational bound = std::max(dist_to_point(x1), dist_to_point(x2));
  if (searched > bound) {
    throw GhError(Errc::IdentityViolated,
                  "ultrametric bound violated: distance " + to_string(searched) +
                      " exceeds " + to_string(bound));
  }
  return {searched, bound};
}

// One sample of the probe: bounds on |X, lambda X| at one scale factor.
struct ProbePoint {
  Rational lambda;
  Rational lower;
  Rational upper;
};

// Sweeps |X, lambda X| over a grid of factors using the cheap bounds only.
// A factor where both bounds vanish flags a candidate stabilizer of the
// family. Capped to small spaces since the greedy side is quadratic.
inline std::vector<ProbePoint> stabilizer_probe(const FamilySpec& family,
                                                std::vector<Rational> lambda_grid,
                                                std::size_t restarts = 8) {
  FiniteMetricSpace base = instantiate(family);
  if (base.size() > 15) {
    throw GhError(Errc::InvalidParameter,
                  "probe is capped at 15 points, family instance has " +
                      std::to_string(base.size()));
  }
  if (lambda_grid.empty()) {
    throw GhError(Errc::InvalidParameter, "lambda grid is empty");
  }
  std::sort(lambda_grid.begin(), lambda_grid.end());
  lambda_grid.erase(std::unique(lambda_grid.begin(), lambda_grid.end()),
                    lambda_grid.end());

  std::vector<ProbePoint> points;
  points.reserve(lambda_grid.size());
  for (const auto& lambda : lambda_grid) {
    if (lambda <= 0) {
      throw GhError(Errc::InvalidParameter,
                    "probe factors must be positive, got " + to_string(lambda));
    }
    FiniteMetricSpace scaled = scale(base, lambda);
    ProbePoint point;
    point.lambda = lambda;
    point.lower = gh_lower_bound(base, scaled);
    point.upper = gh_upper_bound_greedy(base, scaled, restarts).first;
    points.push_back(std::move(point));
  }
  return points;
}

}  // namespace ghdist
