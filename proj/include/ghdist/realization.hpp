#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "ghdist/errors.hpp"
#include "ghdist/metric_space.hpp"

namespace ghdist {

// Two subsets of a common ambient space. The ambient metric restricted to
// each subset realizes one of the spaces being compared, so the Hausdorff
// distance between the subsets certifies an upper bound on their distance.
class Realization {
 public:
  Realization(FiniteMetricSpace ambient, std::vector<std::size_t> subset_a,
              std::vector<std::size_t> subset_b)
      : ambient_(std::move(ambient)),
        a_(std::move(subset_a)),
        b_(std::move(subset_b)) {
    normalize(a_, "subset A");
    normalize(b_, "subset B");
  }

  const FiniteMetricSpace& ambient() const noexcept { return ambient_; }
  const std::vector<std::size_t>& subset_a() const noexcept { return a_; }
  const std::vector<std::size_t>& subset_b() const noexcept { return b_; }

 private:
  void normalize(std::vector<std::size_t>& subset, const char* which) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) {
      throw GhError(Errc::InvalidParameter,
                    std::string(which) + " must be nonempty");
    }
    if (subset.back() >= ambient_.size()) {
      throw GhError(Errc::IndexOutOfRange,
                    std::string(which) + " references a point outside the ambient space");
    }
  }

  FiniteMetricSpace ambient_;
  std::vector<std::size_t> a_;
  std::vector<std::size_t> b_;
};

namespace detail {

inline Rational directed_hausdorff(const FiniteMetricSpace& ambient,
                                   const std::vector<std::size_t>& from,
                                   const std::vector<std::size_t>& to) {
  Rational worst = 0;
  for (std::size_t p : from) {
    Rational nearest = ambient.dist(p, to.front());
    for (std::size_t q : to) {
      const Rational& d = ambient.dist(p, q);
      if (d < nearest) nearest = d;
    }
    if (nearest > worst) worst = nearest;
  }
  return worst;
}

}  // namespace detail

// max over both directions of the distance to the nearest point across.
inline Rational hausdorff_in_ambient(const Realization& realization) {
  const auto& amb = realization.ambient();
  Rational ab = detail::directed_hausdorff(amb, realization.subset_a(),
                                           realization.subset_b());
  Rational ba = detail::directed_hausdorff(amb, realization.subset_b(),
                                           realization.subset_a());
  return ab > ba ? ab : ba;
}

inline Rational hausdorff_in_ambient(const FiniteMetricSpace& ambient,
                                     std::vector<std::size_t> subset_a,
                                     std::vector<std::size_t> subset_b) {
  return hausdorff_in_ambient(
      Realization(ambient, std::move(subset_a), std::move(subset_b)));
}

}  // namespace ghdist
