#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "ghdist/correspondence.hpp"
#include "ghdist/errors.hpp"
#include "ghdist/metric_space.hpp"
#include "ghdist/rational.hpp"

namespace ghdist {

enum class SolveStatus { Exact, LowerUpper };

// Outcome of a distance computation. value is half the best witnessed
// distortion, so distortion(witness) == 2 * value always holds. When the
// search completed, status is Exact and lower == upper == value; when a node
// budget ran out first, status is LowerUpper and lower <= true value <= upper
// with value == upper.
struct GHResult {
  Rational value;
  Correspondence witness;
  SolveStatus status = SolveStatus::Exact;
  Rational lower;
  Rational upper;
  std::uint64_t nodes = 0;
};

struct SearchOptions {
  std::uint64_t budget = 0;    // max search-tree nodes; 0 means unlimited
  bool deterministic = false;  // canonicalize the witness on exact solves
  std::size_t restarts = 8;    // greedy restarts seeding the incumbent
};

// Half the diameter difference. Any correspondence relates a diametral pair
// of the wider space to something, so its distortion is at least the
// difference of diameters.
inline Rational gh_lower_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  Rational gap = diameter(x) - diameter(y);
  if (gap < 0) gap = -gap;
  return gap / 2;
}

namespace detail {

inline constexpr std::uint64_t kGreedySeed = 0x9b1a7c5d3e2f4a61ULL;

// Both matrices brought to a shared integer grid: every entry multiplied by
// the lcm of all denominators. Search arithmetic then runs on integers and
// the final value divides the unit back out.
struct ScaledPair {
  std::size_t n = 0, m = 0;
  BigInt unit = 1;
  std::vector<BigInt> dx, dy;

  const BigInt& x(std::size_t i, std::size_t j) const { return dx[i * n + j]; }
  const BigInt& y(std::size_t i, std::size_t j) const { return dy[i * m + j]; }
};

inline ScaledPair scale_to_integers(const FiniteMetricSpace& x,
                                    const FiniteMetricSpace& y) {
  using boost::multiprecision::lcm;
  ScaledPair sp;
  sp.n = x.size();
  sp.m = y.size();
  for (std::size_t i = 0; i < sp.n; ++i) {
    for (std::size_t j = 0; j < sp.n; ++j) {
      sp.unit = lcm(sp.unit, denominator(x.dist(i, j)));
    }
  }
  for (std::size_t i = 0; i < sp.m; ++i) {
    for (std::size_t j = 0; j < sp.m; ++j) {
      sp.unit = lcm(sp.unit, denominator(y.dist(i, j)));
    }
  }
  sp.dx.reserve(sp.n * sp.n);
  for (std::size_t i = 0; i < sp.n; ++i) {
    for (std::size_t j = 0; j < sp.n; ++j) {
      const Rational& d = x.dist(i, j);
      sp.dx.push_back(numerator(d) * (sp.unit / denominator(d)));
    }
  }
  sp.dy.reserve(sp.m * sp.m);
  for (std::size_t i = 0; i < sp.m; ++i) {
    for (std::size_t j = 0; j < sp.m; ++j) {
      const Rational& d = y.dist(i, j);
      sp.dy.push_back(numerator(d) * (sp.unit / denominator(d)));
    }
  }
  return sp;
}

inline BigInt scaled_diameter(const std::vector<BigInt>& flat) {
  BigInt best = 0;
  for (const auto& d : flat) {
    if (d > best) best = d;
  }
  return best;
}

// A correspondence in function-pair form: f covers all of X, g covers the
// part of Y that f misses. Greedy search keeps g total instead; both shapes
// convert to the same pair list.
struct FunctionPairWitness {
  std::vector<std::size_t> f;
  std::vector<std::size_t> g_targets;
  std::vector<std::size_t> g;

  Correspondence to_correspondence() const {
    std::vector<Correspondence::IndexPair> pairs;
    pairs.reserve(f.size() + g.size());
    for (std::size_t i = 0; i < f.size(); ++i) pairs.emplace_back(i, f[i]);
    for (std::size_t k = 0; k < g.size(); ++k) pairs.emplace_back(g[k], g_targets[k]);
    return Correspondence(std::move(pairs));
  }
};

struct GreedyOutcome {
  BigInt dis = 0;
  FunctionPairWitness witness;
};

// Local search over total function pairs. Deterministic: restart 0 starts
// from the aligned assignment i -> i mod m, later restarts from seeded draws,
// and each pass applies the first strictly improving move in index order.
inline GreedyOutcome greedy_core(const ScaledPair& sp, std::size_t restarts) {
  const std::size_t n = sp.n, m = sp.m;
  const std::size_t npairs = n + m;

  std::vector<std::size_t> f(n), g(m);
  // pair a < n is (a, f[a]); pair n + j is (g[j], j)
  const auto px = [&](std::size_t a) { return a < n ? a : g[a - n]; };
  const auto py = [&](std::size_t a) { return a < n ? f[a] : a - n; };

  std::vector<std::vector<BigInt>> cost(npairs, std::vector<BigInt>(npairs, BigInt(0)));
  const auto pair_cost = [&](std::size_t a, std::size_t b) {
    BigInt d = sp.x(px(a), px(b)) - sp.y(py(a), py(b));
    if (d < 0) d = -d;
    return d;
  };
  const auto fill_costs = [&]() {
    BigInt worst = 0;
    for (std::size_t a = 0; a < npairs; ++a) {
      for (std::size_t b = a + 1; b < npairs; ++b) {
        cost[a][b] = pair_cost(a, b);
        cost[b][a] = cost[a][b];
        if (cost[a][b] > worst) worst = cost[a][b];
      }
    }
    return worst;
  };
  // max over cached costs with both endpoints distinct from pair a
  const auto max_excluding = [&](std::size_t a) {
    BigInt worst = 0;
    for (std::size_t b = 0; b < npairs; ++b) {
      if (b == a) continue;
      for (std::size_t c = b + 1; c < npairs; ++c) {
        if (c == a) continue;
        if (cost[b][c] > worst) worst = cost[b][c];
      }
    }
    return worst;
  };

  GreedyOutcome best;
  bool have_best = false;

  std::vector<BigInt> fresh(npairs);
  for (std::size_t r = 0; r < restarts; ++r) {
    if (r == 0) {
      for (std::size_t i = 0; i < n; ++i) f[i] = i % m;
      for (std::size_t j = 0; j < m; ++j) g[j] = j % n;
    } else {
      std::mt19937_64 rng(kGreedySeed ^ (0x9e3779b97f4a7c15ULL * r));
      for (std::size_t i = 0; i < n; ++i) f[i] = rng() % m;
      for (std::size_t j = 0; j < m; ++j) g[j] = rng() % n;
    }
    BigInt dis = fill_costs();

    bool improved = true;
    while (improved && dis != 0) {
      improved = false;
      for (std::size_t a = 0; a < npairs && !improved; ++a) {
        const BigInt rest = max_excluding(a);
        if (rest >= dis) continue;  // moving pair a cannot beat the rest
        const std::size_t limit = a < n ? m : n;
        const std::size_t current = a < n ? f[a] : g[a - n];
        for (std::size_t target = 0; target < limit; ++target) {
          if (target == current) continue;
          if (a < n) f[a] = target; else g[a - n] = target;
          BigInt trial = rest;
          for (std::size_t b = 0; b < npairs; ++b) {
            if (b == a) continue;
            fresh[b] = pair_cost(a, b);
            if (fresh[b] > trial) trial = fresh[b];
          }
          if (trial < dis) {
            dis = trial;
            for (std::size_t b = 0; b < npairs; ++b) {
              if (b == a) continue;
              cost[a][b] = fresh[b];
              cost[b][a] = fresh[b];
            }
            improved = true;
            break;
          }
          if (a < n) f[a] = current; else g[a - n] = current;
        }
      }
    }

    if (!have_best || dis < best.dis) {
      best.dis = dis;
      best.witness.f = f;
      best.witness.g_targets.resize(m);
      std::iota(best.witness.g_targets.begin(), best.witness.g_targets.end(), 0);
      best.witness.g = g;
      have_best = true;
    }
  }
  return best;
}

// Depth-first search over function pairs: assign f over X in decreasing
// eccentricity order, then cover the Y points f missed. Prunes on the
// incumbent; counts one node per attempted assignment. When the node budget
// runs out, the least partial distortion among the abandoned subtrees still
// bounds the optimum from below.
class Bnb {
 public:
  Bnb(const ScaledPair& sp, BigInt incumbent, FunctionPairWitness seed,
      std::uint64_t budget)
      : sp_(sp),
        incumbent_(std::move(incumbent)),
        best_(std::move(seed)),
        budget_(budget) {
    order_.resize(sp_.n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<BigInt> ecc(sp_.n, BigInt(0));
    for (std::size_t i = 0; i < sp_.n; ++i) {
      for (std::size_t j = 0; j < sp_.n; ++j) {
        if (sp_.x(i, j) > ecc[i]) ecc[i] = sp_.x(i, j);
      }
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return ecc[a] > ecc[b]; });
    f_.resize(sp_.n);
  }

  void run() { assign_f(0, BigInt(0)); }

  const BigInt& incumbent() const { return incumbent_; }
  const FunctionPairWitness& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

  // Valid only after an exhausted run: no complete leaf below any abandoned
  // node can have distortion under this.
  BigInt abandoned_floor() const {
    if (!abandoned_) return incumbent_;
    return frontier_ < incumbent_ ? frontier_ : incumbent_;
  }

 private:
  bool budget_left() const { return budget_ == 0 || nodes_ < budget_; }

  void note_abandoned(const BigInt& partial) {
    if (!abandoned_ || partial < frontier_) frontier_ = partial;
    abandoned_ = true;
  }

  void assign_f(std::size_t depth, const BigInt& partial) {
    if (depth == sp_.n) {
      start_g(partial);
      return;
    }
    const std::size_t xi = order_[depth];
    for (std::size_t target = 0; target < sp_.m; ++target) {
      if (exhausted_) {
        note_abandoned(partial);
        return;
      }
      BigInt ext = partial;
      for (std::size_t d = 0; d < depth && ext < incumbent_; ++d) {
        const std::size_t xa = order_[d];
        BigInt c = sp_.x(xi, xa) - sp_.y(target, f_[xa]);
        if (c < 0) c = -c;
        if (c > ext) ext = c;
      }
      ++nodes_;
      if (ext >= incumbent_) continue;
      if (!budget_left()) {
        exhausted_ = true;
        note_abandoned(ext);
        return;
      }
      f_[xi] = target;
      assign_f(depth + 1, ext);
    }
  }

  void start_g(const BigInt& partial) {
    std::vector<bool> covered(sp_.m, false);
    for (std::size_t i = 0; i < sp_.n; ++i) covered[f_[i]] = true;
    targets_.clear();
    for (std::size_t j = 0; j < sp_.m; ++j) {
      if (!covered[j]) targets_.push_back(j);
    }
    g_.assign(targets_.size(), 0);
    assign_g(0, partial);
  }

  void assign_g(std::size_t u, const BigInt& partial) {
    if (u == targets_.size()) {
      // complete correspondence; partial is its full distortion
      incumbent_ = partial;
      best_.f = f_;
      best_.g_targets = targets_;
      best_.g = g_;
      return;
    }
    const std::size_t yj = targets_[u];
    for (std::size_t source = 0; source < sp_.n; ++source) {
      if (exhausted_) {
        note_abandoned(partial);
        return;
      }
      BigInt ext = partial;
      for (std::size_t i = 0; i < sp_.n && ext < incumbent_; ++i) {
        BigInt c = sp_.x(source, i) - sp_.y(yj, f_[i]);
        if (c < 0) c = -c;
        if (c > ext) ext = c;
      }
      for (std::size_t v = 0; v < u && ext < incumbent_; ++v) {
        BigInt c = sp_.x(source, g_[v]) - sp_.y(yj, targets_[v]);
        if (c < 0) c = -c;
        if (c > ext) ext = c;
      }
      ++nodes_;
      if (ext >= incumbent_) continue;
      if (!budget_left()) {
        exhausted_ = true;
        note_abandoned(ext);
        return;
      }
      g_[u] = source;
      assign_g(u + 1, ext);
    }
  }

  const ScaledPair& sp_;
  BigInt incumbent_;
  FunctionPairWitness best_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool abandoned_ = false;
  BigInt frontier_;
  std::vector<std::size_t> order_, f_, targets_, g_;
};

// Lexicographically smallest optimal function pair: f filled in natural
// index order with the smallest viable targets, then g over the missed Y
// points in ascending order. Pruning keeps everything that still ties the
// optimum, so the first complete leaf is the canonical witness.
class LexCanonical {
 public:
  LexCanonical(const ScaledPair& sp, const BigInt& optimum)
      : sp_(sp), optimum_(optimum) {
    f_.resize(sp_.n);
  }

  FunctionPairWitness find() {
    assign_f(0);
    return best_;
  }

 private:
  bool assign_f(std::size_t depth) {
    if (depth == sp_.n) return start_g();
    for (std::size_t target = 0; target < sp_.m; ++target) {
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        BigInt c = sp_.x(depth, d) - sp_.y(target, f_[d]);
        if (c < 0) c = -c;
        if (c > optimum_) ok = false;
      }
      if (!ok) continue;
      f_[depth] = target;
      if (assign_f(depth + 1)) return true;
    }
    return false;
  }

  bool start_g() {
    std::vector<bool> covered(sp_.m, false);
    for (std::size_t i = 0; i < sp_.n; ++i) covered[f_[i]] = true;
    targets_.clear();
    for (std::size_t j = 0; j < sp_.m; ++j) {
      if (!covered[j]) targets_.push_back(j);
    }
    g_.assign(targets_.size(), 0);
    return assign_g(0);
  }

  bool assign_g(std::size_t u) {
    if (u == targets_.size()) {
      best_.f = f_;
      best_.g_targets = targets_;
      best_.g = g_;
      return true;
    }
    const std::size_t yj = targets_[u];
    for (std::size_t source = 0; source < sp_.n; ++source) {
      bool ok = true;
      for (std::size_t i = 0; i < sp_.n && ok; ++i) {
        BigInt c = sp_.x(source, i) - sp_.y(yj, f_[i]);
        if (c < 0) c = -c;
        if (c > optimum_) ok = false;
      }
      for (std::size_t v = 0; v < u && ok; ++v) {
        BigInt c = sp_.x(source, g_[v]) - sp_.y(yj, targets_[v]);
        if (c < 0) c = -c;
        if (c > optimum_) ok = false;
      }
      if (!ok) continue;
      g_[u] = source;
      if (assign_g(u + 1)) return true;
    }
    return false;
  }

  const ScaledPair& sp_;
  const BigInt& optimum_;
  FunctionPairWitness best_;
  std::vector<std::size_t> f_, targets_, g_;
};

}  // namespace detail

// Best total-function-pair correspondence found by seeded local search.
// Always a true upper bound; equality with the distance is not guaranteed.
inline std::pair<Rational, Correspondence> gh_upper_bound_greedy(
    const FiniteMetricSpace& x, const FiniteMetricSpace& y,
    std::size_t restarts = 8) {
  if (restarts < 1) {
    throw GhError(Errc::InvalidParameter, "greedy needs at least one restart");
  }
  const auto sp = detail::scale_to_integers(x, y);
  auto outcome = detail::greedy_core(sp, restarts);
  return {Rational(outcome.dis, 2 * sp.unit),
          outcome.witness.to_correspondence()};
}

// Ground truth by exhaustion: walks every subset of X x Y that covers both
// sides. Only feasible for very small spaces, hence the hard size cap.
inline GHResult gh_oracle(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const std::size_t n = x.size(), m = y.size();
  if (n > 4 || m > 4) {
    throw GhError(Errc::TooLargeForOracle,
                  "oracle is capped at 4 x 4 points, got " + std::to_string(n) +
                      " x " + std::to_string(m));
  }
  const auto sp = detail::scale_to_integers(x, y);
  const unsigned cells = static_cast<unsigned>(n * m);

  std::vector<std::vector<BigInt>> cost(cells, std::vector<BigInt>(cells));
  for (unsigned a = 0; a < cells; ++a) {
    for (unsigned b = 0; b < cells; ++b) {
      BigInt d = sp.x(a / m, b / m) - sp.y(a % m, b % m);
      if (d < 0) d = -d;
      cost[a][b] = std::move(d);
    }
  }
  std::vector<std::uint32_t> row_mask(n, 0), col_mask(m, 0);
  for (unsigned a = 0; a < cells; ++a) {
    row_mask[a / m] |= 1u << a;
    col_mask[a % m] |= 1u << a;
  }

  // start from the full correspondence; its distortion is the larger diameter
  BigInt best = detail::scaled_diameter(sp.dx);
  BigInt dy_diam = detail::scaled_diameter(sp.dy);
  if (dy_diam > best) best = dy_diam;
  std::uint32_t best_mask = (1u << cells) - 1;

  std::uint64_t examined = 0;
  unsigned idx[16];
  const std::uint32_t limit = (1u << cells) - 1;
  const int need = static_cast<int>(std::max(n, m));
  for (std::uint32_t mask = 1; mask <= limit; ++mask) {
    if (std::popcount(mask) < need) continue;
    bool covers = true;
    for (std::size_t i = 0; i < n && covers; ++i) covers = (mask & row_mask[i]) != 0;
    for (std::size_t j = 0; j < m && covers; ++j) covers = (mask & col_mask[j]) != 0;
    if (!covers) continue;
    ++examined;

    unsigned k = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      idx[k++] = static_cast<unsigned>(std::countr_zero(rest));
    }
    BigInt dis = 0;
    bool worse = false;
    for (unsigned a = 1; a < k && !worse; ++a) {
      for (unsigned b = 0; b < a; ++b) {
        const BigInt& c = cost[idx[a]][idx[b]];
        if (c > dis) {
          dis = c;
          if (dis >= best) {
            worse = true;
            break;
          }
        }
      }
    }
    if (!worse && dis < best) {
      best = dis;
      best_mask = mask;
    }
  }

  std::vector<Correspondence::IndexPair> pairs;
  for (std::uint32_t rest = best_mask; rest; rest &= rest - 1) {
    unsigned a = static_cast<unsigned>(std::countr_zero(rest));
    pairs.emplace_back(a / m, a % m);
  }
  GHResult result;
  result.value = Rational(best, 2 * sp.unit);
  result.witness = Correspondence(std::move(pairs));
  result.status = SolveStatus::Exact;
  result.lower = result.value;
  result.upper = result.value;
  result.nodes = examined;
  return result;
}

// Exact distance by branch and bound over function pairs, seeded with the
// greedy upper bound. Every correspondence contains a function pair with no
// larger distortion (drop pairs until each X point keeps one partner, then
// each missed Y point keeps one), so the restriction loses nothing.
inline GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                         const SearchOptions& options = {}) {
  const auto sp = detail::scale_to_integers(x, y);
  auto seed = detail::greedy_core(sp, options.restarts == 0 ? 1 : options.restarts);

  detail::Bnb search(sp, seed.dis, seed.witness, options.budget);
  search.run();

  GHResult result;
  result.nodes = search.nodes();
  result.value = Rational(search.incumbent(), 2 * sp.unit);
  result.upper = result.value;

  if (search.exhausted() && search.abandoned_floor() < search.incumbent()) {
    result.status = SolveStatus::LowerUpper;
    Rational floor = Rational(search.abandoned_floor(), 2 * sp.unit);
    Rational diam_gap = gh_lower_bound(x, y);
    result.lower = floor > diam_gap ? floor : diam_gap;
    result.witness = search.best().to_correspondence();
    return result;
  }

  result.status = SolveStatus::Exact;
  result.lower = result.value;
  if (options.deterministic) {
    detail::LexCanonical canon(sp, search.incumbent());
    result.witness = canon.find().to_correspondence();
  } else {
    result.witness = search.best().to_correspondence();
  }
  return result;
}

}  // namespace ghdist
