#pragma once

// Shared helpers for the test binaries. The reference minimizer here stays
// deliberately primitive: natural index order, plain rational arithmetic,
// no seeding, no ordering heuristics, nothing shared with the library's
// solver beyond the function-pair shape of a correspondence.

#include <sys/wait.h>

#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "ghdist/metric_space.hpp"
#include "ghdist/rational.hpp"

namespace support {

using ghdist::FiniteMetricSpace;
using ghdist::Rational;

namespace detail {

struct Enumerator {
  const FiniteMetricSpace& x;
  const FiniteMetricSpace& y;
  std::vector<std::size_t> f;
  std::vector<std::size_t> targets;
  std::vector<std::size_t> g;
  Rational best;
  bool have_best = false;

  explicit Enumerator(const FiniteMetricSpace& x_, const FiniteMetricSpace& y_)
      : x(x_), y(y_), f(x_.size()) {}

  Rational extend_f(std::size_t depth, std::size_t target, const Rational& partial) const {
    Rational worst = partial;
    for (std::size_t d = 0; d < depth; ++d) {
      Rational c = x.dist(depth, d) - y.dist(target, f[d]);
      if (c < 0) c = -c;
      if (c > worst) worst = c;
    }
    return worst;
  }

  Rational extend_g(std::size_t u, std::size_t source, const Rational& partial) const {
    Rational worst = partial;
    for (std::size_t i = 0; i < x.size(); ++i) {
      Rational c = x.dist(source, i) - y.dist(targets[u], f[i]);
      if (c < 0) c = -c;
      if (c > worst) worst = c;
    }
    for (std::size_t v = 0; v < u; ++v) {
      Rational c = x.dist(source, g[v]) - y.dist(targets[u], targets[v]);
      if (c < 0) c = -c;
      if (c > worst) worst = c;
    }
    return worst;
  }

  void collect_targets() {
    std::vector<bool> covered(y.size(), false);
    for (std::size_t i = 0; i < x.size(); ++i) covered[f[i]] = true;
    targets.clear();
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!covered[j]) targets.push_back(j);
    }
    g.assign(targets.size(), 0);
  }

  void walk_f(std::size_t depth, const Rational& partial) {
    if (depth == x.size()) {
      collect_targets();
      walk_g(0, partial);
      return;
    }
    for (std::size_t target = 0; target < y.size(); ++target) {
      Rational ext = extend_f(depth, target, partial);
      if (have_best && ext >= best) continue;
      f[depth] = target;
      walk_f(depth + 1, ext);
    }
  }

  void walk_g(std::size_t u, const Rational& partial) {
    if (u == targets.size()) {
      if (!have_best || partial < best) {
        best = partial;
        have_best = true;
      }
      return;
    }
    for (std::size_t source = 0; source < x.size(); ++source) {
      Rational ext = extend_g(u, source, partial);
      if (have_best && ext >= best) continue;
      g[u] = source;
      walk_g(u + 1, ext);
    }
  }

  // First complete leaf in lexicographic order whose distortion does not
  // exceed the known optimum; that leaf is the lex-least optimal pair.
  bool lex_f(std::size_t depth, const Rational& partial, const Rational& optimum,
             std::vector<std::pair<std::size_t, std::size_t>>& out) {
    if (depth == x.size()) {
      collect_targets();
      return lex_g(0, partial, optimum, out);
    }
    for (std::size_t target = 0; target < y.size(); ++target) {
      Rational ext = extend_f(depth, target, partial);
      if (ext > optimum) continue;
      f[depth] = target;
      if (lex_f(depth + 1, ext, optimum, out)) return true;
    }
    return false;
  }

  bool lex_g(std::size_t u, const Rational& partial, const Rational& optimum,
             std::vector<std::pair<std::size_t, std::size_t>>& out) {
    if (u == targets.size()) {
      out.clear();
      for (std::size_t i = 0; i < x.size(); ++i) out.emplace_back(i, f[i]);
      for (std::size_t v = 0; v < targets.size(); ++v) {
        out.emplace_back(g[v], targets[v]);
      }
      return true;
    }
    for (std::size_t source = 0; source < x.size(); ++source) {
      Rational ext = extend_g(u, source, partial);
      if (ext > optimum) continue;
      g[u] = source;
      if (lex_g(u + 1, ext, optimum, out)) return true;
    }
    return false;
  }
};

}  // namespace detail

// Least distortion over every function pair, walked exhaustively.
inline Rational reference_min_distortion(const FiniteMetricSpace& x,
                                         const FiniteMetricSpace& y) {
  detail::Enumerator walker(x, y);
  walker.walk_f(0, Rational(0));
  return walker.best;
}

// Half the least distortion: the reference distance value.
inline Rational reference_distance(const FiniteMetricSpace& x,
                                   const FiniteMetricSpace& y) {
  return reference_min_distortion(x, y) / 2;
}

// Lexicographically least function pair attaining the reference minimum.
inline std::vector<std::pair<std::size_t, std::size_t>> reference_lex_witness(
    const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  detail::Enumerator walker(x, y);
  walker.walk_f(0, Rational(0));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  detail::Enumerator second(x, y);
  second.lex_f(0, Rational(0), walker.best, out);
  return out;
}

// Runs a command, captures stdout, returns the exit code.
inline int run_command(const std::string& command, std::string& output) {
  output.clear();
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return -1;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    output.append(buffer, got);
  }
  int status = pclose(pipe);
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

}  // namespace support
