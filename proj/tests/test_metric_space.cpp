#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <vector>

#include "ghdist/constructions.hpp"
#include "ghdist/metric_space.hpp"
#include "ghdist/realization.hpp"
#include "ghdist/verify.hpp"

using ghdist::Errc;
using ghdist::FiniteMetricSpace;
using ghdist::GhError;
using ghdist::Matrix;
using ghdist::Rational;
using ghdist::ValidationError;

namespace {

bool has_violation(const std::vector<ghdist::MetricViolation>& violations, Errc code) {
  for (const auto& v : violations) {
    if (v.code == code) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validate accepts proper metric spaces") {
  CHECK(ghdist::validate({"a"}, {{0}}).empty());
  CHECK(ghdist::validate({"a", "b"}, {{0, 1}, {1, 0}}).empty());
  CHECK(ghdist::validate({"x", "y", "z"},
                         {{0, 1, 5}, {1, 0, 4}, {5, 4, 0}})
            .empty());
}

TEST_CASE("validate reports a nonzero diagonal") {
  auto violations = ghdist::validate({"a", "b"}, {{0, 1}, {1, 2}});
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].code == Errc::NonzeroDiagonal);
  CHECK(violations[0].i == 1);
}

TEST_CASE("validate reports asymmetry with both indices") {
  auto violations = ghdist::validate({"a", "b"}, {{0, 1}, {2, 0}});
  REQUIRE(!violations.empty());
  CHECK(violations[0].code == Errc::Asymmetric);
  CHECK(violations[0].i == 0);
  CHECK(violations[0].j == 1);
}

TEST_CASE("validate reports nonpositive off-diagonal entries") {
  auto violations = ghdist::validate({"a", "b"}, {{0, 0}, {0, 0}});
  CHECK(has_violation(violations, Errc::NonpositiveOffDiagonal));
  violations = ghdist::validate({"a", "b"}, {{0, -1}, {-1, 0}});
  CHECK(has_violation(violations, Errc::NonpositiveOffDiagonal));
}

TEST_CASE("validate reports triangle violations with the witness triple") {
  auto violations = ghdist::validate({"a", "b", "c"},
                                     {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
  REQUIRE(has_violation(violations, Errc::TriangleViolation));
  bool found = false;
  for (const auto& v : violations) {
    if (v.code == Errc::TriangleViolation && v.i == 0 && v.j == 1 && v.k == 2) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("validate reports duplicate labels and shape problems") {
  CHECK(has_violation(ghdist::validate({"a", "a"}, {{0, 1}, {1, 0}}),
                      Errc::DuplicateLabel));
  CHECK(has_violation(ghdist::validate({"a", "b"}, {{0, 1}}), Errc::NonSquare));
  CHECK(has_violation(ghdist::validate({"a"}, {{0, 1}}), Errc::NonSquare));
  CHECK(has_violation(ghdist::validate({}, {}), Errc::NonSquare));
}

TEST_CASE("validate lists every violation, not only the first") {
  // diagonal broken at 1, asymmetric (0,1), negative entry (2,0)/(0,2)
  auto violations = ghdist::validate(
      {"a", "b", "c"}, {{0, 2, -1}, {3, 1, 1}, {-1, 1, 0}});
  CHECK(has_violation(violations, Errc::NonzeroDiagonal));
  CHECK(has_violation(violations, Errc::Asymmetric));
  CHECK(has_violation(violations, Errc::NonpositiveOffDiagonal));
  CHECK(violations.size() >= 3);
}

TEST_CASE("create throws ValidationError carrying the list") {
  try {
    FiniteMetricSpace::create({"a", "b"}, {{0, 1}, {1, 2}});
    FAIL("expected ValidationError");
  } catch (const ValidationError& err) {
    REQUIRE(err.violations().size() == 1);
    CHECK(err.violations()[0].code == Errc::NonzeroDiagonal);
  }
}

TEST_CASE("diameter") {
  CHECK(ghdist::diameter(ghdist::one_point()) == 0);
  CHECK(ghdist::diameter(ghdist::line_space({0, 1, 2})) == 2);
  CHECK(ghdist::diameter(ghdist::integers(3)) == 6);
  CHECK(ghdist::diameter(ghdist::simplex(5)) == 1);
}

TEST_CASE("scale by positive factors multiplies entries") {
  auto pair = ghdist::line_space({0, 1});
  auto doubled = ghdist::scale(pair, 2);
  CHECK(doubled.dist(0, 1) == 2);
  CHECK(doubled.labels() == pair.labels());
}

TEST_CASE("scale by zero collapses to the one-point space") {
  CHECK(ghdist::scale(ghdist::integers(2), 0) == ghdist::one_point());
  CHECK(ghdist::scale(ghdist::one_point(), 0) == ghdist::one_point());
}

TEST_CASE("scale rejects negative factors") {
  CHECK_THROWS_AS(ghdist::scale(ghdist::one_point(), -1), GhError);
  try {
    ghdist::scale(ghdist::line_space({0, 1}), Rational(-1, 2));
    FAIL("expected GhError");
  } catch (const GhError& err) {
    CHECK(err.code() == Errc::NegativeScale);
  }
}

TEST_CASE("scaling composes and scales the diameter linearly") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto space = ghdist::random_space(rng, 2, 6);
    for (const Rational& factor : {Rational(2), Rational(1, 3), Rational(7, 5)}) {
      auto scaled = ghdist::scale(space, factor);
      CHECK(ghdist::diameter(scaled) == factor * ghdist::diameter(space));
      CHECK(ghdist::scale(scaled, Rational(3, 2)) ==
            ghdist::scale(space, factor * Rational(3, 2)));
    }
  }
}

TEST_CASE("simplex has unit distances everywhere") {
  auto s = ghdist::simplex(4);
  REQUIRE(s.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(s.dist(i, j) == (i == j ? 0 : 1));
    }
  }
  CHECK_THROWS_AS(ghdist::simplex(0), GhError);
}

TEST_CASE("simplex extension distances follow the base point") {
  // two points 3 apart, extend at the first by a 2-point simplex
  auto base = ghdist::line_space({0, 3});
  auto ext = ghdist::simplex_extend(base, 0, 2);
  REQUIRE(ext.size() == 4);
  CHECK(ext.dist(2, 3) == 1);       // new points sit 1 apart
  CHECK(ext.dist(2, 0) == 1);       // base is 1 away
  CHECK(ext.dist(2, 1) == 4);       // far point is d + 1 away
  CHECK(ext.dist(3, 1) == 4);
  CHECK(ghdist::validate(ext.labels(), ext.matrix()).empty());
}

TEST_CASE("simplex extension keeps labels distinct") {
  auto ext = ghdist::simplex_extend(ghdist::simplex(2), 0, 2);
  // base already uses s1, s2; the new points must dodge them
  REQUIRE(ext.size() == 4);
  CHECK(ext.label(2) == "s3");
  CHECK(ext.label(3) == "s4");
}

TEST_CASE("simplex extension rejects a bad base index") {
  try {
    ghdist::simplex_extend(ghdist::one_point(), 1, 1);
    FAIL("expected GhError");
  } catch (const GhError& err) {
    CHECK(err.code() == Errc::IndexOutOfRange);
  }
}

TEST_CASE("random extensions validate and stay within Hausdorff distance 1") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    auto space = ghdist::random_space(rng, 2, 6);
    std::size_t base = rng() % space.size();
    for (std::size_t m : {1, 3, 7}) {
      auto ext = ghdist::simplex_extend(space, base, m);
      CHECK(ghdist::validate(ext.labels(), ext.matrix()).empty());
      std::vector<std::size_t> left(space.size()), all(ext.size());
      std::iota(left.begin(), left.end(), 0);
      std::iota(all.begin(), all.end(), 0);
      CHECK(ghdist::hausdorff_in_ambient(ext, left, all) <= 1);
    }
  }
}

TEST_CASE("hausdorff distance inside an ambient space") {
  auto grid = ghdist::segment_grid(2, Rational(1, 2));
  // the integers sit at indices 0, 2, 4, 6, 8 of the 9-point grid
  CHECK(ghdist::hausdorff_in_ambient(grid, {0, 2, 4, 6, 8},
                                     {0, 1, 2, 3, 4, 5, 6, 7, 8}) ==
        Rational(1, 2));
  CHECK(ghdist::hausdorff_in_ambient(grid, {0}, {8}) == 4);
  CHECK(ghdist::hausdorff_in_ambient(grid, {0, 8}, {0, 8}) == 0);
}

TEST_CASE("hausdorff is symmetric and zero only on equal subsets") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    auto space = ghdist::random_space(rng, 3, 7);
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (rng() % 2) a.push_back(i);
      if (rng() % 2) b.push_back(i);
    }
    if (a.empty()) a.push_back(0);
    if (b.empty()) b.push_back(space.size() - 1);
    auto ab = ghdist::hausdorff_in_ambient(space, a, b);
    auto ba = ghdist::hausdorff_in_ambient(space, b, a);
    CHECK(ab == ba);
    CHECK((ab == 0) == (a == b));
  }
}

TEST_CASE("realization rejects empty and out-of-range subsets") {
  auto space = ghdist::line_space({0, 1});
  CHECK_THROWS_AS(ghdist::Realization(space, {}, {0}), GhError);
  CHECK_THROWS_AS(ghdist::Realization(space, {0}, {2}), GhError);
  try {
    ghdist::Realization realization(space, {0, 1, 1}, {0});
    CHECK(realization.subset_a() == std::vector<std::size_t>{0, 1});
  } catch (...) {
    FAIL("duplicates should be tolerated");
  }
}
