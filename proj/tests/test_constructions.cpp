#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ghdist/constructions.hpp"
#include "ghdist/gh_search.hpp"

using ghdist::Errc;
using ghdist::Family;
using ghdist::FamilySpec;
using ghdist::GhError;
using ghdist::PhiKind;
using ghdist::Rational;

namespace {

Errc thrown_code(void (*fn)()) {
  try {
    fn();
  } catch (const GhError& err) {
    return err.code();
  }
  FAIL("expected GhError");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("integers") {
  auto z1 = ghdist::integers(1);
  REQUIRE(z1.size() == 3);
  CHECK(z1.labels() == std::vector<std::string>{"-1", "0", "1"});
  CHECK(z1.dist(0, 2) == 2);

  auto z3 = ghdist::integers(3);
  REQUIRE(z3.size() == 7);
  for (std::size_t i = 0; i + 1 < z3.size(); ++i) {
    CHECK(z3.dist(i, i + 1) == 1);
  }
  CHECK_THROWS_AS(ghdist::integers(0), GhError);
}

TEST_CASE("segment grid") {
  auto coarse = ghdist::segment_grid(1, 1);
  CHECK(coarse.labels() == std::vector<std::string>{"-1", "0", "1"});

  auto fine = ghdist::segment_grid(1, Rational(1, 2));
  REQUIRE(fine.size() == 5);
  CHECK(fine.label(1) == "-1/2");
  CHECK(fine.dist(0, 4) == 2);
  CHECK(ghdist::diameter(ghdist::segment_grid(3, Rational(1, 2))) == 6);
}

TEST_CASE("segment grid rejects a step that misses the endpoint") {
  CHECK(thrown_code([] { ghdist::segment_grid(1, Rational(3, 7)); }) ==
        Errc::StepDoesNotDivide);
  // 2/3 divides 2*1 = 2 exactly three times, so this one is fine
  CHECK(ghdist::segment_grid(1, Rational(2, 3)).size() == 4);
}

TEST_CASE("integers embed into any grid with step dividing 1") {
  auto z = ghdist::integers(2);
  auto grid = ghdist::segment_grid(2, Rational(1, 2));
  // integer points are every second grid point
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      CHECK(z.dist(i, j) == grid.dist(2 * i, 2 * j));
    }
  }
}

TEST_CASE("apexed grid matches the plain grid plus one point") {
  auto apexed = ghdist::rtilde_grid(2, 1);
  auto grid = ghdist::segment_grid(2, 1);
  REQUIRE(apexed.size() == grid.size() + 1);
  CHECK(apexed.label(apexed.size() - 1) == "t");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      CHECK(apexed.dist(i, j) == grid.dist(i, j));
    }
  }
  // distance to the apex is |x| + 1
  CHECK(apexed.dist(0, 5) == 3);  // x = -2
  CHECK(apexed.dist(2, 5) == 1);  // x = 0
  CHECK(apexed.dist(4, 5) == 3);  // x = 2

  auto fine = ghdist::rtilde_grid(3, Rational(1, 2));
  CHECK(fine.size() == 14);
  CHECK(fine.dist(1, 13) == Rational(7, 2));  // x = -5/2
}

TEST_CASE("geometric powers") {
  auto g = ghdist::geometric(2, 1);
  REQUIRE(g.size() == 3);
  CHECK(g.labels() == std::vector<std::string>{"1/2", "1", "2"});
  CHECK(ghdist::diameter(ghdist::geometric(2, 2)) == Rational(15, 4));
  CHECK_THROWS_AS(ghdist::geometric(1, 2), GhError);
}

TEST_CASE("scaling a geometric truncation shifts its window") {
  // p * {p^-n .. p^n} = {p^(1-n) .. p^(n+1)}, the top of the next truncation
  auto scaled = ghdist::scale(ghdist::geometric(2, 2), 2);
  auto wider = ghdist::geometric(2, 3);
  const std::size_t shift = 2;  // exponent -2+1 = -1 sits at index 2 of wider
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    for (std::size_t j = 0; j < scaled.size(); ++j) {
      CHECK(scaled.dist(i, j) == wider.dist(i + shift, j + shift));
    }
  }
}

TEST_CASE("phi powers grow along the exponent family") {
  auto squares = ghdist::phi_powers(Rational(2), PhiKind::Squares, 3);
  CHECK(squares.labels() == std::vector<std::string>{"2", "16", "512"});
  auto doubling = ghdist::phi_powers(Rational(2), PhiKind::PowersOfTwo, 3);
  CHECK(doubling.labels() == std::vector<std::string>{"4", "16", "256"});

  // consecutive gaps strictly widen for both exponent families
  for (auto kind : {PhiKind::Squares, PhiKind::PowersOfTwo}) {
    auto space = ghdist::phi_powers(Rational(3, 2), kind, 6);
    for (std::size_t i = 0; i + 2 < space.size(); ++i) {
      CHECK(space.dist(i, i + 1) < space.dist(i + 1, i + 2));
    }
  }
  CHECK_THROWS_AS(ghdist::phi_powers(Rational(1), PhiKind::Squares, 2), GhError);
  CHECK_THROWS_AS(ghdist::phi_powers(Rational(1, 2), PhiKind::Squares, 2), GhError);
}

TEST_CASE("gapped segment removes the open interval") {
  auto gapped = ghdist::gapped_segment(3, 0, 1, 1);
  CHECK(gapped.labels() ==
        std::vector<std::string>{"-3", "-2", "-1", "1", "2", "3"});
  // the grid points at the gap boundary survive
  auto wide = ghdist::gapped_segment(3, Rational(1, 2), Rational(3, 2), Rational(1, 2));
  for (const auto& label : wide.labels()) {
    Rational c = ghdist::parse_rational(label);
    CHECK((c <= -1 || c >= 2));
  }
}

TEST_CASE("gapped segment keeps the same diameter as the full segment") {
  auto full = ghdist::segment_grid(3, 1);
  auto gapped = ghdist::gapped_segment(3, 0, 1, 1);
  CHECK(ghdist::diameter(full) == ghdist::diameter(gapped));
  CHECK(ghdist::gh_lower_bound(full, gapped) == 0);
}

TEST_CASE("gapped segment rejects a gap touching the boundary") {
  CHECK(thrown_code([] { ghdist::gapped_segment(2, 0, 2, 1); }) ==
        Errc::GapOutOfRange);
  CHECK(thrown_code([] { ghdist::gapped_segment(3, 2, 1, 1); }) ==
        Errc::GapOutOfRange);
  CHECK_THROWS_AS(ghdist::gapped_segment(3, 0, 0, 1), GhError);
}

TEST_CASE("family specs instantiate") {
  FamilySpec spec;
  spec.kind = Family::Integers;
  spec.params["n"] = 2;
  CHECK(ghdist::instantiate(spec) == ghdist::integers(2));

  spec.kind = Family::RTildeGrid;
  spec.params["h"] = Rational(1, 2);
  CHECK(ghdist::instantiate(spec) == ghdist::rtilde_grid(2, Rational(1, 2)));

  spec.kind = Family::Geometric;
  spec.params["p"] = 3;
  CHECK(ghdist::instantiate(spec) == ghdist::geometric(3, 2));

  spec.kind = Family::PhiPowers;
  spec.params["q"] = Rational(3, 2);
  spec.params["phi"] = 2;
  CHECK(ghdist::instantiate(spec) ==
        ghdist::phi_powers(Rational(3, 2), PhiKind::PowersOfTwo, 2));

  spec.kind = Family::GappedSegment;
  spec.params = {{"n", 3}, {"a", 0}, {"d", 1}, {"h", 1}};
  CHECK(ghdist::instantiate(spec) == ghdist::gapped_segment(3, 0, 1, 1));
}

TEST_CASE("family specs report missing or bad parameters") {
  FamilySpec spec;
  spec.kind = Family::SegmentGrid;
  spec.params["n"] = 2;
  CHECK(thrown_code([] {
          FamilySpec s;
          s.kind = Family::SegmentGrid;
          s.params["n"] = 2;
          ghdist::instantiate(s);
        }) == Errc::InvalidParameter);

  CHECK(thrown_code([] {
          FamilySpec s;
          s.kind = Family::Integers;
          s.params["n"] = Rational(5, 2);
          ghdist::instantiate(s);
        }) == Errc::InvalidParameter);

  CHECK_THROWS_AS(ghdist::family_from_name("squares"), GhError);
  CHECK(ghdist::family_from_name("gapped") == Family::GappedSegment);
  CHECK(ghdist::family_name(Family::RTildeGrid) == "rtilde");
}

TEST_CASE("every construction validates") {
  for (const auto& space :
       {ghdist::integers(2), ghdist::segment_grid(2, Rational(1, 2)),
        ghdist::rtilde_grid(2, 1), ghdist::geometric(2, 2),
        ghdist::phi_powers(Rational(2), PhiKind::Squares, 4),
        ghdist::gapped_segment(3, 0, 1, 1)}) {
    CHECK(ghdist::validate(space.labels(), space.matrix()).empty());
  }
}
