#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghdist {

// Everything the library can reject: metric-axiom violations plus the
// precondition failures of individual operations.
enum class Errc {
  NonSquare,
  DuplicateLabel,
  NonzeroDiagonal,
  Asymmetric,
  NonpositiveOffDiagonal,
  TriangleViolation,
  NegativeScale,
  IndexOutOfRange,
  NotSurjectiveOnLeft,
  NotSurjectiveOnRight,
  TooLargeForOracle,
  StepDoesNotDivide,
  GapOutOfRange,
  SearchIncomplete,
  IdentityViolated,
  InvalidParameter,
  ParseError,
};

class GhError : public std::runtime_error {
 public:
  GhError(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// One failed metric axiom together with the indices that witness it.
// Which of i, j, k are meaningful depends on the code.
struct MetricViolation {
  Errc code = Errc::NonSquare;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  std::string describe() const {
    switch (code) {
      case Errc::NonSquare:
        return "matrix is not square or does not match the label count";
      case Errc::DuplicateLabel:
        return "duplicate label at indices (" + std::to_string(i) + ", " +
               std::to_string(j) + ")";
      case Errc::NonzeroDiagonal:
        return "nonzero diagonal entry at (" + std::to_string(i) + ")";
      case Errc::Asymmetric:
        return "asymmetric entries at (" + std::to_string(i) + ", " +
               std::to_string(j) + ")";
      case Errc::NonpositiveOffDiagonal:
        return "nonpositive off-diagonal entry at (" + std::to_string(i) +
               ", " + std::to_string(j) + ")";
      case Errc::TriangleViolation:
        return "triangle inequality violated at (" + std::to_string(i) + ", " +
               std::to_string(j) + ", " + std::to_string(k) + ")";
      default:
        return "invalid metric";
    }
  }
};

// Carries the complete list of violated axioms, not just the first one.
class ValidationError : public GhError {
 public:
  explicit ValidationError(std::vector<MetricViolation> violations)
      : GhError(violations.empty() ? Errc::InvalidParameter
                                   : violations.front().code,
                summary(violations)),
        violations_(std::move(violations)) {}

  const std::vector<MetricViolation>& violations() const noexcept {
    return violations_;
  }

 private:
  static std::string summary(const std::vector<MetricViolation>& violations) {
    if (violations.empty()) return "invalid metric space";
    std::string text = violations.front().describe();
    if (violations.size() > 1) {
      text += " (and " + std::to_string(violations.size() - 1) + " more)";
    }
    return text;
  }

  std::vector<MetricViolation> violations_;
};

}  // namespace ghdist
