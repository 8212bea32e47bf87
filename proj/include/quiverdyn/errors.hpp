#pragma once

#include <stdexcept>
#include <string>

namespace quiverdyn {

// Exact division hit a vanishing denominator.
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

// build_system was asked for a period the matrix does not have.
struct NotPeriodic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exchange-relation division left a remainder.
struct NonLaurentResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured term/digit/step budget was exhausted mid-computation.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two lifts of the same reduced point produced different images, so the
// chart/map pair is not actually reducible.
struct FiberMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// cartan_reduce on the zero matrix.
struct RankZero : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Reduction requested where the form already has full rank.
struct NotReducible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace quiverdyn
