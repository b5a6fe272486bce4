#pragma once

#include <wcov/planner.hpp>

#include <span>
#include <string>
#include <vector>

namespace wcov {

struct MutationOperator {
  std::size_t index = 0;  ///< 1-based position in the operator list
  double factor = 1.0;    ///< K

  friend bool operator==(const MutationOperator&, const MutationOperator&) = default;
};

struct Mutant {
  std::size_t weight = 0;  ///< 1-based weight index
  MutationOperator op;
  Weights weights;
};

/// K in {0, 0.5, 0.9, 1.1, 1.5, 2, 10}, in that order.
std::vector<MutationOperator> canonical_operators();

/// Operators for a user-supplied K list (indices assigned in order).
/// Throws ValidationError for an empty list or a negative/non-finite K.
std::vector<MutationOperator> make_operators(std::span<const double> factors);

/// Copy of `base` with weight `i` (1-based) multiplied by `k`.
/// Throws IndexOutOfRange for i outside 1..6, ValidationError for bad K.
Weights apply(const Weights& base, std::size_t i, double k);

/// Weight-major product: (w1, op1), (w1, op2), ..., (w6, opN).
std::vector<Mutant> generate_mutants(const Weights& base, std::span<const MutationOperator> operators);

/// Shortest decimal rendering of K ("0", "0.5", "10").
std::string format_factor(double k);

/// `w<i>_K<factor>.json`
std::string mutant_file_name(const Mutant& m);

}  // namespace wcov
