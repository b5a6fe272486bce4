#include <wcov/errors.hpp>
#include <wcov/mutation.hpp>

#include <charconv>
#include <cmath>

namespace wcov {

std::vector<MutationOperator> canonical_operators() {
  static constexpr double kFactors[] = {0.0, 0.5, 0.9, 1.1, 1.5, 2.0, 10.0};
  return make_operators(kFactors);
}

std::vector<MutationOperator> make_operators(std::span<const double> factors) {
  if (factors.empty()) throw ValidationError("/operators", "need at least one mutation operator");
  std::vector<MutationOperator> ops;
  ops.reserve(factors.size());
  for (double k : factors) {
    if (!std::isfinite(k) || k < 0.0) throw ValidationError("/operators", "K must be finite and >= 0");
    ops.push_back({ops.size() + 1, k});
  }
  return ops;
}

Weights apply(const Weights& base, std::size_t i, double k) {
  if (i < 1 || i > kWeightCount) throw IndexOutOfRange("weight index " + std::to_string(i) + " outside 1..6");
  if (!std::isfinite(k) || k < 0.0) throw ValidationError("/K", "K must be finite and >= 0");
  Weights out = base;
  out[i - 1] = k * base[i - 1];
  return out;
}

std::vector<Mutant> generate_mutants(const Weights& base, std::span<const MutationOperator> operators) {
  std::vector<Mutant> out;
  out.reserve(kWeightCount * operators.size());
  for (std::size_t i = 1; i <= kWeightCount; ++i) {
    for (const MutationOperator& op : operators) out.push_back({i, op, apply(base, i, op.factor)});
  }
  return out;
}

std::string format_factor(double k) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, k);
  return std::string(buf, res.ptr);
}

std::string mutant_file_name(const Mutant& m) {
  return "w" + std::to_string(m.weight) + "_K" + format_factor(m.op.factor) + ".json";
}

}  // namespace wcov
