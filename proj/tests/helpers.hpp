#pragma once

// Test-only generators and independent oracles. Nothing here may call
// into the code paths it is used to check.

#include <cstdint>
#include <vector>

#include "djsim/expr.hpp"
#include "djsim/rng.hpp"
#include "djsim/truth_table.hpp"

namespace djsim::testing {

/// Uniformly random output column over all 2^(2^n) functions.
inline TruthTable random_any_table(int arity, SplitMix64& rng) {
  std::vector<std::uint8_t> outputs(std::size_t{1} << arity);
  for (auto& bit : outputs) bit = static_cast<std::uint8_t>(rng.next() & 1u);
  return TruthTable(arity, std::move(outputs));
}

/// Independent SOP expansion: bit i is 1 iff i appears in the minterm
/// list. This is the definitional inverse used to check to_sop.
inline std::vector<std::uint8_t> expand_sop(const SopForm& sop) {
  std::vector<std::uint8_t> outputs(std::size_t{1} << sop.arity, 0);
  for (std::uint32_t m : sop.minterms) outputs[m] = 1;
  return outputs;
}

/// Hand-built majority-of-3: 1 iff at least two input bits are set.
/// Enumerated by popcount, independently of any table machinery.
inline TruthTable majority3() {
  std::vector<std::uint8_t> outputs;
  for (unsigned idx = 0; idx < 8; ++idx) {
    const unsigned ones = ((idx >> 2) & 1u) + ((idx >> 1) & 1u) + (idx & 1u);
    outputs.push_back(ones >= 2 ? 1 : 0);
  }
  return TruthTable(3, std::move(outputs));
}

inline TruthTable table_from_bits(int arity, const char* bits) {
  std::vector<std::uint8_t> outputs;
  for (const char* p = bits; *p; ++p) outputs.push_back(*p == '1' ? 1 : 0);
  return TruthTable(arity, std::move(outputs));
}

/// Random expression tree; depth-bounded, all leaves use x1..x<arity>.
inline Expr random_ast(int arity, int max_depth, SplitMix64& rng) {
  if (max_depth == 0 || rng.below(5) == 0) {
    const auto pick = rng.below(static_cast<std::uint64_t>(arity) + 2);
    if (pick < static_cast<std::uint64_t>(arity)) {
      return Expr::variable(static_cast<int>(pick) + 1);
    }
    return Expr::constant(pick == static_cast<std::uint64_t>(arity));
  }
  switch (rng.below(4)) {
    case 0: return Expr::negation(random_ast(arity, max_depth - 1, rng));
    case 1: {
      std::vector<Expr> kids;
      const std::size_t count = 2 + rng.below(2);
      for (std::size_t i = 0; i < count; ++i) {
        kids.push_back(random_ast(arity, max_depth - 1, rng));
      }
      return Expr::conjunction(std::move(kids));
    }
    case 2: {
      std::vector<Expr> kids;
      const std::size_t count = 2 + rng.below(2);
      for (std::size_t i = 0; i < count; ++i) {
        kids.push_back(random_ast(arity, max_depth - 1, rng));
      }
      return Expr::disjunction(std::move(kids));
    }
    default:
      return Expr::exclusive_or(random_ast(arity, max_depth - 1, rng),
                                random_ast(arity, max_depth - 1, rng));
  }
}

/// Assignment bits (x1 first) for a row index.
inline std::vector<std::uint8_t> assignment_of(std::size_t index, int arity) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(arity));
  for (int v = 0; v < arity; ++v) {
    bits[static_cast<std::size_t>(v)] =
        static_cast<std::uint8_t>((index >> (arity - 1 - v)) & 1u);
  }
  return bits;
}

} // namespace djsim::testing
