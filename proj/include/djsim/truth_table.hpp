#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace djsim {

/// Hard cap on truth-table and netlist arity. Canonical sum-of-products
/// synthesis is exponential by construction, so 2^16 minterms bounds the
/// blow-up; the quantum register has its own cap.
inline constexpr int kArityCap = 16;

enum class FunctionClass { Constant0, Constant1, Balanced, Neither };

const char* to_string(FunctionClass cls);

/// Complete specification of an n-input single-output Boolean function
/// as an explicit output column. Row index packs the assignment with x1
/// as the most significant bit; that convention is shared by minterm
/// indices, netlist terminals and the quantum register.
class TruthTable {
public:
  /// Throws ArityError if arity is outside [1, kArityCap]; Error if the
  /// output column has the wrong length or non-bit entries.
  TruthTable(int arity, std::vector<std::uint8_t> outputs);

  static TruthTable constant(int arity, bool value);

  int arity() const { return arity_; }
  std::size_t size() const { return outputs_.size(); }
  bool output(std::size_t index) const;

  /// Evaluate on one assignment (x1 first). Throws ArityError on length
  /// mismatch, Error on non-bit entries.
  bool eval(const std::vector<std::uint8_t>& assignment) const;

  const std::vector<std::uint8_t>& outputs() const { return outputs_; }
  std::size_t ones_count() const;

  bool operator==(const TruthTable&) const = default;

private:
  int arity_;
  std::vector<std::uint8_t> outputs_;
};

/// Exact fraction, kept in lowest terms so 16/32 compares equal to 1/2.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

/// The full 2^n-evaluation digital baseline: counts every output once.
FunctionClass classify(const TruthTable& tt);

/// k / 2^n where k is the number of 1-outputs. Exact; this is the ideal
/// midpoint-probe voltage of the synthesized analog circuit.
Rational ones_fraction(const TruthTable& tt);

/// First canonical (sum-of-products) form: the sorted minterm indices.
/// No simplification is performed anywhere in this project.
struct SopForm {
  int arity = 1;
  std::vector<std::uint32_t> minterms; // strictly increasing, in [0, 2^arity)

  bool operator==(const SopForm&) const = default;
};

SopForm to_sop(const TruthTable& tt);

/// Deterministic generator: identical (arity, cls, seed) yields an
/// identical table, and the result always re-classifies to `cls`.
/// Throws InfeasibleError when no such function exists (Neither needs
/// arity >= 2).
TruthTable random_table(int arity, FunctionClass cls, std::uint64_t seed);

/// Truth-table text format: line 1 "n=<arity>", line 2 the 2^n output
/// bits (index 0 first), optional trailing newline.
std::string to_text(const TruthTable& tt);

} // namespace djsim
