#include "djsim/truth_table.hpp"

#include <algorithm>
#include <numeric>

#include "djsim/errors.hpp"
#include "djsim/rng.hpp"

namespace djsim {

const char* to_string(FunctionClass cls) {
  switch (cls) {
    case FunctionClass::Constant0: return "Constant0";
    case FunctionClass::Constant1: return "Constant1";
    case FunctionClass::Balanced: return "Balanced";
    case FunctionClass::Neither: return "Neither";
  }
  return "?";
}

TruthTable::TruthTable(int arity, std::vector<std::uint8_t> outputs)
    : arity_(arity), outputs_(std::move(outputs)) {
  if (arity_ < 1 || arity_ > kArityCap) {
    throw ArityError("truth-table arity " + std::to_string(arity_) + " outside [1, " +
                     std::to_string(kArityCap) + "]");
  }
  const std::size_t expected = std::size_t{1} << arity_;
  if (outputs_.size() != expected) {
    throw Error("truth table for arity " + std::to_string(arity_) + " needs " +
                std::to_string(expected) + " outputs, got " + std::to_string(outputs_.size()));
  }
  for (std::uint8_t bit : outputs_) {
    if (bit > 1) throw Error("truth-table outputs must be 0 or 1");
  }
}

TruthTable TruthTable::constant(int arity, bool value) {
  if (arity < 1 || arity > kArityCap) {
    throw ArityError("truth-table arity " + std::to_string(arity) + " outside [1, " +
                     std::to_string(kArityCap) + "]");
  }
  return TruthTable(arity, std::vector<std::uint8_t>(std::size_t{1} << arity,
                                                     value ? std::uint8_t{1} : std::uint8_t{0}));
}

bool TruthTable::output(std::size_t index) const {
  if (index >= outputs_.size()) {
    throw Error("truth-table index " + std::to_string(index) + " out of range");
  }
  return outputs_[index] != 0;
}

bool TruthTable::eval(const std::vector<std::uint8_t>& assignment) const {
  if (assignment.size() != static_cast<std::size_t>(arity_)) {
    throw ArityError("assignment has " + std::to_string(assignment.size()) +
                     " bits, expected " + std::to_string(arity_));
  }
  std::size_t index = 0;
  for (std::uint8_t bit : assignment) {
    if (bit > 1) throw Error("assignment entries must be 0 or 1");
    index = (index << 1) | bit;
  }
  return outputs_[index] != 0;
}

std::size_t TruthTable::ones_count() const {
  return static_cast<std::size_t>(std::count(outputs_.begin(), outputs_.end(), std::uint8_t{1}));
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational{0, 1};
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return Rational{num / g, den / g};
}

FunctionClass classify(const TruthTable& tt) {
  const std::size_t ones = tt.ones_count();
  const std::size_t total = tt.size();
  if (ones == 0) return FunctionClass::Constant0;
  if (ones == total) return FunctionClass::Constant1;
  if (ones * 2 == total) return FunctionClass::Balanced;
  return FunctionClass::Neither;
}

Rational ones_fraction(const TruthTable& tt) {
  return make_rational(static_cast<std::int64_t>(tt.ones_count()),
                       static_cast<std::int64_t>(tt.size()));
}

SopForm to_sop(const TruthTable& tt) {
  SopForm sop;
  sop.arity = tt.arity();
  for (std::size_t i = 0; i < tt.size(); ++i) {
    if (tt.output(i)) sop.minterms.push_back(static_cast<std::uint32_t>(i));
  }
  return sop;
}

namespace {

// Chooses `count` distinct indices from [0, total) by partial
// Fisher-Yates and marks them in the output column.
std::vector<std::uint8_t> pick_ones(std::size_t total, std::size_t count, SplitMix64& rng) {
  std::vector<std::uint32_t> pool(total);
  std::iota(pool.begin(), pool.end(), 0u);
  std::vector<std::uint8_t> outputs(total, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(total - i));
    std::swap(pool[i], pool[j]);
    outputs[pool[i]] = 1;
  }
  return outputs;
}

} // namespace

TruthTable random_table(int arity, FunctionClass cls, std::uint64_t seed) {
  if (arity < 1 || arity > kArityCap) {
    throw ArityError("arity " + std::to_string(arity) + " outside [1, " +
                     std::to_string(kArityCap) + "]");
  }
  switch (cls) {
    case FunctionClass::Constant0: return TruthTable::constant(arity, false);
    case FunctionClass::Constant1: return TruthTable::constant(arity, true);
    default: break;
  }

  const std::size_t total = std::size_t{1} << arity;
  const std::size_t half = total / 2;
  SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(arity),
                             static_cast<std::uint64_t>(cls)));

  if (cls == FunctionClass::Balanced) {
    return TruthTable(arity, pick_ones(total, half, rng));
  }

  // Neither: a ones count in [1, total-1] that is not exactly half. With
  // arity 1 every function satisfies the promise, so nothing qualifies.
  if (arity < 2) {
    throw InfeasibleError("every 1-input function is constant or balanced; "
                          "class Neither needs arity >= 2");
  }
  std::size_t k = 1 + static_cast<std::size_t>(rng.below(total - 2));
  if (k >= half) ++k;
  return TruthTable(arity, pick_ones(total, k, rng));
}

std::string to_text(const TruthTable& tt) {
  std::string out = "n=" + std::to_string(tt.arity()) + "\n";
  out.reserve(out.size() + tt.size() + 1);
  for (std::uint8_t bit : tt.outputs()) out.push_back(bit ? '1' : '0');
  out.push_back('\n');
  return out;
}

} // namespace djsim
