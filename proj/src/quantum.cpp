#include "djsim/quantum.hpp"

#include <cmath>

#include "djsim/errors.hpp"

namespace djsim {

StateVector::StateVector(int qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 1 || qubit_count > kQubitCap) {
    throw Error("qubit count " + std::to_string(qubit_count) + " outside [1, " +
                std::to_string(kQubitCap) + "]");
  }
  amps_.assign(std::size_t{1} << qubit_count, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

const char* to_string(QuantumVerdict verdict) {
  switch (verdict) {
    case QuantumVerdict::Constant: return "Constant";
    case QuantumVerdict::Balanced: return "Balanced";
    case QuantumVerdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

StateVector init_register(int query_qubits) {
  if (query_qubits < 1 || query_qubits > kQubitCap - 1) {
    throw Error("query register size " + std::to_string(query_qubits) + " outside [1, " +
                std::to_string(kQubitCap - 1) + "]");
  }
  StateVector state(query_qubits + 1);
  // Move the target (least significant bit) from |0> to |1>.
  state.amplitude(0) = {0.0, 0.0};
  state.amplitude(1) = {1.0, 0.0};
  return state;
}

void apply_hadamard(StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.qubit_count()) {
    throw Error("qubit index " + std::to_string(qubit) + " out of range");
  }
  static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Qubit 0 is the most significant bit of the basis index.
  const std::size_t mask = std::size_t{1} << (state.qubit_count() - 1 - qubit);
  const std::size_t dim = state.dimension();
  for (std::size_t index = 0; index < dim; ++index) {
    if (index & mask) continue;
    const std::complex<double> lo = state.amplitude(index);
    const std::complex<double> hi = state.amplitude(index | mask);
    state.amplitude(index) = (lo + hi) * inv_sqrt2;
    state.amplitude(index | mask) = (lo - hi) * inv_sqrt2;
  }
}

void apply_oracle(StateVector& state, const TruthTable& tt) {
  if (tt.arity() != state.qubit_count() - 1) {
    throw ArityError("oracle arity " + std::to_string(tt.arity()) + " does not match " +
                     std::to_string(state.qubit_count() - 1) + " query qubits");
  }
  // |x>|y> -> |x>|y xor f(x)>: swap the target pair wherever f(x) = 1.
  const std::size_t queries = std::size_t{1} << tt.arity();
  for (std::size_t x = 0; x < queries; ++x) {
    if (tt.output(x)) std::swap(state.amplitude(x << 1), state.amplitude((x << 1) | 1));
  }
}

QuantumReport run_dja_quantum(const TruthTable& tt) {
  const int n = tt.arity();
  if (n + 1 > kQubitCap) {
    throw Error("oracle needs " + std::to_string(n + 1) + " qubits, cap is " +
                std::to_string(kQubitCap));
  }
  StateVector state = init_register(n);
  for (int q = 0; q <= n; ++q) apply_hadamard(state, q);
  apply_oracle(state, tt);
  for (int q = 0; q < n; ++q) apply_hadamard(state, q);

  // Query register all zero, marginal over the target: indices 0 and 1.
  QuantumReport report;
  report.p_all_zero = std::norm(state.amplitude(0)) + std::norm(state.amplitude(1));
  if (report.p_all_zero > 1.0 - 1e-9) {
    report.verdict = QuantumVerdict::Constant;
  } else if (report.p_all_zero < 1e-9) {
    report.verdict = QuantumVerdict::Balanced;
  } else {
    report.verdict = QuantumVerdict::Indeterminate;
  }
  return report;
}

double phase_sum_reference(const TruthTable& tt) {
  // Integer phase sum: 2^n - 2k, then normalize and square.
  const auto total = static_cast<std::int64_t>(tt.size());
  const auto ones = static_cast<std::int64_t>(tt.ones_count());
  const double normalized = static_cast<double>(total - 2 * ones) / static_cast<double>(total);
  return normalized * normalized;
}

} // namespace djsim
