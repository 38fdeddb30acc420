#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "djsim/truth_table.hpp"

namespace djsim {

/// Total qubits (query register plus target) the simulator accepts;
/// 2^21 complex amplitudes is comfortable desk scale.
inline constexpr int kQubitCap = 21;

/// Dense state vector over `qubit_count` qubits. Qubit 0 is the first
/// query qubit x1 and occupies the most significant bit of the basis
/// index; the target qubit is last (least significant bit), matching
/// the truth-table index convention.
class StateVector {
public:
  explicit StateVector(int qubit_count); // starts in |0...0>

  int qubit_count() const { return qubit_count_; }
  std::size_t dimension() const { return amps_.size(); }

  std::complex<double>& amplitude(std::size_t index) { return amps_[index]; }
  const std::complex<double>& amplitude(std::size_t index) const { return amps_[index]; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

  /// Sum of squared magnitudes; 1 within 1e-12 for any reachable state.
  double norm_squared() const;

private:
  int qubit_count_;
  std::vector<std::complex<double>> amps_;
};

enum class QuantumVerdict { Constant, Balanced, Indeterminate };

const char* to_string(QuantumVerdict verdict);

/// Measurement summary: probability of reading the n query qubits all
/// zero (marginal over the target qubit). The promise makes this 0 or
/// 1 exactly; anything in between marks a non-promise oracle.
struct QuantumReport {
  double p_all_zero = 0.0;
  QuantumVerdict verdict = QuantumVerdict::Indeterminate;
};

/// n query qubits in |0> plus the target prepared in |1>.
StateVector init_register(int query_qubits);

/// Single-qubit Hadamard, in place. Norm preserving.
void apply_hadamard(StateVector& state, int qubit);

/// The XOR oracle |x>|y> -> |x>|y xor f(x)>: a basis permutation and an
/// involution. Requires tt.arity == qubit_count - 1.
void apply_oracle(StateVector& state, const TruthTable& tt);

/// The full circuit: prepare, Hadamard everything, oracle, Hadamard the
/// query register, read off p_all_zero. With n = 1 this is exactly the
/// single-qubit algorithm.
QuantumReport run_dja_quantum(const TruthTable& tt);

/// Closed-form cross-check, computed straight from the truth table:
/// ((1/2^n) * sum_x (-1)^f(x))^2, i.e. (1 - 2*ones_fraction)^2. Shares
/// no code with the state-vector path.
double phase_sum_reference(const TruthTable& tt);

} // namespace djsim
