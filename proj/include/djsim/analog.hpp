#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "djsim/netlist.hpp"
#include "djsim/truth_table.hpp"

namespace djsim {

/// Evaluation settings. All computation runs in normalized units [0, 1];
/// logic_high only scales voltages at presentation time. gain_error and
/// offset bound the per-block perturbations of the noise model; both at
/// zero means exact ideal semantics (no generator is consulted).
struct AnalogConfig {
  double logic_high = 1.0;  // display scale, e.g. 5.0 for 5 V logic
  double gain_error = 0.0;  // delta: multiplicative, per block, in [-d, d]
  double offset = 0.0;      // sigma: additive (normalized volts), in [-s, s]
  std::uint64_t seed = 0;
};

/// One-measurement verdict with its raw evidence. `verdict` is the
/// nearest of {0, 1/2, 1} to `measured`; ties at 1/4 and 3/4 resolve to
/// Balanced. Neither never occurs here.
struct DecisionReport {
  double measured = 0.0; // normalized voltage
  FunctionClass verdict = FunctionClass::Balanced;
  double distance = 0.0; // |measured - nearest target|
  std::string backend;
  std::uint64_t evaluations = 0; // netlist evaluations consumed
};

struct SweepPoint {
  int arity = 0;
  double delta = 0.0;
  double sigma = 0.0;
  int trials = 0;
  double misclass_rate = 0.0;
};

/// Process-wide count of netlist evaluations, bumped once per
/// evaluate() call. Backs the one-measurement instrumentation.
std::uint64_t evaluation_count();

/// Evaluate the netlist on real-valued inputs in topological order.
/// Ideal block semantics: buffer v, inverter 1-v, multiplier product,
/// adder sum (empty sum is 0), limiter clamp to [0, 1]. With noise
/// bounds set, each block's ideal output y becomes y*(1+eps)+eta with
/// eps, eta drawn per block per call from the seeded generator, so a
/// fixed (netlist, inputs, config) always reproduces the same value.
/// Throws EvalError on invalid netlists, input count mismatch, or
/// inputs outside [0, 1].
double evaluate(const Netlist& netlist, std::span<const double> inputs,
                const AnalogConfig& config);

/// Drive every input to exactly 0.5 and evaluate once — the whole
/// measurement is this single evaluation.
double midpoint_probe(const Netlist& netlist, const AnalogConfig& config);

/// Nearest-target decision over {0, 1/2, 1}. Throws EvalError on
/// non-finite measurements. backend/evaluations are left for callers.
DecisionReport decide_class(double measured);

/// Full analog pipeline: canonical SOP -> block circuit -> midpoint
/// probe -> decision. The report carries the raw voltage and the number
/// of evaluations the probe consumed (1).
DecisionReport run_deutsch_analog(const TruthTable& tt, const AnalogConfig& config);

/// Tolerance study: for every (delta, sigma) grid point runs `trials`
/// perturbed midpoint probes with per-trial sub-seeds derived from
/// `seed`, and reports the fraction whose verdict differs from the true
/// class. Requires a promise function (constant or balanced); throws
/// PromiseError otherwise. Deterministic for fixed arguments.
std::vector<SweepPoint> monte_carlo_sweep(const TruthTable& tt,
                                          std::span<const double> delta_grid,
                                          std::span<const double> sigma_grid,
                                          int trials, std::uint64_t seed);

/// CSV rendering of sweep results: header "n,delta,sigma,trials,
/// misclass_rate", rates with 6 decimal places.
std::string format_sweep_csv(std::span<const SweepPoint> points);

} // namespace djsim
