#include "djsim/analog.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "djsim/errors.hpp"
#include "djsim/rng.hpp"

namespace djsim {

namespace {

std::atomic<std::uint64_t> g_evaluations{0};

double ideal_output(BlockKind kind, std::span<const double> in) {
  switch (kind) {
    case BlockKind::Buffer: return in[0];
    case BlockKind::Inverter: return 1.0 - in[0];
    case BlockKind::Multiplier: {
      double product = 1.0;
      for (double v : in) product *= v;
      return product;
    }
    case BlockKind::Adder: {
      double sum = 0.0; // empty sum: the ground convention
      for (double v : in) sum += v;
      return sum;
    }
    case BlockKind::Limiter: return std::clamp(in[0], 0.0, 1.0);
  }
  return 0.0;
}

} // namespace

std::uint64_t evaluation_count() { return g_evaluations.load(std::memory_order_relaxed); }

double evaluate(const Netlist& netlist, std::span<const double> inputs,
                const AnalogConfig& config) {
  const auto violations = validate(netlist);
  if (!violations.empty()) {
    throw EvalError("cannot evaluate invalid netlist: " + violations.front());
  }
  if (inputs.size() != static_cast<std::size_t>(netlist.arity)) {
    throw EvalError("netlist has " + std::to_string(netlist.arity) + " inputs, got " +
                    std::to_string(inputs.size()));
  }
  for (double v : inputs) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw EvalError("input voltage " + std::to_string(v) + " outside [0, 1]");
    }
  }
  if (config.gain_error < 0.0 || config.offset < 0.0) {
    throw EvalError("noise bounds must be >= 0");
  }

  g_evaluations.fetch_add(1, std::memory_order_relaxed);

  const bool noisy = config.gain_error > 0.0 || config.offset > 0.0;
  SplitMix64 rng(config.seed);

  std::unordered_map<std::string_view, double> value;
  value.reserve(netlist.blocks.size());
  auto wire_value = [&](const std::string& ref) -> double {
    if (is_terminal_ref(ref, netlist.arity)) {
      std::size_t index = 0;
      for (char c : ref.substr(1)) index = index * 10 + static_cast<std::size_t>(c - '0');
      return inputs[index - 1];
    }
    return value.at(ref);
  };

  std::vector<double> in;
  for (const Block& block : netlist.blocks) {
    in.clear();
    for (const std::string& ref : block.inputs) in.push_back(wire_value(ref));
    double y = ideal_output(block.kind, in);
    if (noisy) {
      const double eps = rng.symmetric(config.gain_error);
      const double eta = rng.symmetric(config.offset);
      y = y * (1.0 + eps) + eta;
    }
    value.emplace(block.id, y);
  }
  return wire_value(netlist.output);
}

double midpoint_probe(const Netlist& netlist, const AnalogConfig& config) {
  const std::vector<double> midpoint(static_cast<std::size_t>(netlist.arity), 0.5);
  return evaluate(netlist, midpoint, config);
}

DecisionReport decide_class(double measured) {
  if (!std::isfinite(measured)) throw EvalError("measured voltage is not finite");
  DecisionReport report;
  report.measured = measured;
  // Nearest of {0, 1/2, 1}; the boundaries 1/4 and 3/4 belong to
  // Balanced.
  if (measured < 0.25) {
    report.verdict = FunctionClass::Constant0;
  } else if (measured > 0.75) {
    report.verdict = FunctionClass::Constant1;
  } else {
    report.verdict = FunctionClass::Balanced;
  }
  report.distance = std::min({std::abs(measured), std::abs(measured - 0.5),
                              std::abs(measured - 1.0)});
  return report;
}

DecisionReport run_deutsch_analog(const TruthTable& tt, const AnalogConfig& config) {
  const Netlist netlist = synthesize_sop(to_sop(tt));
  const std::uint64_t before = evaluation_count();
  const double measured = midpoint_probe(netlist, config);
  DecisionReport report = decide_class(measured);
  report.backend = "analog";
  report.evaluations = evaluation_count() - before;
  return report;
}

std::vector<SweepPoint> monte_carlo_sweep(const TruthTable& tt,
                                          std::span<const double> delta_grid,
                                          std::span<const double> sigma_grid,
                                          int trials, std::uint64_t seed) {
  const FunctionClass truth = classify(tt);
  if (truth == FunctionClass::Neither) {
    throw PromiseError("function is neither constant nor balanced; "
                       "misclassification rate is undefined");
  }
  if (trials < 1) throw Error("trials must be >= 1");
  for (double d : delta_grid) {
    if (!(d >= 0.0)) throw Error("delta grid values must be >= 0");
  }
  for (double s : sigma_grid) {
    if (!(s >= 0.0)) throw Error("sigma grid values must be >= 0");
  }

  const Netlist netlist = synthesize_sop(to_sop(tt));
  std::vector<SweepPoint> points;
  points.reserve(delta_grid.size() * sigma_grid.size());

  std::uint64_t point_index = 0;
  for (double delta : delta_grid) {
    for (double sigma : sigma_grid) {
      int misclassified = 0;
      for (int trial = 0; trial < trials; ++trial) {
        AnalogConfig cfg;
        cfg.gain_error = delta;
        cfg.offset = sigma;
        cfg.seed = derive_seed(seed, point_index, static_cast<std::uint64_t>(trial));
        const double measured = midpoint_probe(netlist, cfg);
        if (decide_class(measured).verdict != truth) ++misclassified;
      }
      points.push_back(SweepPoint{tt.arity(), delta, sigma, trials,
                                  static_cast<double>(misclassified) /
                                      static_cast<double>(trials)});
      ++point_index;
    }
  }
  return points;
}

std::string format_sweep_csv(std::span<const SweepPoint> points) {
  std::string out = "n,delta,sigma,trials,misclass_rate\n";
  char buf[128];
  for (const SweepPoint& p : points) {
    std::snprintf(buf, sizeof buf, "%d,%g,%g,%d,%.6f\n", p.arity, p.delta, p.sigma,
                  p.trials, p.misclass_rate);
    out += buf;
  }
  return out;
}

} // namespace djsim
