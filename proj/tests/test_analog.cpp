#include <doctest.h>

#include <cmath>
#include <limits>

#include "djsim/analog.hpp"
#include "djsim/errors.hpp"
#include "djsim/rng.hpp"
#include "helpers.hpp"

using namespace djsim;
using namespace djsim::testing;

namespace {

const AnalogConfig kIdeal{};

Netlist netlist_of(const TruthTable& tt) { return synthesize_sop(to_sop(tt)); }

} // namespace

TEST_CASE("ideal evaluation basics") {
  const Netlist identity = netlist_of(table_from_bits(1, "01"));
  const double in_mid[] = {0.5};
  CHECK(evaluate(identity, in_mid, kIdeal) == 0.5);

  const Netlist zero = netlist_of(TruthTable::constant(2, false));
  const double in2[] = {0.3, 0.9};
  CHECK(evaluate(zero, in2, kIdeal) == 0.0);
}

TEST_CASE("vertex evaluation matches the truth table on majority-of-3") {
  const TruthTable maj = majority3();
  const Netlist nl = netlist_of(maj);
  const double vertex[] = {1.0, 1.0, 0.0};
  CHECK(evaluate(nl, vertex, kIdeal) == 1.0);
  for (std::size_t i = 0; i < 8; ++i) {
    const auto bits = assignment_of(i, 3);
    const double in[] = {static_cast<double>(bits[0]), static_cast<double>(bits[1]),
                         static_cast<double>(bits[2])};
    CHECK(evaluate(nl, in, kIdeal) == (maj.output(i) ? 1.0 : 0.0));
  }
}

TEST_CASE("digital consistency: exhaustive to n = 6, spot checks to n = 10") {
  SplitMix64 rng(6060);
  for (int n = 1; n <= 6; ++n) {
    const TruthTable tt = random_any_table(n, rng);
    const Netlist nl = netlist_of(tt);
    std::vector<double> in(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < tt.size(); ++i) {
      const auto bits = assignment_of(i, n);
      for (int v = 0; v < n; ++v) in[static_cast<std::size_t>(v)] = bits[static_cast<std::size_t>(v)];
      CHECK(evaluate(nl, in, kIdeal) == (tt.output(i) ? 1.0 : 0.0));
    }
  }
  for (int n = 7; n <= 10; ++n) {
    const TruthTable tt = random_any_table(n, rng);
    const Netlist nl = netlist_of(tt);
    std::vector<double> in(static_cast<std::size_t>(n));
    for (int sample = 0; sample < 100; ++sample) {
      const std::size_t i = rng.below(tt.size());
      const auto bits = assignment_of(i, n);
      for (int v = 0; v < n; ++v) in[static_cast<std::size_t>(v)] = bits[static_cast<std::size_t>(v)];
      CHECK(evaluate(nl, in, kIdeal) == (tt.output(i) ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("evaluate validates inputs") {
  const Netlist nl = netlist_of(table_from_bits(1, "01"));
  const double too_many[] = {0.5, 0.5};
  CHECK_THROWS_AS(evaluate(nl, too_many, kIdeal), EvalError);
  const double out_of_range[] = {1.5};
  CHECK_THROWS_AS(evaluate(nl, out_of_range, kIdeal), EvalError);
  const double negative[] = {-0.1};
  CHECK_THROWS_AS(evaluate(nl, negative, kIdeal), EvalError);

  Netlist broken = nl;
  broken.output = "nowhere";
  const double in[] = {0.5};
  CHECK_THROWS_AS(evaluate(broken, in, kIdeal), EvalError);
}

TEST_CASE("midpoint probe hits the ones fraction exactly") {
  CHECK(midpoint_probe(netlist_of(random_table(7, FunctionClass::Balanced, 3)), kIdeal) == 0.5);
  CHECK(midpoint_probe(netlist_of(TruthTable::constant(3, true)), kIdeal) == 1.0);
  CHECK(midpoint_probe(netlist_of(TruthTable::constant(3, false)), kIdeal) == 0.0);
  // OR of two inputs: three minterms of four
  CHECK(midpoint_probe(netlist_of(table_from_bits(2, "0111")), kIdeal) == 0.75);

  SplitMix64 rng(808);
  for (int sample = 0; sample < 150; ++sample) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const TruthTable tt = random_any_table(n, rng);
    const double expected = ones_fraction(tt).value();
    CHECK(midpoint_probe(netlist_of(tt), kIdeal) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("midpoint probe is a single evaluation") {
  const Netlist nl = netlist_of(table_from_bits(2, "0110"));
  const std::uint64_t before = evaluation_count();
  midpoint_probe(nl, kIdeal);
  CHECK(evaluation_count() - before == 1);
}

TEST_CASE("decide_class nearest-target rule") {
  CHECK(decide_class(0.5).verdict == FunctionClass::Balanced);
  CHECK(decide_class(0.5).distance == 0.0);
  CHECK(decide_class(0.98).verdict == FunctionClass::Constant1);
  CHECK(decide_class(0.98).distance == doctest::Approx(0.02));
  CHECK(decide_class(0.75).verdict == FunctionClass::Balanced); // tie
  CHECK(decide_class(0.25).verdict == FunctionClass::Balanced); // tie
  CHECK(decide_class(0.1).verdict == FunctionClass::Constant0);
  CHECK(decide_class(-0.2).verdict == FunctionClass::Constant0);
  CHECK(decide_class(1.3).verdict == FunctionClass::Constant1);
  CHECK_THROWS_AS(decide_class(std::numeric_limits<double>::quiet_NaN()), EvalError);
  CHECK_THROWS_AS(decide_class(std::numeric_limits<double>::infinity()), EvalError);
}

TEST_CASE("run_deutsch_analog composes the pipeline") {
  const DecisionReport inverting = run_deutsch_analog(table_from_bits(1, "10"), kIdeal);
  CHECK(inverting.measured == 0.5);
  CHECK(inverting.verdict == FunctionClass::Balanced);
  CHECK(inverting.backend == "analog");
  CHECK(inverting.evaluations == 1);

  const DecisionReport zero = run_deutsch_analog(TruthTable::constant(3, false), kIdeal);
  CHECK(zero.measured == 0.0);
  CHECK(zero.verdict == FunctionClass::Constant0);

  const DecisionReport balanced =
      run_deutsch_analog(random_table(8, FunctionClass::Balanced, 11), kIdeal);
  CHECK(balanced.measured == 0.5);
  CHECK(balanced.verdict == FunctionClass::Balanced);
  CHECK(balanced.distance == 0.0);
}

TEST_CASE("promise soundness across the corpus") {
  const FunctionClass classes[] = {FunctionClass::Constant0, FunctionClass::Constant1,
                                   FunctionClass::Balanced};
  for (int n = 1; n <= 10; ++n) {
    for (FunctionClass cls : classes) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const TruthTable tt = random_table(n, cls, seed);
        const DecisionReport report = run_deutsch_analog(tt, kIdeal);
        CHECK(report.verdict == cls);
        CHECK(report.distance == 0.0);
      }
    }
  }
}

TEST_CASE("noisy evaluation is deterministic per config") {
  const Netlist nl = netlist_of(majority3());
  AnalogConfig noisy;
  noisy.gain_error = 0.1;
  noisy.offset = 0.05;
  noisy.seed = 77;
  const double a = midpoint_probe(nl, noisy);
  const double b = midpoint_probe(nl, noisy);
  CHECK(a == b);
  noisy.seed = 78;
  CHECK(midpoint_probe(nl, noisy) != a);
}

TEST_CASE("monte carlo sweep") {
  const TruthTable one = TruthTable::constant(1, true);

  SUBCASE("ideal grid point has rate exactly zero") {
    const double zero_grid[] = {0.0};
    const auto points = monte_carlo_sweep(one, zero_grid, zero_grid, 10000, 5);
    REQUIRE(points.size() == 1);
    CHECK(points[0].misclass_rate == 0.0);
  }

  SUBCASE("large gain error misclassifies sometimes") {
    // A single buffer-gain error of -0.5 already drags 1 V to the 0.5 V
    // tie, which decides Balanced.
    const double delta[] = {0.5};
    const double sigma[] = {0.0};
    const auto points = monte_carlo_sweep(one, delta, sigma, 2000, 9);
    REQUIRE(points.size() == 1);
    CHECK(points[0].misclass_rate > 0.0);
  }

  SUBCASE("deterministic for fixed arguments") {
    const double deltas[] = {0.0, 0.1, 0.3};
    const double sigmas[] = {0.0, 0.05};
    const auto a = monte_carlo_sweep(majority3(), deltas, sigmas, 200, 123);
    const auto b = monte_carlo_sweep(majority3(), deltas, sigmas, 200, 123);
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].misclass_rate == b[i].misclass_rate);
    }
  }

  SUBCASE("rejects non-promise functions and bad arguments") {
    const double grid[] = {0.0};
    CHECK_THROWS_AS(monte_carlo_sweep(table_from_bits(2, "0111"), grid, grid, 10, 0),
                    PromiseError);
    CHECK_THROWS_AS(monte_carlo_sweep(one, grid, grid, 0, 0), Error);
  }
}

TEST_CASE("sweep csv format") {
  const SweepPoint points[] = {{2, 0.0, 0.0, 1000, 0.0}, {2, 0.1, 0.05, 1000, 0.0125}};
  CHECK(format_sweep_csv(points) ==
        "n,delta,sigma,trials,misclass_rate\n"
        "2,0,0,1000,0.000000\n"
        "2,0.1,0.05,1000,0.012500\n");
}
