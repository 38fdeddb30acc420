#include "djsim/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "djsim/analog.hpp"
#include "djsim/errors.hpp"
#include "djsim/expr.hpp"
#include "djsim/netlist.hpp"
#include "djsim/quantum.hpp"
#include "djsim/truth_table.hpp"
#include "djsim/version.hpp"

namespace djsim {

namespace {

using ordered_json = nlohmann::ordered_json;

struct OracleSpec {
  std::string expr;
  std::string table_path;
  int arity_override = 0; // 0 = infer from the expression
};

void add_oracle_options(CLI::App* cmd, OracleSpec& spec) {
  auto* expr = cmd->add_option("--expr", spec.expr,
                               "Boolean expression over x1..xn, e.g. \"x1 & !x2 | !x1 & x2\"");
  auto* table = cmd->add_option("--table", spec.table_path, "truth-table file (n=<arity> header)");
  auto* arity = cmd->add_option("--arity", spec.arity_override,
                                "input count override (required for constant expressions)");
  expr->excludes(table);
  table->excludes(expr);
  arity->excludes(table);
}

struct ResolvedOracle {
  TruthTable tt;
  ordered_json input; // manifest echo
};

ResolvedOracle resolve_oracle(const OracleSpec& spec) {
  if (!spec.expr.empty()) {
    const Expr ast = parse_expr(spec.expr);
    const int arity = spec.arity_override > 0 ? spec.arity_override : infer_arity(ast);
    ordered_json input{{"kind", "expr"}, {"expr", spec.expr}};
    return ResolvedOracle{to_truth_table(ast, arity), std::move(input)};
  }
  if (!spec.table_path.empty()) {
    std::ifstream in(spec.table_path);
    if (!in) throw IoError("cannot open truth-table file '" + spec.table_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    ordered_json input{{"kind", "table"}, {"path", spec.table_path}};
    return ResolvedOracle{parse_truth_table_text(buffer.str()), std::move(input)};
  }
  throw Error("no oracle given: supply --expr or --table");
}

ordered_json make_manifest(const std::string& command, ordered_json input, int arity,
                           std::uint64_t seed, ordered_json config) {
  return ordered_json{{"command", command}, {"input", std::move(input)},   {"arity", arity},
                      {"seed", seed},       {"config", std::move(config)}, {"version", kVersion}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<double> parse_grid(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(start, comma - start);
    const auto begin = token.find_first_not_of(" \t");
    const auto end = token.find_last_not_of(" \t");
    token = (begin == std::string::npos) ? "" : token.substr(begin, end - begin + 1);
    if (token.empty()) throw Error(flag + ": empty grid entry");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw Error(flag + ": '" + token + "' is not a number");
    }
    if (used != token.size()) throw Error(flag + ": '" + token + "' is not a number");
    values.push_back(value);
    if (comma == text.size()) break;
    start = comma + 1;
  }
  if (values.empty()) throw Error(flag + ": empty grid");
  return values;
}

std::string format_volts(double normalized, double logic_high) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", normalized * logic_high);
  return std::string(buf) + " V";
}

const Block* find_adder(const Netlist& netlist) {
  for (const Block& block : netlist.blocks) {
    if (block.kind == BlockKind::Adder) return &block;
  }
  return nullptr;
}

ordered_json stats_json(const Netlist& netlist) {
  const NetlistStats s = stats(netlist);
  const Block* adder = find_adder(netlist);
  return ordered_json{{"BUF", s.count(BlockKind::Buffer)},
                      {"INV", s.count(BlockKind::Inverter)},
                      {"MUL", s.count(BlockKind::Multiplier)},
                      {"ADD", s.count(BlockKind::Adder)},
                      {"LIM", s.count(BlockKind::Limiter)},
                      {"adder_fan_in", adder ? adder->inputs.size() : 0},
                      {"depth", s.depth}};
}

// --- classify ---------------------------------------------------------

struct ClassifyOpts {
  OracleSpec oracle;
  std::string backend = "all";
  double delta = 0.0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  double logic_high = 1.0;
  bool json = false;
};

int do_classify(const ClassifyOpts& opts, std::ostream& out) {
  const ResolvedOracle oracle = resolve_oracle(opts.oracle);
  const TruthTable& tt = oracle.tt;

  AnalogConfig cfg;
  cfg.logic_high = opts.logic_high;
  cfg.gain_error = opts.delta;
  cfg.offset = opts.sigma;
  cfg.seed = opts.seed;

  const bool want_exhaustive = opts.backend == "exhaustive" || opts.backend == "all";
  const bool want_analog = opts.backend == "analog" || opts.backend == "all";
  const bool want_quantum = opts.backend == "quantum" || opts.backend == "all";

  const FunctionClass cls = classify(tt);
  std::optional<DecisionReport> analog;
  std::optional<QuantumReport> quantum;
  if (want_analog) analog = run_deutsch_analog(tt, cfg);
  if (want_quantum) quantum = run_dja_quantum(tt);

  // Agreement only makes sense when everything ran and the promise
  // holds; the quantum backend cannot tell the two constants apart.
  bool agree = true;
  const bool promise = cls != FunctionClass::Neither;
  if (opts.backend == "all" && promise) {
    if (analog->verdict != cls) agree = false;
    const QuantumVerdict expected = (cls == FunctionClass::Balanced)
                                        ? QuantumVerdict::Balanced
                                        : QuantumVerdict::Constant;
    if (quantum->verdict != expected) agree = false;
  }

  if (opts.json) {
    ordered_json result;
    if (want_exhaustive) {
      result["exhaustive"] = ordered_json{{"class", to_string(cls)},
                                          {"ones", tt.ones_count()},
                                          {"size", tt.size()}};
    }
    if (want_analog) {
      result["analog"] = ordered_json{{"verdict", to_string(analog->verdict)},
                                      {"measured", analog->measured},
                                      {"measured_volts", analog->measured * opts.logic_high},
                                      {"distance", analog->distance},
                                      {"evaluations", analog->evaluations}};
    }
    if (want_quantum) {
      result["quantum"] = ordered_json{{"verdict", to_string(quantum->verdict)},
                                       {"p_all_zero", quantum->p_all_zero}};
    }
    if (opts.backend == "all") result["agreement"] = agree;

    ordered_json doc{
        {"manifest",
         make_manifest("classify", oracle.input, tt.arity(), opts.seed,
                       ordered_json{{"backend", opts.backend},
                                    {"delta", opts.delta},
                                    {"sigma", opts.sigma},
                                    {"logic_high", opts.logic_high}})},
        {"result", std::move(result)}};
    out << doc.dump(2) << "\n";
  } else {
    const std::string shown =
        !opts.oracle.expr.empty() ? opts.oracle.expr : opts.oracle.table_path;
    out << "oracle: " << shown << " (n=" << tt.arity() << ")\n";
    if (want_exhaustive) {
      out << "exhaustive: " << to_string(cls) << " (ones " << tt.ones_count() << "/"
          << tt.size() << ")\n";
    }
    if (want_analog) {
      out << "analog:     " << to_string(analog->verdict) << " (measured "
          << format_volts(analog->measured, opts.logic_high) << ", distance "
          << analog->distance << ", evaluations " << analog->evaluations << ")\n";
    }
    if (want_quantum) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", quantum->p_all_zero);
      out << "quantum:    " << to_string(quantum->verdict) << " (p_all_zero " << buf << ")\n";
    }
    if (opts.backend == "all") {
      out << "agreement:  " << (agree ? "ok" : "MISMATCH") << "\n";
    }
  }
  return agree ? kExitOk : kExitDisagreement;
}

// --- synth ------------------------------------------------------------

struct SynthOpts {
  OracleSpec oracle;
  std::string out_path;
  bool json = false;
};

int do_synth(const SynthOpts& opts, std::ostream& out) {
  const ResolvedOracle oracle = resolve_oracle(opts.oracle);
  const Netlist netlist = synthesize_sop(to_sop(oracle.tt));
  write_file(opts.out_path, serialize_netlist(netlist));

  if (opts.json) {
    ordered_json doc{{"manifest", make_manifest("synth", oracle.input, oracle.tt.arity(), 0,
                                                ordered_json{{"out", opts.out_path}})},
                     {"result", ordered_json{{"netlist_path", opts.out_path},
                                             {"stats", stats_json(netlist)}}}};
    out << doc.dump(2) << "\n";
  } else {
    const NetlistStats s = stats(netlist);
    const Block* adder = find_adder(netlist);
    out << "wrote netlist to " << opts.out_path << "\n";
    out << "arity " << netlist.arity << ", blocks " << netlist.blocks.size() << ": BUF "
        << s.count(BlockKind::Buffer) << ", INV " << s.count(BlockKind::Inverter) << ", MUL "
        << s.count(BlockKind::Multiplier) << ", ADD " << s.count(BlockKind::Adder) << ", LIM "
        << s.count(BlockKind::Limiter) << "; adder fan-in "
        << (adder ? adder->inputs.size() : 0) << "; depth " << s.depth << "\n";
  }
  return kExitOk;
}

// --- sweep ------------------------------------------------------------

struct SweepOpts {
  OracleSpec oracle;
  std::string delta_grid = "0";
  std::string sigma_grid = "0";
  int trials = 1000;
  std::uint64_t seed = 0;
  std::string out_path;
  bool json = false;
};

int do_sweep(const SweepOpts& opts, std::ostream& out) {
  const ResolvedOracle oracle = resolve_oracle(opts.oracle);
  const std::vector<double> deltas = parse_grid(opts.delta_grid, "--delta-grid");
  const std::vector<double> sigmas = parse_grid(opts.sigma_grid, "--sigma-grid");
  const std::vector<SweepPoint> points =
      monte_carlo_sweep(oracle.tt, deltas, sigmas, opts.trials, opts.seed);
  write_file(opts.out_path, format_sweep_csv(points));

  if (opts.json) {
    ordered_json rows = ordered_json::array();
    for (const SweepPoint& p : points) {
      rows.push_back(ordered_json{{"n", p.arity},
                                  {"delta", p.delta},
                                  {"sigma", p.sigma},
                                  {"trials", p.trials},
                                  {"misclass_rate", p.misclass_rate}});
    }
    ordered_json doc{{"manifest", make_manifest("sweep", oracle.input, oracle.tt.arity(),
                                                opts.seed,
                                                ordered_json{{"delta_grid", opts.delta_grid},
                                                             {"sigma_grid", opts.sigma_grid},
                                                             {"trials", opts.trials},
                                                             {"out", opts.out_path}})},
                     {"result", ordered_json{{"rows", std::move(rows)}}}};
    out << doc.dump(2) << "\n";
  } else {
    out << "wrote " << points.size() << " grid point" << (points.size() == 1 ? "" : "s")
        << " to " << opts.out_path << "\n";
  }
  return kExitOk;
}

// --- random -----------------------------------------------------------

struct RandomOpts {
  int arity = 0;
  std::string cls;
  std::uint64_t seed = 0;
  std::string out_path;
  bool json = false;
};

FunctionClass class_from_flag(const std::string& name) {
  if (name == "constant0") return FunctionClass::Constant0;
  if (name == "constant1") return FunctionClass::Constant1;
  if (name == "balanced") return FunctionClass::Balanced;
  if (name == "neither") return FunctionClass::Neither;
  throw Error("unknown class '" + name + "' (constant0|constant1|balanced|neither)");
}

int do_random(const RandomOpts& opts, std::ostream& out) {
  const TruthTable tt = random_table(opts.arity, class_from_flag(opts.cls), opts.seed);
  const std::string text = to_text(tt);
  if (!opts.out_path.empty()) write_file(opts.out_path, text);

  if (opts.json) {
    ordered_json doc{
        {"manifest", make_manifest("random",
                                   ordered_json{{"kind", "generated"}, {"class", opts.cls}},
                                   opts.arity, opts.seed,
                                   ordered_json{{"out", opts.out_path}})},
        {"result", ordered_json{{"class", to_string(classify(tt))},
                                {"ones", tt.ones_count()},
                                {"table", text}}}};
    out << doc.dump(2) << "\n";
  } else if (opts.out_path.empty()) {
    out << text;
  } else {
    out << "wrote " << to_string(classify(tt)) << " table (n=" << opts.arity << ", ones "
        << tt.ones_count() << ") to " << opts.out_path << "\n";
  }
  return kExitOk;
}

int map_error_to_exit(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (dynamic_cast<const PromiseError*>(&e)) return kExitPromise;
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  return kExitParse;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"one-measurement Boolean oracle classification: analog block-circuit, "
               "quantum state-vector and exhaustive digital backends"};
  app.name("djsim");
  bool show_version = false;
  app.add_flag("--version", show_version, "print version and exit");
  app.require_subcommand(0, 1);

  ClassifyOpts classify_opts;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "decide constant vs balanced with one measurement");
  add_oracle_options(classify_cmd, classify_opts.oracle);
  classify_cmd->add_option("--backend", classify_opts.backend, "analog|quantum|exhaustive|all")
      ->check(CLI::IsMember({"analog", "quantum", "exhaustive", "all"}));
  classify_cmd->add_option("--delta", classify_opts.delta, "per-block gain error bound");
  classify_cmd->add_option("--sigma", classify_opts.sigma, "per-block offset bound");
  classify_cmd->add_option("--seed", classify_opts.seed, "noise seed");
  classify_cmd->add_option("--logic-high", classify_opts.logic_high,
                           "display voltage scale (e.g. 5 for 5 V logic)");
  classify_cmd->add_flag("--json", classify_opts.json, "machine-readable output");

  SynthOpts synth_opts;
  CLI::App* synth_cmd = app.add_subcommand("synth", "compile the oracle to an analog netlist");
  add_oracle_options(synth_cmd, synth_opts.oracle);
  synth_cmd->add_option("--out", synth_opts.out_path, "netlist JSON output path")->required();
  synth_cmd->add_flag("--json", synth_opts.json, "machine-readable output");

  SweepOpts sweep_opts;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Monte Carlo tolerance sweep over noise bounds");
  add_oracle_options(sweep_cmd, sweep_opts.oracle);
  sweep_cmd->add_option("--delta-grid", sweep_opts.delta_grid, "comma-separated gain bounds");
  sweep_cmd->add_option("--sigma-grid", sweep_opts.sigma_grid, "comma-separated offset bounds");
  sweep_cmd->add_option("--trials", sweep_opts.trials, "probes per grid point");
  sweep_cmd->add_option("--seed", sweep_opts.seed, "sweep seed");
  sweep_cmd->add_option("--out", sweep_opts.out_path, "CSV output path")->required();
  sweep_cmd->add_flag("--json", sweep_opts.json, "machine-readable output");

  RandomOpts random_opts;
  CLI::App* random_cmd =
      app.add_subcommand("random", "generate a truth table of a requested class");
  random_cmd->add_option("--n", random_opts.arity, "input count")->required();
  random_cmd
      ->add_option("--class", random_opts.cls, "constant0|constant1|balanced|neither")
      ->required();
  random_cmd->add_option("--seed", random_opts.seed, "generator seed");
  random_cmd->add_option("--out", random_opts.out_path, "truth-table output path");
  random_cmd->add_flag("--json", random_opts.json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  if (show_version && app.get_subcommands().empty()) {
    out << "djsim " << kVersion << "\n";
    return kExitOk;
  }
  if (app.get_subcommands().empty()) {
    out << app.help();
    return kExitParse;
  }

  try {
    if (classify_cmd->parsed()) return do_classify(classify_opts, out);
    if (synth_cmd->parsed()) return do_synth(synth_opts, out);
    if (sweep_cmd->parsed()) return do_sweep(sweep_opts, out);
    if (random_cmd->parsed()) return do_random(random_opts, out);
  } catch (const Error& e) {
    return map_error_to_exit(e, err);
  }
  return kExitParse;
}

} // namespace djsim
