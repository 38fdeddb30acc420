#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "djsim/cli.hpp"
#include "djsim/expr.hpp"
#include "djsim/netlist.hpp"
#include "djsim/truth_table.hpp"

using namespace djsim;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("djsim_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace

TEST_CASE("classify all backends on a balanced oracle") {
  const CliResult r = run({"classify", "--expr", "x1 ^ x2", "--backend", "all"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("Balanced") != std::string::npos);
  CHECK(r.out.find("agreement:  ok") != std::string::npos);
}

TEST_CASE("classify constant with arity override and logic-high scaling") {
  const CliResult r =
      run({"classify", "--expr", "1", "--arity", "2", "--backend", "analog"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("Constant1") != std::string::npos);
  CHECK(r.out.find("measured 1 V") != std::string::npos);

  const CliResult scaled = run({"classify", "--expr", "x1", "--backend", "analog",
                                "--logic-high", "5"});
  CHECK(scaled.code == kExitOk);
  CHECK(scaled.out.find("measured 2.5 V") != std::string::npos);
}

TEST_CASE("classify exhaustive reports Neither for non-promise oracles") {
  const CliResult r = run({"classify", "--expr", "x1 | x2", "--backend", "exhaustive"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("Neither") != std::string::npos);

  // Non-promise functions never trip the disagreement exit.
  const CliResult all = run({"classify", "--expr", "x1 | x2", "--backend", "all"});
  CHECK(all.code == kExitOk);
}

TEST_CASE("classify json output carries the manifest") {
  const CliResult r =
      run({"classify", "--expr", "x1 ^ x2", "--backend", "all", "--json"});
  CHECK(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["manifest"]["command"] == "classify");
  CHECK(doc["manifest"]["arity"] == 2);
  CHECK(doc["manifest"]["input"]["expr"] == "x1 ^ x2");
  CHECK(doc["result"]["analog"]["measured"] == 0.5);
  CHECK(doc["result"]["analog"]["evaluations"] == 1);
  CHECK(doc["result"]["quantum"]["p_all_zero"] == 0.0);
  CHECK(doc["result"]["agreement"] == true);

  const CliResult again =
      run({"classify", "--expr", "x1 ^ x2", "--backend", "all", "--json"});
  CHECK(again.out == r.out); // deterministic byte-for-byte
}

TEST_CASE("classify reads truth-table files") {
  const auto path = temp_file("table.tt");
  {
    std::ofstream out(path);
    out << "n=2\n0110\n";
  }
  const CliResult r = run({"classify", "--table", path.string(), "--backend", "all"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("Balanced") != std::string::npos);
  std::filesystem::remove(path);

  const CliResult missing =
      run({"classify", "--table", "/nonexistent/none.tt", "--backend", "all"});
  CHECK(missing.code == kExitIo);
}

TEST_CASE("exit codes for bad oracles") {
  CHECK(run({"classify", "--expr", "x1 &"}).code == kExitParse);
  CHECK(run({"classify", "--expr", "1"}).code == kExitParse); // needs --arity
  CHECK(run({"classify"}).code == kExitParse);                // no oracle at all
  CHECK(run({"synth", "--expr", "x1 &&", "--out", "/tmp/djsim_unused.json"}).code ==
        kExitParse);
}

TEST_CASE("synth writes a parseable netlist and stats") {
  const auto path = temp_file("xor_netlist.json");
  const CliResult r = run({"synth", "--expr", "x1 ^ x2", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("MUL 2") != std::string::npos);

  const Netlist nl = parse_netlist(slurp(path));
  CHECK(nl.arity == 2);
  CHECK(stats(nl).count(BlockKind::Multiplier) == 2);
  std::filesystem::remove(path);
}

TEST_CASE("synth error paths") {
  const CliResult io = run({"synth", "--expr", "x1", "--out", "/nonexistent/dir/out.json"});
  CHECK(io.code == kExitIo);

  // arity cap: a 17-input table file is rejected while parsing
  const auto path = temp_file("cap.tt");
  {
    std::ofstream out(path);
    out << "n=17\n01\n";
  }
  const CliResult cap = run({"synth", "--table", path.string(), "--out", "/tmp/x.json"});
  CHECK(cap.code == kExitParse);
  std::filesystem::remove(path);
}

TEST_CASE("sweep is deterministic and gated on the promise") {
  const auto path = temp_file("sweep.csv");
  const std::vector<std::string> args = {"sweep",   "--expr", "x1 ^ x2", "--delta-grid",
                                         "0,0.1",   "--sigma-grid", "0", "--trials",
                                         "200",     "--seed", "42",      "--out",
                                         path.string()};
  const CliResult first = run(args);
  CHECK(first.code == kExitOk);
  const std::string csv_first = slurp(path);
  CHECK(csv_first.rfind("n,delta,sigma,trials,misclass_rate\n", 0) == 0);

  const CliResult second = run(args);
  CHECK(second.code == kExitOk);
  CHECK(slurp(path) == csv_first); // byte-identical rerun
  std::filesystem::remove(path);

  const CliResult bad = run({"sweep", "--expr", "x1 | x2", "--out", "/tmp/never.csv"});
  CHECK(bad.code == kExitPromise);
}

TEST_CASE("random generates requested classes") {
  const auto path = temp_file("random.tt");
  const CliResult r = run({"random", "--n", "6", "--class", "balanced", "--seed", "1",
                           "--out", path.string()});
  CHECK(r.code == kExitOk);
  const TruthTable tt = parse_truth_table_text(slurp(path));
  CHECK(tt.arity() == 6);
  CHECK(tt.ones_count() == 32);
  std::filesystem::remove(path);

  const CliResult c0 = run({"random", "--n", "2", "--class", "constant0"});
  CHECK(c0.code == kExitOk);
  CHECK(c0.out == "n=2\n0000\n");

  CHECK(run({"random", "--n", "1", "--class", "neither"}).code == kExitParse);
  CHECK(run({"random", "--n", "2", "--class", "bogus"}).code == kExitParse);
}

TEST_CASE("version flag") {
  const CliResult r = run({"--version"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("djsim") != std::string::npos);
}
