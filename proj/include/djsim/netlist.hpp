#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "djsim/truth_table.hpp"

namespace djsim {

/// The five analog building blocks. Buffer and inverter are unity-gain
/// op-amp stages; the multiplier is the AND-equivalent, the adder plus
/// limiter the OR-equivalent.
enum class BlockKind { Buffer, Inverter, Multiplier, Adder, Limiter };

inline constexpr std::size_t kBlockKindCount = 5;

/// Wire-format tag ("BUF", "INV", "MUL", "ADD", "LIM").
std::string_view kind_name(BlockKind kind);
BlockKind kind_from_name(std::string_view name); // throws FormatError

struct Block {
  std::string id;                  // unique, not terminal-shaped
  BlockKind kind = BlockKind::Buffer;
  std::vector<std::string> inputs; // terminal "x<i>" or earlier block id

  bool operator==(const Block&) const = default;
};

/// Directed acyclic block circuit with input terminals x1..xn and a
/// single output wire. Blocks are stored in topological order: every
/// input reference points at a terminal or an earlier block.
struct Netlist {
  int arity = 1;
  std::vector<Block> blocks;
  std::string output;

  bool operator==(const Netlist&) const = default;
};

struct NetlistStats {
  std::array<std::size_t, kBlockKindCount> counts{}; // indexed by BlockKind
  std::size_t depth = 0;

  std::size_t count(BlockKind kind) const { return counts[static_cast<std::size_t>(kind)]; }
};

/// Compile a canonical sum-of-products into the block circuit: one
/// shared inverter per variable that appears complemented, one n-input
/// multiplier per minterm (a buffer stands in when n = 1), one adder
/// with fan-in equal to the minterm count, one limiter as the output.
/// Zero minterms leave the adder with fan-in 0, which evaluates to
/// ground (0 V).
Netlist synthesize_sop(const SopForm& sop);

/// Check every structural invariant; returns all violations (empty
/// means the netlist is well-formed).
std::vector<std::string> validate(const Netlist& netlist);

/// Block counts plus DAG depth. Depth counts multiplier/buffer/adder/
/// limiter stages along the longest terminal-to-output path; inverters
/// are literal conditioning and add no depth, the usual convention for
/// inverter-free logic depth.
NetlistStats stats(const Netlist& netlist);

/// JSON wire format:
///   {"arity": n, "blocks": [{"id": "b1", "kind": "MUL",
///    "inputs": ["x1", ...]}, ...], "output": "<wire>"}
std::string serialize_netlist(const Netlist& netlist);

/// Inverse of serialize_netlist; validates and throws FormatError (bad
/// JSON or fields) or Error (first structural violation).
Netlist parse_netlist(std::string_view text);

/// True when `ref` names an input terminal ("x1".."x<arity>").
bool is_terminal_ref(std::string_view ref, int arity);

} // namespace djsim
