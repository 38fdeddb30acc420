#include "djsim/netlist.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "djsim/errors.hpp"

namespace djsim {

std::string_view kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::Buffer: return "BUF";
    case BlockKind::Inverter: return "INV";
    case BlockKind::Multiplier: return "MUL";
    case BlockKind::Adder: return "ADD";
    case BlockKind::Limiter: return "LIM";
  }
  return "?";
}

BlockKind kind_from_name(std::string_view name) {
  if (name == "BUF") return BlockKind::Buffer;
  if (name == "INV") return BlockKind::Inverter;
  if (name == "MUL") return BlockKind::Multiplier;
  if (name == "ADD") return BlockKind::Adder;
  if (name == "LIM") return BlockKind::Limiter;
  throw FormatError(1, 0, "unknown block kind '" + std::string(name) + "'");
}

bool is_terminal_ref(std::string_view ref, int arity) {
  if (ref.size() < 2 || ref[0] != 'x') return false;
  const std::string_view digits = ref.substr(1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return false;
  }
  long index = 0;
  for (char c : digits) {
    index = index * 10 + (c - '0');
    if (index > kArityCap) return false;
  }
  // No leading zeros: "x01" is not a terminal.
  if (std::to_string(index) != std::string(digits)) return false;
  return index >= 1 && index <= arity;
}

namespace {

bool looks_like_terminal(std::string_view ref) {
  return ref.size() >= 2 && ref[0] == 'x' &&
         std::all_of(ref.begin() + 1, ref.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

Netlist synthesize_sop(const SopForm& sop) {
  const int n = sop.arity;
  if (n < 1 || n > kArityCap) {
    throw ArityError("sop arity " + std::to_string(n) + " outside [1, " +
                     std::to_string(kArityCap) + "]");
  }
  const std::uint32_t total = std::uint32_t{1} << n;
  std::uint32_t prev = 0;
  bool first = true;
  for (std::uint32_t m : sop.minterms) {
    if (m >= total) throw Error("minterm " + std::to_string(m) + " out of range");
    if (!first && m <= prev) throw Error("minterms must be strictly increasing");
    prev = m;
    first = false;
  }

  Netlist nl;
  nl.arity = n;
  int next_id = 1;
  auto fresh_id = [&next_id] { return "b" + std::to_string(next_id++); };

  // Bit of minterm m for variable v (1-based, x1 most significant).
  auto literal_bit = [n](std::uint32_t m, int v) -> bool { return (m >> (n - v)) & 1u; };

  // One shared inverter per variable that some minterm needs complemented.
  std::vector<std::string> inverter_of(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) {
    const bool needed = std::any_of(sop.minterms.begin(), sop.minterms.end(),
                                    [&](std::uint32_t m) { return !literal_bit(m, v); });
    if (needed) {
      Block inv{fresh_id(), BlockKind::Inverter, {"x" + std::to_string(v)}};
      inverter_of[static_cast<std::size_t>(v)] = inv.id;
      nl.blocks.push_back(std::move(inv));
    }
  }

  // One product block per minterm, inputs in variable order. A 1-input
  // multiplier is not a thing, so arity 1 uses a buffer instead.
  std::vector<std::string> product_ids;
  product_ids.reserve(sop.minterms.size());
  for (std::uint32_t m : sop.minterms) {
    std::vector<std::string> inputs;
    inputs.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
      inputs.push_back(literal_bit(m, v) ? "x" + std::to_string(v)
                                         : inverter_of[static_cast<std::size_t>(v)]);
    }
    const BlockKind kind = (n == 1) ? BlockKind::Buffer : BlockKind::Multiplier;
    Block product{fresh_id(), kind, std::move(inputs)};
    product_ids.push_back(product.id);
    nl.blocks.push_back(std::move(product));
  }

  // Adder over all products (fan-in 0 is the ground convention for the
  // empty sum), then the limiter as the single output.
  Block adder{fresh_id(), BlockKind::Adder, std::move(product_ids)};
  const std::string adder_id = adder.id;
  nl.blocks.push_back(std::move(adder));
  Block limiter{fresh_id(), BlockKind::Limiter, {adder_id}};
  nl.output = limiter.id;
  nl.blocks.push_back(std::move(limiter));
  return nl;
}

std::vector<std::string> validate(const Netlist& netlist) {
  std::vector<std::string> violations;
  if (netlist.arity < 1 || netlist.arity > kArityCap) {
    violations.push_back("arity " + std::to_string(netlist.arity) + " outside [1, " +
                         std::to_string(kArityCap) + "]");
  }

  std::unordered_map<std::string_view, std::size_t> position;
  position.reserve(netlist.blocks.size());
  std::unordered_set<std::string_view> all_ids;
  for (const Block& block : netlist.blocks) all_ids.insert(block.id);

  for (std::size_t i = 0; i < netlist.blocks.size(); ++i) {
    const Block& block = netlist.blocks[i];
    if (block.id.empty()) {
      violations.push_back("block " + std::to_string(i) + " has an empty id");
    } else if (looks_like_terminal(block.id)) {
      violations.push_back("block id '" + block.id + "' is terminal-shaped");
    } else if (position.count(block.id)) {
      violations.push_back("duplicate block id '" + block.id + "'");
    }

    const std::size_t fan_in = block.inputs.size();
    switch (block.kind) {
      case BlockKind::Buffer:
      case BlockKind::Inverter:
      case BlockKind::Limiter:
        if (fan_in != 1) {
          violations.push_back("block '" + block.id + "' (" + std::string(kind_name(block.kind)) +
                               ") needs fan-in 1, has " + std::to_string(fan_in));
        }
        break;
      case BlockKind::Multiplier:
        if (fan_in < 2) {
          violations.push_back("block '" + block.id + "' (MUL) needs fan-in >= 2, has " +
                               std::to_string(fan_in));
        }
        break;
      case BlockKind::Adder:
        break; // fan-in 0 is the ground convention
    }

    for (const std::string& ref : block.inputs) {
      if (is_terminal_ref(ref, netlist.arity)) continue;
      if (ref == block.id) {
        violations.push_back("cycle: block '" + block.id + "' references itself");
      } else if (position.count(ref)) {
        continue; // earlier block
      } else if (all_ids.count(ref)) {
        violations.push_back("cycle: block '" + block.id + "' input '" + ref +
                             "' refers to a later block");
      } else {
        violations.push_back("unknown reference '" + ref + "' in block '" + block.id + "'");
      }
    }
    position.emplace(block.id, i);
  }

  if (netlist.output.empty()) {
    violations.push_back("missing output wire");
  } else if (!is_terminal_ref(netlist.output, netlist.arity) &&
             !position.count(netlist.output)) {
    violations.push_back("output references unknown wire '" + netlist.output + "'");
  }
  return violations;
}

NetlistStats stats(const Netlist& netlist) {
  NetlistStats out;
  std::unordered_map<std::string_view, std::size_t> level; // by block id
  for (const Block& block : netlist.blocks) {
    out.counts[static_cast<std::size_t>(block.kind)] += 1;
    std::size_t input_level = 0;
    for (const std::string& ref : block.inputs) {
      const auto it = level.find(ref);
      if (it != level.end()) input_level = std::max(input_level, it->second);
    }
    const std::size_t weight = (block.kind == BlockKind::Inverter) ? 0 : 1;
    level[block.id] = input_level + weight;
  }
  const auto it = level.find(netlist.output);
  out.depth = (it != level.end()) ? it->second : 0;
  return out;
}

std::string serialize_netlist(const Netlist& netlist) {
  nlohmann::ordered_json doc;
  doc["arity"] = netlist.arity;
  doc["blocks"] = nlohmann::ordered_json::array();
  for (const Block& block : netlist.blocks) {
    nlohmann::ordered_json entry;
    entry["id"] = block.id;
    entry["kind"] = std::string(kind_name(block.kind));
    entry["inputs"] = block.inputs;
    doc["blocks"].push_back(std::move(entry));
  }
  doc["output"] = netlist.output;
  return doc.dump(2) + "\n";
}

Netlist parse_netlist(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(1, 0, std::string("netlist is not valid JSON: ") + e.what());
  }

  if (!doc.is_object() || !doc.contains("arity") || !doc.contains("blocks") ||
      !doc.contains("output")) {
    throw FormatError(1, 0, "netlist document needs 'arity', 'blocks' and 'output'");
  }
  if (!doc["arity"].is_number_integer()) throw FormatError(1, 0, "'arity' must be an integer");
  if (!doc["blocks"].is_array()) throw FormatError(1, 0, "'blocks' must be an array");
  if (!doc["output"].is_string()) throw FormatError(1, 0, "'output' must be a string");

  Netlist nl;
  nl.arity = doc["arity"].get<int>();
  nl.output = doc["output"].get<std::string>();
  nl.blocks.reserve(doc["blocks"].size());
  std::size_t index = 0;
  for (const auto& entry : doc["blocks"]) {
    const std::string where = "blocks[" + std::to_string(index) + "]";
    if (!entry.is_object() || !entry.contains("id") || !entry.contains("kind") ||
        !entry.contains("inputs")) {
      throw FormatError(1, 0, where + " needs 'id', 'kind' and 'inputs'");
    }
    if (!entry["id"].is_string()) throw FormatError(1, 0, where + ".id must be a string");
    if (!entry["kind"].is_string()) throw FormatError(1, 0, where + ".kind must be a string");
    if (!entry["inputs"].is_array()) throw FormatError(1, 0, where + ".inputs must be an array");

    Block block;
    block.id = entry["id"].get<std::string>();
    try {
      block.kind = kind_from_name(entry["kind"].get<std::string>());
    } catch (const FormatError&) {
      throw FormatError(1, 0, where + ".kind: unknown block kind '" +
                                  entry["kind"].get<std::string>() + "'");
    }
    for (const auto& ref : entry["inputs"]) {
      if (!ref.is_string()) throw FormatError(1, 0, where + ".inputs must hold strings");
      block.inputs.push_back(ref.get<std::string>());
    }
    nl.blocks.push_back(std::move(block));
    ++index;
  }

  const auto violations = validate(nl);
  if (!violations.empty()) {
    std::string message = "invalid netlist: " + violations.front();
    if (violations.size() > 1) {
      message += " (+" + std::to_string(violations.size() - 1) + " more)";
    }
    throw Error(message);
  }
  return nl;
}

} // namespace djsim
