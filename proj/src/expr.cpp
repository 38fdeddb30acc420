#include "djsim/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "djsim/errors.hpp"

namespace djsim {

Expr Expr::constant(bool value) {
  Expr e;
  e.kind = value ? ExprKind::Const1 : ExprKind::Const0;
  return e;
}

Expr Expr::variable(int index) {
  if (index < 1) throw Error("variable index must be >= 1");
  Expr e;
  e.kind = ExprKind::Var;
  e.var = index;
  return e;
}

Expr Expr::negation(Expr child) {
  Expr e;
  e.kind = ExprKind::Not;
  e.children.push_back(std::move(child));
  return e;
}

Expr Expr::conjunction(std::vector<Expr> children) {
  if (children.size() < 2) throw Error("And needs at least two children");
  Expr e;
  e.kind = ExprKind::And;
  e.children = std::move(children);
  return e;
}

Expr Expr::disjunction(std::vector<Expr> children) {
  if (children.size() < 2) throw Error("Or needs at least two children");
  Expr e;
  e.kind = ExprKind::Or;
  e.children = std::move(children);
  return e;
}

Expr Expr::exclusive_or(Expr lhs, Expr rhs) {
  Expr e;
  e.kind = ExprKind::Xor;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = parse_or();
    skip_ws();
    if (pos_ < text_.size()) {
      throw ParseError(pos_ + 1, "expected '&', '^', '|' or end of input");
    }
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_or() {
    std::vector<Expr> terms;
    terms.push_back(parse_xor());
    while (accept('|')) terms.push_back(parse_xor());
    if (terms.size() == 1) return std::move(terms.front());
    return Expr::disjunction(std::move(terms));
  }

  Expr parse_xor() {
    Expr e = parse_and();
    while (accept('^')) e = Expr::exclusive_or(std::move(e), parse_and());
    return e;
  }

  Expr parse_and() {
    std::vector<Expr> factors;
    factors.push_back(parse_factor());
    while (accept('&')) factors.push_back(parse_factor());
    if (factors.size() == 1) return std::move(factors.front());
    return Expr::conjunction(std::move(factors));
  }

  Expr parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError(pos_ + 1, "expected '!', '(', variable, '0' or '1'");
    }
    const char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return Expr::negation(parse_factor());
    }
    if (c == '(') {
      ++pos_;
      Expr e = parse_or();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError(pos_ + 1, "expected ')'");
      }
      ++pos_;
      return e;
    }
    if (c == 'x') {
      const std::size_t start = pos_;
      ++pos_;
      std::size_t digits = 0;
      long index = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + (text_[pos_] - '0');
        if (index > kArityCap) index = kArityCap + 1; // clamp, reported below
        ++pos_;
        ++digits;
      }
      if (digits == 0) throw ParseError(pos_ + 1, "expected digits after 'x'");
      if (index < 1 || index > kArityCap) {
        throw ParseError(start + 1, "variable index must be in [1, " +
                                        std::to_string(kArityCap) + "]");
      }
      return Expr::variable(static_cast<int>(index));
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return Expr::constant(c == '1');
    }
    throw ParseError(pos_ + 1, "expected '!', '(', variable, '0' or '1'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength used to decide where the printer needs parentheses.
// A child printed in a context demanding at least `min_level` gets
// wrapped when its own level is lower.
int level_of(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Or: return 0;
    case ExprKind::Xor: return 1;
    case ExprKind::And: return 2;
    case ExprKind::Not: return 3;
    default: return 4;
  }
}

void print_node(const Expr& e, int min_level, std::string& out) {
  const bool parens = level_of(e) < min_level;
  if (parens) out.push_back('(');
  switch (e.kind) {
    case ExprKind::Const0: out.push_back('0'); break;
    case ExprKind::Const1: out.push_back('1'); break;
    case ExprKind::Var: out += "x" + std::to_string(e.var); break;
    case ExprKind::Not:
      out.push_back('!');
      print_node(e.children[0], 3, out);
      break;
    case ExprKind::And:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += " & ";
        print_node(e.children[i], 3, out);
      }
      break;
    case ExprKind::Xor:
      // Left-associative: the left child may itself be a Xor chain.
      print_node(e.children[0], 1, out);
      out += " ^ ";
      print_node(e.children[1], 2, out);
      break;
    case ExprKind::Or:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += " | ";
        print_node(e.children[i], 1, out);
      }
      break;
  }
  if (parens) out.push_back(')');
}

void collect_vars(const Expr& e, std::set<int>& used) {
  if (e.kind == ExprKind::Var) used.insert(e.var);
  for (const Expr& child : e.children) collect_vars(child, used);
}

// Column-wise evaluation: each node produces its full 2^n output column.
std::vector<std::uint8_t> tabulate(const Expr& e, int arity) {
  const std::size_t total = std::size_t{1} << arity;
  std::vector<std::uint8_t> col(total, 0);
  switch (e.kind) {
    case ExprKind::Const0: break;
    case ExprKind::Const1: std::fill(col.begin(), col.end(), std::uint8_t{1}); break;
    case ExprKind::Var: {
      const int shift = arity - e.var; // x1 is the most significant bit
      for (std::size_t i = 0; i < total; ++i) {
        col[i] = static_cast<std::uint8_t>((i >> shift) & 1u);
      }
      break;
    }
    case ExprKind::Not: {
      col = tabulate(e.children[0], arity);
      for (auto& bit : col) bit ^= 1u;
      break;
    }
    case ExprKind::And: {
      std::fill(col.begin(), col.end(), std::uint8_t{1});
      for (const Expr& child : e.children) {
        const auto sub = tabulate(child, arity);
        for (std::size_t i = 0; i < total; ++i) col[i] &= sub[i];
      }
      break;
    }
    case ExprKind::Or: {
      for (const Expr& child : e.children) {
        const auto sub = tabulate(child, arity);
        for (std::size_t i = 0; i < total; ++i) col[i] |= sub[i];
      }
      break;
    }
    case ExprKind::Xor: {
      col = tabulate(e.children[0], arity);
      const auto rhs = tabulate(e.children[1], arity);
      for (std::size_t i = 0; i < total; ++i) col[i] ^= rhs[i];
      break;
    }
  }
  return col;
}

} // namespace

Expr parse_expr(std::string_view text) {
  if (text.empty()) throw ParseError(1, "empty expression");
  return Parser(text).parse();
}

std::string print_expr(const Expr& expr) {
  std::string out;
  print_node(expr, 0, out);
  return out;
}

int infer_arity(const Expr& expr) {
  std::set<int> used;
  collect_vars(expr, used);
  if (used.empty()) {
    throw ArityError("expression uses no variables; supply an explicit arity");
  }
  const int max_var = *used.rbegin();
  for (int i = 1; i <= max_var; ++i) {
    if (!used.count(i)) {
      throw ArityError("x" + std::to_string(i) + " unused: variable indices must be "
                       "contiguous from x1 (or supply an explicit arity)");
    }
  }
  return max_var;
}

bool eval_expr(const Expr& expr, const std::vector<std::uint8_t>& assignment) {
  switch (expr.kind) {
    case ExprKind::Const0: return false;
    case ExprKind::Const1: return true;
    case ExprKind::Var: {
      const std::size_t i = static_cast<std::size_t>(expr.var) - 1;
      if (i >= assignment.size()) {
        throw ArityError("assignment too short for x" + std::to_string(expr.var));
      }
      return assignment[i] != 0;
    }
    case ExprKind::Not: return !eval_expr(expr.children[0], assignment);
    case ExprKind::And:
      return std::all_of(expr.children.begin(), expr.children.end(),
                         [&](const Expr& c) { return eval_expr(c, assignment); });
    case ExprKind::Or:
      return std::any_of(expr.children.begin(), expr.children.end(),
                         [&](const Expr& c) { return eval_expr(c, assignment); });
    case ExprKind::Xor:
      return eval_expr(expr.children[0], assignment) != eval_expr(expr.children[1], assignment);
  }
  throw Error("unreachable expression kind");
}

TruthTable to_truth_table(const Expr& expr, int arity) {
  if (arity < 1 || arity > kArityCap) {
    throw ArityError("arity " + std::to_string(arity) + " outside [1, " +
                     std::to_string(kArityCap) + "]");
  }
  std::set<int> used;
  collect_vars(expr, used);
  if (!used.empty() && *used.rbegin() > arity) {
    throw ArityError("expression uses x" + std::to_string(*used.rbegin()) +
                     " but arity is " + std::to_string(arity));
  }
  return TruthTable(arity, tabulate(expr, arity));
}

TruthTable parse_truth_table_text(std::string_view text) {
  // Split into lines; a single trailing newline is allowed.
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  if (lines.empty()) throw FormatError(1, 0, "expected header 'n=<arity>'");
  std::string_view header = lines[0];
  if (header.size() > 0 && header.back() == '\r') header.remove_suffix(1);
  if (header.substr(0, 2) != "n=") {
    throw FormatError(1, 1, "expected header 'n=<arity>'");
  }
  std::string_view digits = header.substr(2);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw FormatError(1, 3, "arity must be a decimal integer");
  }
  long arity = 0;
  for (char c : digits) {
    arity = arity * 10 + (c - '0');
    if (arity > kArityCap) break;
  }
  if (arity < 1 || arity > kArityCap) {
    throw ArityError("arity " + std::string(digits) + " outside [1, " +
                     std::to_string(kArityCap) + "]");
  }

  if (lines.size() < 2) throw FormatError(2, 0, "missing output bits line");
  if (lines.size() > 2) throw FormatError(3, 0, "unexpected extra content");
  std::string_view bits = lines[1];
  if (bits.size() > 0 && bits.back() == '\r') bits.remove_suffix(1);
  const std::size_t expected = std::size_t{1} << arity;
  std::vector<std::uint8_t> outputs;
  outputs.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1') {
      throw FormatError(2, i + 1, std::string("illegal character '") + c + "', expected 0 or 1");
    }
    outputs.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (outputs.size() != expected) {
    throw FormatError(2, 0, "expected " + std::to_string(expected) + " bits, got " +
                              std::to_string(outputs.size()));
  }
  return TruthTable(static_cast<int>(arity), std::move(outputs));
}

} // namespace djsim
