#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "djsim/truth_table.hpp"

namespace djsim {

enum class ExprKind { Const0, Const1, Var, Not, And, Or, Xor };

/// Boolean expression tree. Variables are 1-based (`x1`, `x2`, ...).
/// And/Or are n-ary (chains flatten during parsing); Xor is binary and
/// left-associative; Not has one child.
struct Expr {
  ExprKind kind = ExprKind::Const0;
  int var = 0;                 // Var nodes only
  std::vector<Expr> children;

  static Expr constant(bool value);
  static Expr variable(int index);
  static Expr negation(Expr child);
  static Expr conjunction(std::vector<Expr> children);
  static Expr disjunction(std::vector<Expr> children);
  static Expr exclusive_or(Expr lhs, Expr rhs);

  bool operator==(const Expr&) const = default;
};

/// Grammar (whitespace insignificant, precedence ! > & > ^ > |):
///   expr    := xorterm ('|' xorterm)*
///   xorterm := term ('^' term)*
///   term    := factor ('&' factor)*
///   factor  := '!' factor | '(' expr ')' | 'x' DIGITS | '0' | '1'
/// Throws ParseError with a 1-based character position.
Expr parse_expr(std::string_view text);

/// Minimal-parenthesis rendering; re-parsing the output reproduces the
/// tree structurally.
std::string print_expr(const Expr& expr);

/// Largest variable index used. Throws ArityError when indices skip
/// (naming the missing variable) or when the expression uses no
/// variables at all (constants need an explicit arity).
int infer_arity(const Expr& expr);

/// Evaluate on a single assignment (x1 first), standard semantics.
bool eval_expr(const Expr& expr, const std::vector<std::uint8_t>& assignment);

/// Tabulate on all 2^arity assignments. Built bottom-up over whole
/// output columns, so it is an independent route from eval_expr.
/// Requires max variable index <= arity <= kArityCap.
TruthTable to_truth_table(const Expr& expr, int arity);

/// Parse the truth-table text format (see to_text). Errors carry
/// 1-based line/column positions.
TruthTable parse_truth_table_text(std::string_view text);

} // namespace djsim
