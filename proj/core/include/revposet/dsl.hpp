#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "revposet/presentation.hpp"

namespace revposet {

/// AST of the presentation DSL:
///
///   expr := atom | "dual(" expr ")" | "du(" expr "," expr ")"
///         | "ls(" expr "," expr ")" | "duinf(" expr ")"
///   atom := omega | omega_d | D1 | Dinf | Zinf | Z2 | F1..F8 | F1d..F8d
///         | G1..G4 | G1d..G4d
struct PosetExpr {
  enum class Op { Atom, Dual, DisjointUnion, LinearSum, InfiniteUnion };

  Op op = Op::Atom;
  std::string atom;
  std::vector<PosetExpr> args;

  friend bool operator==(const PosetExpr&, const PosetExpr&) = default;
};

/// Throws SyntaxError with the 1-based line and column of the problem.
PosetExpr parse_expr(std::string_view text);
/// Canonical spelling without whitespace; parse_expr(print_expr(e)) == e.
std::string print_expr(const PosetExpr& e);
/// Throws Error for unknown atoms.
PosetPresentation elaborate(const PosetExpr& e);
inline PosetPresentation elaborate(std::string_view text) { return elaborate(parse_expr(text)); }

std::vector<std::string> dsl_atoms();

}  // namespace revposet
