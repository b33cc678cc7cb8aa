#pragma once

// Text syntax for formal expressions.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor | '/' factor)*
//   factor := atom ['^' ['-'] int]
//   atom   := int | name | 'e(' int ',' int ')' | '(' expr ')'
//
// Names: q, zeta, Delta, r, t1.., w1.., g1.., X1.., Ts0.., hs0.., Trho,
// hrho, e0.. .  Inverses, X_j for j >= 2, Ts^-1, g^-1 and the averaging
// idempotents are expanded into the generator symbols when parsed.

#include <optional>
#include <set>
#include <string>

#include "affyh/presentations.hpp"

namespace affyh {

struct SymbolScope {
  int r = 1;
  int n = 2;
  int field = 1;
  /// Symbols the result may mention; empty optional accepts all of them.
  std::optional<std::set<std::string>> allowed;
  /// Torus prefix used by the e-macros.
  std::string torus = "t";
};

SymbolScope universal_scope(int r, int n);
/// Scope for a built-in presentation name (yokonuma, im_affine, modified_affine, ...).
SymbolScope presentation_scope(const std::string& name, int r, int n);

FormalExpression parse_expression(const std::string& src, const SymbolScope& scope);

/// Same grammar, but each factor is evaluated under `assign` and products
/// are taken in the kernel; equals evaluate(parse_expression(src), ...).
Element evaluate_source(const std::string& src, const SymbolScope& scope, const Assignment& assign,
                        const Context& ctx);

}  // namespace affyh
