#pragma once

#include <string>

#include "topos/dsl/ast.hpp"

namespace topos::dsl {

std::string print_expr(const Expr& e);
std::string print_literal(const LiteralExpr& lit);
std::string print_stmt(const Stmt& s);
// One statement per line; parse(print(d)) == d.
std::string print(const SceneDocument& doc);

}  // namespace topos::dsl
