#pragma once

#include <string>
#include <string_view>

#include "topos/dsl/ast.hpp"

namespace topos::dsl {

// Throws DslError at the first syntax, relation-name or arity error.
SceneDocument parse(std::string_view text, const std::string& file = {});
SceneDocument parse_file(const std::string& path);

// A single literal such as "not TDs(paul, mer)", as given on the command line.
LiteralExpr parse_literal(std::string_view text, const std::string& file = "<query>");

}  // namespace topos::dsl
