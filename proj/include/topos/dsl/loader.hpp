#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topos/dsl/ast.hpp"
#include "topos/engine.hpp"

namespace topos::dsl {

struct QueryItem {
    Literal lit;
    std::string text;  // as written
    std::optional<Status> expect;
    SourceLoc loc;
};

struct Scene {
    std::string file;
    Kb kb;
    std::vector<QueryItem> queries;
    SaturationLimits limits;
};

// Builds the knowledge base statement by statement. Syntax and name errors throw
// DslError; axiom violations are recorded on the Kb with their location and loading
// continues.
Scene load(const SceneDocument& doc);
Scene load_file(const std::string& path);

// Resolves argument expressions against kb, creating the terms they denote.
Literal resolve_literal(Kb& kb, const LiteralExpr& lit);
EntityId resolve_entity(Kb& kb, const Expr& e);
IndId resolve_individual(Kb& kb, const Expr& e);
DirId resolve_direction(Kb& kb, const Expr& e);

Attributes parse_attributes(const std::vector<AttrEntry>& entries);

}  // namespace topos::dsl
