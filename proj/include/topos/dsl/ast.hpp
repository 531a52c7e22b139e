#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topos/engine.hpp"

namespace topos::dsl {

// Argument expression. Sorts are resolved by the loader from the relation signature.
struct Expr {
    enum class Kind : uint8_t { Name, Call, Set };
    Kind kind = Kind::Name;
    std::string head;         // name, function, or empty for sets
    std::vector<Expr> args;   // call arguments
    std::vector<std::string> items;  // Allen set members
    SourceLoc loc;

    bool operator==(const Expr& o) const {
        return kind == o.kind && head == o.head && args == o.args && items == o.items;
    }
};

struct AttrEntry {
    std::string key;
    std::optional<std::string> value;
    SourceLoc loc;
    bool operator==(const AttrEntry& o) const { return key == o.key && value == o.value; }
};

struct LiteralExpr {
    std::string rel;
    bool positive = true;
    std::vector<Expr> args;
    SourceLoc loc;
    bool operator==(const LiteralExpr& o) const {
        return rel == o.rel && positive == o.positive && args == o.args;
    }
};

enum class StmtKind : uint8_t { Entity, Direction, Assert, Assume, DirFact, Part, Query, Option };

struct Stmt {
    StmtKind kind = StmtKind::Assert;
    SourceLoc loc;
    // Entity / Direction / Option
    std::vector<std::string> names;
    std::string cls;
    std::vector<AttrEntry> attrs;
    bool has_attrs = false;
    std::optional<std::string> value;  // option value
    // Assert / Assume / DirFact / Part / Query
    LiteralExpr lit;
    std::optional<std::string> expect;

    bool operator==(const Stmt& o) const {
        return kind == o.kind && names == o.names && cls == o.cls && attrs == o.attrs &&
               has_attrs == o.has_attrs && value == o.value && lit == o.lit && expect == o.expect;
    }
};

struct SceneDocument {
    std::string file;
    std::vector<Stmt> stmts;
    bool operator==(const SceneDocument& o) const { return stmts == o.stmts; }
};

// Syntax and resolution errors; what() includes "file:line:col".
class DslError : public KbError {
public:
    DslError(const SourceLoc& loc, const std::string& msg) : KbError(loc.str() + ": " + msg), loc_(loc) {}
    const SourceLoc& loc() const { return loc_; }

private:
    SourceLoc loc_;
};

std::string_view stmt_keyword(StmtKind k);

}  // namespace topos::dsl
