#include "topos/dsl/printer.hpp"

#include <cctype>

namespace topos::dsl {

namespace {

bool plain_ident(const std::string& s) {
    if (s.empty()) return false;
    auto c0 = static_cast<unsigned char>(s[0]);
    if (!(std::isalnum(c0) || c0 == '_' || c0 >= 0x80)) return false;
    for (unsigned char c : s)
        if (!(std::isalnum(c) || c == '_' || c == '-' || c == '\'' || c >= 0x80)) return false;
    return true;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string print_expr(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Name: return e.head;
    case Expr::Kind::Set: {
        std::string out = "{";
        for (size_t i = 0; i < e.items.size(); ++i) out += (i ? ", " : "") + e.items[i];
        return out + "}";
    }
    case Expr::Kind::Call: {
        std::string out = e.head + "(";
        for (size_t i = 0; i < e.args.size(); ++i) out += (i ? ", " : "") + print_expr(e.args[i]);
        return out + ")";
    }
    }
    return {};
}

std::string print_literal(const LiteralExpr& lit) {
    std::string out = lit.positive ? "" : "not ";
    out += lit.rel + "(";
    for (size_t i = 0; i < lit.args.size(); ++i) out += (i ? ", " : "") + print_expr(lit.args[i]);
    return out + ")";
}

std::string print_stmt(const Stmt& s) {
    std::string out(stmt_keyword(s.kind));
    switch (s.kind) {
    case StmtKind::Entity:
        out += " " + s.names.at(0) + " : " + s.cls;
        if (s.has_attrs) {
            out += " attrs {";
            for (size_t i = 0; i < s.attrs.size(); ++i) {
                out += (i ? ", " : "") + s.attrs[i].key;
                if (s.attrs[i].value) out += ":" + *s.attrs[i].value;
            }
            out += "}";
        }
        break;
    case StmtKind::Direction:
        for (size_t i = 0; i < s.names.size(); ++i) out += (i ? ", " : " ") + s.names[i];
        break;
    case StmtKind::Option:
        out += " " + s.names.at(0);
        if (s.value) out += " = " + (plain_ident(*s.value) ? *s.value : quoted(*s.value));
        break;
    default:
        out += " " + print_literal(s.lit);
        if (s.expect) out += " expect " + *s.expect;
        break;
    }
    return out + ";";
}

std::string print(const SceneDocument& doc) {
    std::string out;
    for (const auto& s : doc.stmts) out += print_stmt(s) + "\n";
    return out;
}

}  // namespace topos::dsl
