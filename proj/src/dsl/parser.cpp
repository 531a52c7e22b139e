#include "topos/dsl/parser.hpp"

#include <fstream>
#include <sstream>

#include "topos/dsl/lexer.hpp"
#include "topos/meronymy.hpp"

namespace topos::dsl {

std::string_view stmt_keyword(StmtKind k) {
    switch (k) {
    case StmtKind::Entity: return "entity";
    case StmtKind::Direction: return "direction";
    case StmtKind::Assert: return "assert";
    case StmtKind::Assume: return "assume";
    case StmtKind::DirFact: return "dirfact";
    case StmtKind::Part: return "part";
    case StmtKind::Query: return "query";
    case StmtKind::Option: return "option";
    }
    return "?";
}

namespace {

class Parser {
public:
    Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    SceneDocument document() {
        SceneDocument doc;
        while (!at(Tok::End)) doc.stmts.push_back(statement());
        return doc;
    }

    LiteralExpr lone_literal() {
        auto lit = literal();
        accept(Tok::Semi);
        expect(Tok::End);
        return lit;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { throw DslError(peek().loc, msg); }

    Token expect(Tok k) {
        if (!at(k))
            fail("expected " + std::string(tok_name(k)) + ", found " +
                 (at(Tok::End) ? std::string("end of input") : "'" + peek().text + "'"));
        return next();
    }
    bool accept(Tok k) {
        if (!at(k)) return false;
        next();
        return true;
    }
    std::string ident(const char* what) {
        if (!at(Tok::Ident)) fail(std::string("expected ") + what);
        return next().text;
    }

    Stmt statement() {
        Stmt s;
        s.loc = peek().loc;
        std::string kw = ident("a statement keyword");
        if (kw == "entity") {
            s.kind = StmtKind::Entity;
            s.names.push_back(ident("an entity name"));
            expect(Tok::Colon);
            auto cl = peek();
            s.cls = ident("an entity class");
            if (!parse_class(s.cls) || s.cls == "Plural")
                throw DslError(cl.loc, "unknown entity class '" + s.cls + "' (Obj, Mat, Subst, Loc, Sp-port)");
            if (at_word("attrs")) {
                next();
                s.has_attrs = true;
                s.attrs = attrs();
            }
        } else if (kw == "direction") {
            s.kind = StmtKind::Direction;
            s.names.push_back(ident("a direction name"));
            while (accept(Tok::Comma)) s.names.push_back(ident("a direction name"));
        } else if (kw == "assert" || kw == "assume" || kw == "dirfact" || kw == "part" || kw == "query") {
            s.kind = kw == "assert"    ? StmtKind::Assert
                     : kw == "assume"  ? StmtKind::Assume
                     : kw == "dirfact" ? StmtKind::DirFact
                     : kw == "part"    ? StmtKind::Part
                                       : StmtKind::Query;
            s.lit = literal();
            check_kind(s);
            if (s.kind == StmtKind::Query && at_word("expect")) {
                next();
                auto vt = peek();
                std::string v = ident("a verdict");
                if (!parse_status(v)) throw DslError(vt.loc, "unknown verdict '" + v + "' (entailed, refuted, unknown)");
                s.expect = v;
            }
        } else if (kw == "option") {
            s.kind = StmtKind::Option;
            s.names.push_back(ident("an option name"));
            if (accept(Tok::Equal)) {
                if (at(Tok::String)) s.value = next().text;
                else s.value = ident("an option value");
            }
        } else {
            throw DslError(s.loc, "unknown statement '" + kw + "'");
        }
        expect(Tok::Semi);
        return s;
    }

    void check_kind(const Stmt& s) const {
        const auto& lit = s.lit;
        if (s.kind == StmtKind::Part) {
            auto r = find_rel(lit.rel);
            if (!r || !kind_of(*r)) throw DslError(lit.loc, "part expects a meronymy kind, got '" + lit.rel + "'");
            if (!lit.positive) throw DslError(lit.loc, "part statements cannot be negated");
        }
        if (s.kind == StmtKind::DirFact) {
            const auto& sig = rel_info(*find_rel(lit.rel)).sig;
            for (Sort so : sig)
                if (so != Sort::Direction) throw DslError(lit.loc, "dirfact expects a direction relation, got '" + lit.rel + "'");
        }
    }

    std::vector<AttrEntry> attrs() {
        std::vector<AttrEntry> out;
        expect(Tok::LBrace);
        if (accept(Tok::RBrace)) return out;
        do {
            AttrEntry a;
            a.loc = peek().loc;
            a.key = ident("an attribute name");
            if (accept(Tok::Colon)) a.value = ident("an attribute value");
            out.push_back(std::move(a));
        } while (accept(Tok::Comma));
        expect(Tok::RBrace);
        return out;
    }

    LiteralExpr literal() {
        LiteralExpr lit;
        lit.loc = peek().loc;
        if (at_word("not")) {
            next();
            lit.positive = false;
        }
        auto rt = peek();
        lit.rel = ident("a relation name");
        auto r = find_rel(lit.rel);
        if (!r) throw DslError(rt.loc, "unknown relation '" + lit.rel + "'");
        expect(Tok::LParen);
        if (!at(Tok::RParen)) {
            lit.args.push_back(expr());
            while (accept(Tok::Comma)) lit.args.push_back(expr());
        }
        expect(Tok::RParen);
        size_t want = size_t(arity(*r)) + (*r == Rel::Allen ? 1 : 0);
        if (lit.args.size() != want)
            throw DslError(rt.loc, lit.rel + " expects " + std::to_string(want) + " argument" + (want == 1 ? "" : "s") +
                                       ", got " + std::to_string(lit.args.size()));
        for (size_t i = 0; i < lit.args.size(); ++i) {
            bool set = lit.args[i].kind == Expr::Kind::Set;
            bool want_set = *r == Rel::Allen && i == 3;
            if (set != want_set)
                throw DslError(lit.args[i].loc, want_set ? "Allen expects a relation set {..} as 4th argument"
                                                         : "relation set not allowed here");
        }
        return lit;
    }

    Expr expr() {
        Expr e;
        e.loc = peek().loc;
        if (accept(Tok::LBrace)) {
            e.kind = Expr::Kind::Set;
            if (!at(Tok::RBrace)) {
                do e.items.push_back(allen_item());
                while (accept(Tok::Comma));
            }
            expect(Tok::RBrace);
            return e;
        }
        e.head = ident("an argument");
        if (accept(Tok::LParen)) {
            e.kind = Expr::Kind::Call;
            if (!at(Tok::RParen)) {
                e.args.push_back(expr());
                while (accept(Tok::Comma)) e.args.push_back(expr());
            }
            expect(Tok::RParen);
        }
        return e;
    }

    std::string allen_item() {
        auto t = peek();
        if (at(Tok::Less) || at(Tok::Greater) || at(Tok::Equal) || at(Tok::Ident)) next();
        else fail("expected an Allen relation");
        if (!parse_allen_rel(t.text)) throw DslError(t.loc, "unknown Allen relation '" + t.text + "'");
        return t.text;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

SceneDocument parse(std::string_view text, const std::string& file) {
    Parser p(lex(text, file));
    auto doc = p.document();
    doc.file = file;
    return doc;
}

SceneDocument parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DslError({path, 0, 0}, "cannot open scene file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

LiteralExpr parse_literal(std::string_view text, const std::string& file) {
    Parser p(lex(text, file));
    return p.lone_literal();
}

}  // namespace topos::dsl
