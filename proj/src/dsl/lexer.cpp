#include "topos/dsl/lexer.hpp"

namespace topos::dsl {

std::string_view tok_name(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::String: return "string";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Equal: return "'='";
    case Tok::Less: return "'<'";
    case Tok::Greater: return "'>'";
    case Tok::End: return "end of input";
    }
    return "?";
}

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return ident_start(c) || std::isdigit(c) || c == '-' || c == '\''; }

}  // namespace

std::vector<Token> lex(std::string_view text, const std::string& file) {
    std::vector<Token> out;
    size_t i = 0;
    int line = 1, col = 1;
    auto adv = [&] {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
            ++col;  // count code points, not bytes
        }
        ++i;
    };
    while (i < text.size()) {
        unsigned char c = text[i];
        if (std::isspace(c)) {
            adv();
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
            while (i < text.size() && text[i] != '\n') adv();
            continue;
        }
        Token t;
        t.loc = {file, line, col};
        if (ident_start(c) || std::isdigit(c)) {
            size_t b = i;
            while (i < text.size() && ident_char(static_cast<unsigned char>(text[i]))) adv();
            t.kind = Tok::Ident;
            t.text = std::string(text.substr(b, i - b));
        } else if (c == '"') {
            adv();
            while (i < text.size() && text[i] != '"') {
                if (text[i] == '\n') throw DslError(t.loc, "unterminated string");
                if (text[i] == '\\' && i + 1 < text.size()) adv();
                t.text += text[i];
                adv();
            }
            if (i >= text.size()) throw DslError(t.loc, "unterminated string");
            adv();
            t.kind = Tok::String;
        } else {
            switch (c) {
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            case '{': t.kind = Tok::LBrace; break;
            case '}': t.kind = Tok::RBrace; break;
            case ',': t.kind = Tok::Comma; break;
            case ';': t.kind = Tok::Semi; break;
            case ':': t.kind = Tok::Colon; break;
            case '=': t.kind = Tok::Equal; break;
            case '<': t.kind = Tok::Less; break;
            case '>': t.kind = Tok::Greater; break;
            default: throw DslError(t.loc, std::string("unexpected character '") + char(c) + "'");
            }
            t.text = std::string(1, char(c));
            adv();
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.loc = {file, line, col};
    out.push_back(end);
    return out;
}

}  // namespace topos::dsl
