#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "topos/dsl/ast.hpp"

namespace topos::dsl {

enum class Tok : uint8_t { Ident, String, LParen, RParen, LBrace, RBrace, Comma, Semi, Colon, Equal, Less, Greater, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceLoc loc;
};

std::string_view tok_name(Tok t);

// Identifiers admit letters, digits, '_', '-', '\'' and any non-ASCII byte, so
// accented names and hyphenated relation names lex as single tokens.
std::vector<Token> lex(std::string_view text, const std::string& file = {});

}  // namespace topos::dsl
