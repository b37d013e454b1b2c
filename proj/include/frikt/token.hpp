#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frikt/diagnostics.hpp"

namespace frikt {

enum class TokKind {
    // keywords
    KwPub,
    KwFn,
    KwLet,
    KwFor,
    KwIn,
    KwIf,
    KwElse,
    KwMatch,
    KwAs,
    KwNone,
    KwSome,
    KwTrue,
    KwFalse,
    // recognized-but-unsupported keywords; the parser rejects them with a
    // dedicated diagnostic instead of a generic parse error
    KwUnsupported,

    Ident,
    IntLit,

    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Lt,
    Gt,
    Comma,
    Semi,
    Colon,
    Dot,
    DotDot,
    Arrow,     // ->
    FatArrow,  // =>
    Assign,    // =
    EqEq,
    Le,
    Shl,
    Shr,
    Plus,
    Minus,
    Star,
    Percent,
    Amp,
    Pipe,
    Caret,

    Eof,
};

const char* tok_kind_name(TokKind kind);

struct Token {
    TokKind kind;
    std::string text;        // identifier / keyword / literal spelling
    std::uint64_t int_value = 0;  // valid when kind == IntLit
    SourcePos pos;
};

// Lex a whole source buffer. Comments (`//` and `/* */`) and whitespace are
// dropped. Throws CompileError(LexError) on any byte outside the grammar and
// on integer literals that do not fit in 64 bits.
std::vector<Token> tokenize(const std::string& text);

}  // namespace frikt
