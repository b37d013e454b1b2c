#include "frikt/token.hpp"

#include <cctype>
#include <unordered_map>

namespace frikt {

const char* diag_kind_name(DiagKind kind) {
    switch (kind) {
        case DiagKind::LexError: return "lex error";
        case DiagKind::ParseError: return "parse error";
        case DiagKind::UnsupportedConstruct: return "unsupported construct";
        case DiagKind::NameError: return "name error";
        case DiagKind::TypeError: return "type error";
        case DiagKind::LoweringError: return "lowering error";
    }
    return "error";
}

std::string Diagnostic::render(const std::string& path) const {
    std::string where = path.empty() ? "<input>" : path;
    return where + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) +
           ": " + diag_kind_name(kind) + ": " + message;
}

const char* tok_kind_name(TokKind kind) {
    switch (kind) {
        case TokKind::KwPub: return "'pub'";
        case TokKind::KwFn: return "'fn'";
        case TokKind::KwLet: return "'let'";
        case TokKind::KwFor: return "'for'";
        case TokKind::KwIn: return "'in'";
        case TokKind::KwIf: return "'if'";
        case TokKind::KwElse: return "'else'";
        case TokKind::KwMatch: return "'match'";
        case TokKind::KwAs: return "'as'";
        case TokKind::KwNone: return "'None'";
        case TokKind::KwSome: return "'Some'";
        case TokKind::KwTrue: return "'true'";
        case TokKind::KwFalse: return "'false'";
        case TokKind::KwUnsupported: return "unsupported keyword";
        case TokKind::Ident: return "identifier";
        case TokKind::IntLit: return "integer literal";
        case TokKind::LParen: return "'('";
        case TokKind::RParen: return "')'";
        case TokKind::LBrace: return "'{'";
        case TokKind::RBrace: return "'}'";
        case TokKind::LBracket: return "'['";
        case TokKind::RBracket: return "']'";
        case TokKind::Lt: return "'<'";
        case TokKind::Gt: return "'>'";
        case TokKind::Comma: return "','";
        case TokKind::Semi: return "';'";
        case TokKind::Colon: return "':'";
        case TokKind::Dot: return "'.'";
        case TokKind::DotDot: return "'..'";
        case TokKind::Arrow: return "'->'";
        case TokKind::FatArrow: return "'=>'";
        case TokKind::Assign: return "'='";
        case TokKind::EqEq: return "'=='";
        case TokKind::Le: return "'<='";
        case TokKind::Shl: return "'<<'";
        case TokKind::Shr: return "'>>'";
        case TokKind::Plus: return "'+'";
        case TokKind::Minus: return "'-'";
        case TokKind::Star: return "'*'";
        case TokKind::Percent: return "'%'";
        case TokKind::Amp: return "'&'";
        case TokKind::Pipe: return "'|'";
        case TokKind::Caret: return "'^'";
        case TokKind::Eof: return "end of input";
    }
    return "token";
}

namespace {

const std::unordered_map<std::string, TokKind>& keyword_table() {
    static const std::unordered_map<std::string, TokKind> table = {
        {"pub", TokKind::KwPub},     {"fn", TokKind::KwFn},
        {"let", TokKind::KwLet},     {"for", TokKind::KwFor},
        {"in", TokKind::KwIn},       {"if", TokKind::KwIf},
        {"else", TokKind::KwElse},   {"match", TokKind::KwMatch},
        {"as", TokKind::KwAs},       {"None", TokKind::KwNone},
        {"Some", TokKind::KwSome},   {"true", TokKind::KwTrue},
        {"false", TokKind::KwFalse},
        // recognized Rust keywords outside the fragment
        {"while", TokKind::KwUnsupported},
        {"loop", TokKind::KwUnsupported},
        {"mut", TokKind::KwUnsupported},
        {"return", TokKind::KwUnsupported},
        {"struct", TokKind::KwUnsupported},
        {"enum", TokKind::KwUnsupported},
        {"impl", TokKind::KwUnsupported},
        {"trait", TokKind::KwUnsupported},
        {"where", TokKind::KwUnsupported},
        {"ref", TokKind::KwUnsupported},
        {"move", TokKind::KwUnsupported},
        {"break", TokKind::KwUnsupported},
        {"continue", TokKind::KwUnsupported},
        {"unsafe", TokKind::KwUnsupported},
    };
    return table;
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_trivia();
            if (at_end()) break;
            out.push_back(next_token());
        }
        out.push_back(Token{TokKind::Eof, "", 0, pos_});
        return out;
    }

private:
    bool at_end() const { return pos_.offset >= text_.size(); }

    char peek(std::size_t ahead = 0) const {
        std::size_t i = pos_.offset + ahead;
        return i < text_.size() ? text_[i] : '\0';
    }

    void advance() {
        if (at_end()) return;
        if (text_[pos_.offset] == '\n') {
            pos_.line++;
            pos_.column = 1;
        } else {
            pos_.column++;
        }
        pos_.offset++;
    }

    void skip_trivia() {
        for (;;) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n') advance();
            } else if (c == '/' && peek(1) == '*') {
                SourcePos open = pos_;
                advance();
                advance();
                while (!(peek() == '*' && peek(1) == '/')) {
                    if (at_end()) fail(DiagKind::LexError, open, "unterminated block comment");
                    advance();
                }
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    Token make(TokKind kind, SourcePos at, std::string text) {
        return Token{kind, std::move(text), 0, at};
    }

    Token next_token() {
        SourcePos at = pos_;
        char c = peek();

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident_or_keyword();
        if (std::isdigit(static_cast<unsigned char>(c))) return int_literal();

        auto two = [&](char a, char b) { return c == a && peek(1) == b; };

        if (two('-', '>')) { advance(); advance(); return make(TokKind::Arrow, at, "->"); }
        if (two('=', '>')) { advance(); advance(); return make(TokKind::FatArrow, at, "=>"); }
        if (two('=', '=')) { advance(); advance(); return make(TokKind::EqEq, at, "=="); }
        if (two('<', '<')) { advance(); advance(); return make(TokKind::Shl, at, "<<"); }
        if (two('<', '=')) { advance(); advance(); return make(TokKind::Le, at, "<="); }
        if (two('>', '>')) { advance(); advance(); return make(TokKind::Shr, at, ">>"); }
        if (two('.', '.')) { advance(); advance(); return make(TokKind::DotDot, at, ".."); }

        TokKind kind;
        switch (c) {
            case '(': kind = TokKind::LParen; break;
            case ')': kind = TokKind::RParen; break;
            case '{': kind = TokKind::LBrace; break;
            case '}': kind = TokKind::RBrace; break;
            case '[': kind = TokKind::LBracket; break;
            case ']': kind = TokKind::RBracket; break;
            case '<': kind = TokKind::Lt; break;
            case '>': kind = TokKind::Gt; break;
            case ',': kind = TokKind::Comma; break;
            case ';': kind = TokKind::Semi; break;
            case ':': kind = TokKind::Colon; break;
            case '.': kind = TokKind::Dot; break;
            case '=': kind = TokKind::Assign; break;
            case '+': kind = TokKind::Plus; break;
            case '-': kind = TokKind::Minus; break;
            case '*': kind = TokKind::Star; break;
            case '%': kind = TokKind::Percent; break;
            case '&': kind = TokKind::Amp; break;
            case '|': kind = TokKind::Pipe; break;
            case '^': kind = TokKind::Caret; break;
            default:
                fail(DiagKind::LexError, at,
                     std::string("unexpected character '") + c + "'");
        }
        advance();
        return make(kind, at, std::string(1, c));
    }

    Token ident_or_keyword() {
        SourcePos at = pos_;
        std::string word;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
            word.push_back(peek());
            advance();
        }
        auto it = keyword_table().find(word);
        if (it != keyword_table().end()) {
            return Token{it->second, word, 0, at};
        }
        return Token{TokKind::Ident, word, 0, at};
    }

    Token int_literal() {
        SourcePos at = pos_;
        std::string digits;
        std::uint64_t value = 0;
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
            digits = "0x";
            advance();
            advance();
            bool any = false;
            while (std::isxdigit(static_cast<unsigned char>(peek()))) {
                char d = peek();
                std::uint64_t nib = std::isdigit(static_cast<unsigned char>(d))
                                        ? std::uint64_t(d - '0')
                                        : std::uint64_t(std::tolower(d) - 'a' + 10);
                if (value > (~std::uint64_t(0)) >> 4) {
                    fail(DiagKind::LexError, at, "integer literal does not fit in 64 bits");
                }
                value = (value << 4) | nib;
                digits.push_back(d);
                advance();
                any = true;
            }
            if (!any) fail(DiagKind::LexError, at, "hex literal needs at least one digit");
        } else {
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::uint64_t d = std::uint64_t(peek() - '0');
                if (value > ((~std::uint64_t(0)) - d) / 10) {
                    fail(DiagKind::LexError, at, "integer literal does not fit in 64 bits");
                }
                value = value * 10 + d;
                digits.push_back(peek());
                advance();
            }
        }
        // no literal suffixes in the fragment (`1u64` etc.)
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            fail(DiagKind::LexError, pos_, "integer literal suffixes are not supported");
        }
        Token tok{TokKind::IntLit, digits, value, at};
        return tok;
    }

    const std::string& text_;
    SourcePos pos_;
};

}  // namespace

std::vector<Token> tokenize(const std::string& text) { return Lexer(text).run(); }

}  // namespace frikt
