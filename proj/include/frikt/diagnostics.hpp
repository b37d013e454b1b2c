#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace frikt {

// Byte offset plus 1-based line/column, tracked through every frontend stage
// so that all rejections are positioned.
struct SourcePos {
    std::size_t offset = 0;
    std::uint32_t line = 1;
    std::uint32_t column = 1;
};

struct Span {
    SourcePos begin;
    SourcePos end;
};

enum class DiagKind {
    LexError,
    ParseError,
    UnsupportedConstruct,
    NameError,
    TypeError,
    LoweringError,
};

const char* diag_kind_name(DiagKind kind);

struct Diagnostic {
    DiagKind kind;
    SourcePos pos;
    std::string message;

    std::string render(const std::string& path) const;
};

// Thrown by tokenize/parse/resolve/lower. Every malformed input surfaces as
// one of these; anything else escaping the frontend is a bug.
class CompileError : public std::runtime_error {
public:
    explicit CompileError(Diagnostic diag)
        : std::runtime_error(diag.render("")), diag_(std::move(diag)) {}

    const Diagnostic& diag() const { return diag_; }

private:
    Diagnostic diag_;
};

[[noreturn]] inline void fail(DiagKind kind, SourcePos pos, std::string message) {
    throw CompileError(Diagnostic{kind, pos, std::move(message)});
}

// Caller-side misuse (bad arity, wrong argument types) and broken internal
// invariants. Reported outside Outcome by design.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace frikt
