#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frikt/diagnostics.hpp"

namespace frikt {

// usize is the same 64-bit type as u64 throughout; the surface spellings
// `usize` and `u64` parse to the same annotation.
enum class TypeAnnot : std::uint8_t { U32, U64, Bool, OptionU64, ArrayU64 };

const char* type_name(TypeAnnot t);
bool is_numeric(TypeAnnot t);

enum class BinOpKind : std::uint8_t {
    Add, Sub, Mul, Rem, Shl, Shr, BitAnd, BitOr, BitXor, Lt, Le, Eq,
};

const char* binop_symbol(BinOpKind op);
bool is_comparison(BinOpKind op);

enum class CastKind : std::uint8_t { Widen, Wrap };

struct AstExpr;
using AstPtr = std::unique_ptr<AstExpr>;

struct IntLit {
    std::uint64_t value;
    bool hex = false;  // spelling only
};
struct BoolLit {
    bool value;
};
struct NoneLit {};
struct SomeCtor {
    AstPtr inner;
};
struct VarRef {
    std::string name;
};
struct LetExpr {
    std::string name;
    AstPtr rhs;
    AstPtr body;
};
struct BinExpr {
    BinOpKind op;
    AstPtr lhs;
    AstPtr rhs;
};
struct CastExpr {
    TypeAnnot target;
    // Widen vs Wrap is decided by resolve once the inner type is known.
    std::optional<CastKind> kind;
    AstPtr inner;
};
struct IfExpr {
    AstPtr cond;
    AstPtr then_arm;
    AstPtr else_arm;
};
struct MatchOptExpr {
    AstPtr scrutinee;
    AstPtr none_arm;
    std::string binder;
    AstPtr some_arm;
};
struct IndexExpr {
    std::string array;
    AstPtr index;
};
struct LenExpr {
    std::string array;
};
struct CallExpr {
    std::string callee;
    std::vector<AstPtr> args;
};
// Desugared `for binder in lo..hi { accum = body; }`. The parser always sets
// init to VarRef(accum): the loop starts from the accumulator's current
// binding, and the whole statement rebinds accum to the loop's result.
struct ForExpr {
    std::string binder;
    AstPtr lo;
    AstPtr hi;
    std::string accum;
    AstPtr init;
    AstPtr body;
};

using AstNode = std::variant<IntLit, BoolLit, NoneLit, SomeCtor, VarRef, LetExpr, BinExpr,
                             CastExpr, IfExpr, MatchOptExpr, IndexExpr, LenExpr, CallExpr,
                             ForExpr>;

struct AstExpr {
    AstNode node;
    Span span;
    std::optional<TypeAnnot> type;  // filled by resolve

    template <typename T>
    const T* get() const {
        return std::get_if<T>(&node);
    }
    template <typename T>
    T* get() {
        return std::get_if<T>(&node);
    }
};

AstPtr make_expr(AstNode node, Span span);

struct FnDecl {
    std::string name;
    std::vector<std::pair<std::string, TypeAnnot>> params;
    TypeAnnot return_type;
    AstPtr body;
    Span span;
    bool is_pub = false;
};

struct SourceUnit {
    std::string path;
    std::string text;
    std::vector<FnDecl> functions;

    const FnDecl* find(const std::string& name) const;
};

// Structural equality, ignoring spans and resolved types. This is the
// equivalence the pretty-print round-trip property is stated against.
bool ast_equal(const AstExpr& a, const AstExpr& b);
bool unit_equal(const SourceUnit& a, const SourceUnit& b);

}  // namespace frikt
