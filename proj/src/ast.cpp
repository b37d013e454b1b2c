#include "frikt/ast.hpp"

namespace frikt {

const char* type_name(TypeAnnot t) {
    switch (t) {
        case TypeAnnot::U32: return "u32";
        case TypeAnnot::U64: return "u64";
        case TypeAnnot::Bool: return "bool";
        case TypeAnnot::OptionU64: return "Option<usize>";
        case TypeAnnot::ArrayU64: return "&[u64]";
    }
    return "?";
}

bool is_numeric(TypeAnnot t) { return t == TypeAnnot::U32 || t == TypeAnnot::U64; }

const char* binop_symbol(BinOpKind op) {
    switch (op) {
        case BinOpKind::Add: return "+";
        case BinOpKind::Sub: return "-";
        case BinOpKind::Mul: return "*";
        case BinOpKind::Rem: return "%";
        case BinOpKind::Shl: return "<<";
        case BinOpKind::Shr: return ">>";
        case BinOpKind::BitAnd: return "&";
        case BinOpKind::BitOr: return "|";
        case BinOpKind::BitXor: return "^";
        case BinOpKind::Lt: return "<";
        case BinOpKind::Le: return "<=";
        case BinOpKind::Eq: return "==";
    }
    return "?";
}

bool is_comparison(BinOpKind op) {
    return op == BinOpKind::Lt || op == BinOpKind::Le || op == BinOpKind::Eq;
}

AstPtr make_expr(AstNode node, Span span) {
    auto e = std::make_unique<AstExpr>();
    e->node = std::move(node);
    e->span = span;
    return e;
}

const FnDecl* SourceUnit::find(const std::string& name) const {
    for (const auto& f : functions) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

namespace {

bool eq(const AstPtr& a, const AstPtr& b) {
    if (!a || !b) return !a && !b;
    return ast_equal(*a, *b);
}

}  // namespace

bool ast_equal(const AstExpr& a, const AstExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, IntLit>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<T, BoolLit>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<T, NoneLit>) {
                return true;
            } else if constexpr (std::is_same_v<T, SomeCtor>) {
                return eq(x.inner, y.inner);
            } else if constexpr (std::is_same_v<T, VarRef>) {
                return x.name == y.name;
            } else if constexpr (std::is_same_v<T, LetExpr>) {
                return x.name == y.name && eq(x.rhs, y.rhs) && eq(x.body, y.body);
            } else if constexpr (std::is_same_v<T, BinExpr>) {
                return x.op == y.op && eq(x.lhs, y.lhs) && eq(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<T, CastExpr>) {
                return x.target == y.target && eq(x.inner, y.inner);
            } else if constexpr (std::is_same_v<T, IfExpr>) {
                return eq(x.cond, y.cond) && eq(x.then_arm, y.then_arm) &&
                       eq(x.else_arm, y.else_arm);
            } else if constexpr (std::is_same_v<T, MatchOptExpr>) {
                return eq(x.scrutinee, y.scrutinee) && eq(x.none_arm, y.none_arm) &&
                       x.binder == y.binder && eq(x.some_arm, y.some_arm);
            } else if constexpr (std::is_same_v<T, IndexExpr>) {
                return x.array == y.array && eq(x.index, y.index);
            } else if constexpr (std::is_same_v<T, LenExpr>) {
                return x.array == y.array;
            } else if constexpr (std::is_same_v<T, CallExpr>) {
                if (x.callee != y.callee || x.args.size() != y.args.size()) return false;
                for (std::size_t i = 0; i < x.args.size(); ++i) {
                    if (!eq(x.args[i], y.args[i])) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, ForExpr>) {
                return x.binder == y.binder && eq(x.lo, y.lo) && eq(x.hi, y.hi) &&
                       x.accum == y.accum && eq(x.init, y.init) && eq(x.body, y.body);
            }
        },
        a.node);
}

bool unit_equal(const SourceUnit& a, const SourceUnit& b) {
    if (a.functions.size() != b.functions.size()) return false;
    for (std::size_t i = 0; i < a.functions.size(); ++i) {
        const FnDecl& fa = a.functions[i];
        const FnDecl& fb = b.functions[i];
        if (fa.name != fb.name || fa.params != fb.params ||
            fa.return_type != fb.return_type || fa.is_pub != fb.is_pub) {
            return false;
        }
        if (!ast_equal(*fa.body, *fb.body)) return false;
    }
    return true;
}

}  // namespace frikt
