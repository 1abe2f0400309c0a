#ifndef PARADIGM_AST_HPP
#define PARADIGM_AST_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace paradigm::py {

// Homogeneous AST. Every construct is a Node with a kind, an optional value
// string (identifier text, literal spelling, operator spelling) and ordered
// children. Child layouts per kind are documented in docs/ast-format.md and
// frozen: the canonical hash depends on them.
enum class NodeKind : std::uint8_t {
    Module,

    // Statements.
    FunctionDef,   // value=name; [Decorators, Params, ReturnAnnot?, Block]
    ClassDef,      // value=name; [Decorators, Bases, Block]
    Return,        // [expr?]
    Delete,        // [target+]
    Assign,        // [target+, value]  (chained targets flattened)
    AugAssign,     // value=op; [target, value]
    AnnAssign,     // [target, annotation, value?]
    For,           // [target, iter, Block, ElseClause?]
    While,         // [cond, Block, ElseClause?]
    If,            // [IfBranch+, ElseClause?]
    With,          // [WithItem+, Block]
    Raise,         // [exc?, cause?]
    Try,           // [Block, (ExceptClause|ExceptStarClause)*, ElseClause?, FinallyClause?]
    Assert,        // [cond, message?]
    Import,        // [ImportAlias+]
    ImportFrom,    // value=dots+module; [ImportAlias+]
    Global,        // [Name+]
    Nonlocal,      // [Name+]
    ExprStmt,      // [expr]
    Pass,
    Break,
    Continue,
    Match,         // [subject, CaseClause+]

    // Clause and support nodes.
    Block,             // statement list
    IfBranch,          // [cond, Block]
    ElseClause,        // [Block]
    ExceptClause,      // value=capture name or ""; [type?, Block]
    ExceptStarClause,  // same layout as ExceptClause
    FinallyClause,     // [Block]
    WithItem,          // [ctx] or [ctx, target]
    CaseClause,        // [pattern, Guard?, Block]
    Guard,             // [expr]
    Decorators,        // [expr*]
    Bases,             // [expr* , Keyword*]
    Params,            // [(Param|StarParam|DoubleStarParam|StarMarker|SlashMarker)*]
    Param,             // value=name; [Annotation?, Default?]
    StarParam,         // value=name; [Annotation?]
    DoubleStarParam,   // value=name; [Annotation?]
    StarMarker,        // bare * separator
    SlashMarker,       // positional-only / separator
    Annotation,        // [expr]
    Default,           // [expr]
    ReturnAnnot,       // [expr]
    ImportAlias,       // value=dotted name or "*"; [Name asname?]

    // Expressions.
    BoolOp,        // value="and"|"or"; [operand, operand, ...]
    BinOp,         // value=op; [left, right]
    UnaryOp,       // value=op; [operand]
    Lambda,        // [Params, body]
    IfExp,         // [cond, then, else]
    Dict,          // [DictItem*]
    DictItem,      // [key, value] or [DoubleStarred]
    Set,           // [elt+]
    ListExpr,      // [elt*]
    TupleExpr,     // [elt*]
    ListComp,      // [elt, CompFor+]
    SetComp,       // [elt, CompFor+]
    DictComp,      // [key, value, CompFor+]
    GeneratorExp,  // [elt, CompFor+]
    CompFor,       // [target, iter, CompIf*]
    CompIf,        // [cond]
    Await,         // [expr]
    Yield,         // [expr?]
    YieldFrom,     // [expr]
    Compare,       // [left, CompareOp+]
    CompareOp,     // value=op ("<", "in", "not in", "is not", ...); [right]
    Call,          // [callee, (expr|Starred|DoubleStarred|Keyword)*]
    Keyword,       // value=name; [expr]
    Starred,       // [expr]
    DoubleStarred, // [expr]
    Number,        // value=literal text
    String,        // value=literal text incl. prefix and quotes
    Bytes,         // value=literal text
    FString,       // [(FStringText|FormattedValue)*]
    FStringText,   // value=raw text chunk
    FormattedValue,// value=conversion ("r"/"s"/"a"/""); [expr, FormatSpec?]
    FormatSpec,    // [(FStringText|FormattedValue)*]
    ImplicitConcat,// [literal piece+]  adjacent string/bytes/f-string literals
    NameConst,     // value="True"|"False"|"None"
    EllipsisLit,
    Attribute,     // value=attr name; [object]
    Subscript,     // [object, index]
    Slice,         // [lower|Empty, upper|Empty, step|Empty]
    Empty,         // omitted slice part
    Name,          // value=identifier
    NamedExpr,     // [target, value]
};

std::string_view node_kind_name(NodeKind kind);

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
    NodeKind kind;
    std::string value;
    bool is_async = false;
    int line = 0;
    int col = 0;
    std::vector<NodePtr> children;
    Node* parent = nullptr; // non-owning, set by SyntaxTree::finalize

    Node(NodeKind k, int ln = 0, int cl = 0) : kind(k), line(ln), col(cl) {}

    Node* add(NodePtr child) {
        children.push_back(std::move(child));
        return children.back().get();
    }

    const Node& child(std::size_t i) const { return *children[i]; }
    std::size_t child_count() const { return children.size(); }

    /// First child of the given kind, or nullptr.
    const Node* find_child(NodeKind k) const {
        for (const auto& c : children)
            if (c->kind == k)
                return c.get();
        return nullptr;
    }
};

bool is_statement_kind(NodeKind kind);

inline NodePtr make_node(NodeKind kind, int line = 0, int col = 0) {
    return std::make_unique<Node>(kind, line, col);
}

/// A parsed module: the Module root plus parent links for scope walks.
class SyntaxTree {
public:
    SyntaxTree() = default;
    explicit SyntaxTree(NodePtr root) : root_(std::move(root)) { finalize(); }

    SyntaxTree(SyntaxTree&&) = default;
    SyntaxTree& operator=(SyntaxTree&&) = default;

    const Node& root() const { return *root_; }
    bool valid() const { return root_ != nullptr; }

    /// All statement nodes in source order (pre-order walk).
    std::vector<const Node*> statements() const;

    /// Number of statement nodes; compound headers count once, clause
    /// headers (elif/else/except/finally/case) add nothing.
    std::size_t statement_count() const { return statements().size(); }

private:
    void finalize();
    NodePtr root_;
};

/// Visit every node in pre-order. Visitor returns false to skip a subtree.
template <typename Fn>
void walk(const Node& node, Fn&& fn) {
    if (!fn(node))
        return;
    for (const auto& child : node.children)
        walk(*child, fn);
}

} // namespace paradigm::py

#endif // PARADIGM_AST_HPP
