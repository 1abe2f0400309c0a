#include "paradigm/ast.hpp"

namespace paradigm::py {

std::string_view node_kind_name(NodeKind kind) {
    switch (kind) {
    case NodeKind::Module: return "Module";
    case NodeKind::FunctionDef: return "FunctionDef";
    case NodeKind::ClassDef: return "ClassDef";
    case NodeKind::Return: return "Return";
    case NodeKind::Delete: return "Delete";
    case NodeKind::Assign: return "Assign";
    case NodeKind::AugAssign: return "AugAssign";
    case NodeKind::AnnAssign: return "AnnAssign";
    case NodeKind::For: return "For";
    case NodeKind::While: return "While";
    case NodeKind::If: return "If";
    case NodeKind::With: return "With";
    case NodeKind::Raise: return "Raise";
    case NodeKind::Try: return "Try";
    case NodeKind::Assert: return "Assert";
    case NodeKind::Import: return "Import";
    case NodeKind::ImportFrom: return "ImportFrom";
    case NodeKind::Global: return "Global";
    case NodeKind::Nonlocal: return "Nonlocal";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::Pass: return "Pass";
    case NodeKind::Break: return "Break";
    case NodeKind::Continue: return "Continue";
    case NodeKind::Match: return "Match";
    case NodeKind::Block: return "Block";
    case NodeKind::IfBranch: return "IfBranch";
    case NodeKind::ElseClause: return "ElseClause";
    case NodeKind::ExceptClause: return "ExceptClause";
    case NodeKind::ExceptStarClause: return "ExceptStarClause";
    case NodeKind::FinallyClause: return "FinallyClause";
    case NodeKind::WithItem: return "WithItem";
    case NodeKind::CaseClause: return "CaseClause";
    case NodeKind::Guard: return "Guard";
    case NodeKind::Decorators: return "Decorators";
    case NodeKind::Bases: return "Bases";
    case NodeKind::Params: return "Params";
    case NodeKind::Param: return "Param";
    case NodeKind::StarParam: return "StarParam";
    case NodeKind::DoubleStarParam: return "DoubleStarParam";
    case NodeKind::StarMarker: return "StarMarker";
    case NodeKind::SlashMarker: return "SlashMarker";
    case NodeKind::Annotation: return "Annotation";
    case NodeKind::Default: return "Default";
    case NodeKind::ReturnAnnot: return "ReturnAnnot";
    case NodeKind::ImportAlias: return "ImportAlias";
    case NodeKind::BoolOp: return "BoolOp";
    case NodeKind::BinOp: return "BinOp";
    case NodeKind::UnaryOp: return "UnaryOp";
    case NodeKind::Lambda: return "Lambda";
    case NodeKind::IfExp: return "IfExp";
    case NodeKind::Dict: return "Dict";
    case NodeKind::DictItem: return "DictItem";
    case NodeKind::Set: return "Set";
    case NodeKind::ListExpr: return "List";
    case NodeKind::TupleExpr: return "Tuple";
    case NodeKind::ListComp: return "ListComp";
    case NodeKind::SetComp: return "SetComp";
    case NodeKind::DictComp: return "DictComp";
    case NodeKind::GeneratorExp: return "GeneratorExp";
    case NodeKind::CompFor: return "CompFor";
    case NodeKind::CompIf: return "CompIf";
    case NodeKind::Await: return "Await";
    case NodeKind::Yield: return "Yield";
    case NodeKind::YieldFrom: return "YieldFrom";
    case NodeKind::Compare: return "Compare";
    case NodeKind::CompareOp: return "CompareOp";
    case NodeKind::Call: return "Call";
    case NodeKind::Keyword: return "Keyword";
    case NodeKind::Starred: return "Starred";
    case NodeKind::DoubleStarred: return "DoubleStarred";
    case NodeKind::Number: return "Number";
    case NodeKind::String: return "String";
    case NodeKind::Bytes: return "Bytes";
    case NodeKind::FString: return "FString";
    case NodeKind::FStringText: return "FStringText";
    case NodeKind::FormattedValue: return "FormattedValue";
    case NodeKind::FormatSpec: return "FormatSpec";
    case NodeKind::ImplicitConcat: return "ImplicitConcat";
    case NodeKind::NameConst: return "NameConst";
    case NodeKind::EllipsisLit: return "Ellipsis";
    case NodeKind::Attribute: return "Attribute";
    case NodeKind::Subscript: return "Subscript";
    case NodeKind::Slice: return "Slice";
    case NodeKind::Empty: return "Empty";
    case NodeKind::Name: return "Name";
    case NodeKind::NamedExpr: return "NamedExpr";
    }
    return "?";
}

bool is_statement_kind(NodeKind kind) {
    switch (kind) {
    case NodeKind::FunctionDef:
    case NodeKind::ClassDef:
    case NodeKind::Return:
    case NodeKind::Delete:
    case NodeKind::Assign:
    case NodeKind::AugAssign:
    case NodeKind::AnnAssign:
    case NodeKind::For:
    case NodeKind::While:
    case NodeKind::If:
    case NodeKind::With:
    case NodeKind::Raise:
    case NodeKind::Try:
    case NodeKind::Assert:
    case NodeKind::Import:
    case NodeKind::ImportFrom:
    case NodeKind::Global:
    case NodeKind::Nonlocal:
    case NodeKind::ExprStmt:
    case NodeKind::Pass:
    case NodeKind::Break:
    case NodeKind::Continue:
    case NodeKind::Match:
        return true;
    default:
        return false;
    }
}

std::vector<const Node*> SyntaxTree::statements() const {
    std::vector<const Node*> out;
    if (!root_)
        return out;
    walk(*root_, [&](const Node& n) {
        if (is_statement_kind(n.kind))
            out.push_back(&n);
        return true;
    });
    return out;
}

void SyntaxTree::finalize() {
    if (!root_)
        return;
    // Parent links let the analyzer reconstruct a statement's enclosing-scope
    // chain without carrying a context through every call.
    std::vector<Node*> stack{root_.get()};
    while (!stack.empty()) {
        Node* n = stack.back();
        stack.pop_back();
        for (auto& child : n->children) {
            child->parent = n;
            stack.push_back(child.get());
        }
    }
}

} // namespace paradigm::py
