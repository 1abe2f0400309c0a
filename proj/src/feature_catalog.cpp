#include "paradigm/feature_catalog.hpp"

#include <cassert>

namespace paradigm {

std::string_view to_string(Paradigm p) {
    switch (p) {
    case Paradigm::Functional:
        return "Functional";
    case Paradigm::ObjectOriented:
        return "OO";
    case Paradigm::Procedural:
        return "Procedural";
    case Paradigm::Imperative:
        return "Imperative";
    }
    return "?";
}

std::string ParadigmSet::str() const {
    static constexpr std::array<std::string_view, 4> short_names = {"func", "oo", "proc", "imp"};
    std::string out;
    for (std::size_t i = 0; i < kAllParadigms.size(); ++i) {
        if (!contains(kAllParadigms[i]))
            continue;
        if (!out.empty())
            out += ' ';
        out += short_names[i];
    }
    return out.empty() ? "-" : out;
}

namespace {

constexpr ParadigmSet kImp = {Paradigm::Imperative};
constexpr ParadigmSet kImpOO = {Paradigm::Imperative, Paradigm::ObjectOriented};
constexpr ParadigmSet kImpProc = {Paradigm::Imperative, Paradigm::Procedural};
constexpr ParadigmSet kImpFunc = {Paradigm::Imperative, Paradigm::Functional};
constexpr ParadigmSet kProc = {Paradigm::Procedural};
constexpr ParadigmSet kOO = {Paradigm::ObjectOriented};
constexpr ParadigmSet kFunc = {Paradigm::Functional};
constexpr ParadigmSet kProcFunc = {Paradigm::Procedural, Paradigm::Functional};
constexpr ParadigmSet kAllFour = {Paradigm::Imperative, Paradigm::Procedural,
                                  Paradigm::ObjectOriented, Paradigm::Functional};

struct RowDef {
    FeatureKind kind;
    std::string_view name;
    ParadigmSet paradigms;
    bool api_detected;
};

// Row order follows the published feature table top to bottom.
constexpr std::array<RowDef, kFeatureKindCount> kRows = {{
    {FeatureKind::Conditional, "if_else_elif", kImp, false},
    {FeatureKind::WhileLoop, "while_loop", kImp, false},
    {FeatureKind::Break, "break", kImp, false},
    {FeatureKind::Continue, "continue", kImp, false},
    {FeatureKind::Assert, "assert", kImp, false},
    {FeatureKind::Del, "del", kImp, false},
    {FeatureKind::ArrayIndex, "array_indexing", kImp, false},
    {FeatureKind::PassInLoop, "pass_in_loop", kImp, false},
    {FeatureKind::PassInClass, "pass_in_class", kImpOO, false},
    {FeatureKind::PassInDef, "pass_in_def", kImpProc, false},
    {FeatureKind::Return, "return", kProc, false},
    {FeatureKind::FunctionDecl, "function_def", kProc, false},
    {FeatureKind::NestedFunctionDecl, "nested_function_def", kProc, false},
    {FeatureKind::ClassDecl, "class_declaration", kOO, false},
    {FeatureKind::Inheritance, "inheritance", kOO, false},
    {FeatureKind::MethodDecl, "method_def", kOO, false},
    {FeatureKind::With, "with", kImpOO, false},
    {FeatureKind::Try, "try", kImpOO, false},
    {FeatureKind::Except, "except", kImpOO, false},
    {FeatureKind::Finally, "finally", kImpOO, false},
    {FeatureKind::Raise, "raise", kImpOO, false},
    {FeatureKind::ForLoop, "for_loop", kImpFunc, false},
    {FeatureKind::InOperator, "in_operator", kImpFunc, false},
    {FeatureKind::Yield, "yield", kImpFunc, false},
    {FeatureKind::FunctionAsArg, "function_as_arg", kFunc, false},
    {FeatureKind::Lambda, "lambda", kFunc, false},
    {FeatureKind::ListComprehension, "list_comprehension", kFunc, false},
    {FeatureKind::Decorator, "decorator", kFunc, false},
    {FeatureKind::GeneratorExpression, "generator_expression", kFunc, false},
    {FeatureKind::IteratorDunder, "iterator_dunder", kAllFour, false},
    {FeatureKind::SendCall, "send_call", kProcFunc, true},
    {FeatureKind::IterCall, "iter_call", kProcFunc, true},
    {FeatureKind::MapCall, "map_call", kProcFunc, true},
    {FeatureKind::SortedCall, "sorted_call", kProcFunc, true},
    {FeatureKind::FilterCall, "filter_call", kProcFunc, true},
    {FeatureKind::AnyCall, "any_call", kProcFunc, true},
    {FeatureKind::AllCall, "all_call", kProcFunc, true},
    {FeatureKind::ItertoolsCall, "itertools_call", kProcFunc, true},
    {FeatureKind::FunctoolsCall, "functools_call", kProcFunc, true},
    {FeatureKind::EnumerateCall, "enumerate_call", kProcFunc, true},
    {FeatureKind::ZipCall, "zip_call", kProcFunc, true},
}};

const RowDef& row(FeatureKind kind) {
    const auto idx = static_cast<std::size_t>(kind);
    assert(idx < kRows.size() && kRows[idx].kind == kind);
    return kRows[idx];
}

} // namespace

std::array<FeatureKind, kFeatureKindCount> all_feature_kinds() {
    std::array<FeatureKind, kFeatureKindCount> kinds{};
    for (std::size_t i = 0; i < kRows.size(); ++i)
        kinds[i] = kRows[i].kind;
    return kinds;
}

ParadigmSet paradigms_of_feature(FeatureKind kind) {
    return row(kind).paradigms;
}

std::string_view feature_name(FeatureKind kind) {
    return row(kind).name;
}

bool feature_is_api_detected(FeatureKind kind) {
    return row(kind).api_detected;
}

bool ImportContext::is_module_name(std::string_view name) const {
    return module_bindings.find(std::string(name)) != module_bindings.end();
}

std::optional<std::string> ImportContext::module_of(std::string_view name) const {
    auto it = module_bindings.find(std::string(name));
    if (it == module_bindings.end())
        return std::nullopt;
    return it->second;
}

bool ImportContext::is_functional_import(std::string_view name) const {
    return functional_imports.find(std::string(name)) != functional_imports.end();
}

std::optional<std::string> ImportContext::functional_origin(std::string_view name) const {
    auto it = functional_imports.find(std::string(name));
    if (it == functional_imports.end())
        return std::nullopt;
    return it->second;
}

std::set<std::string> ImportContext::module_names() const {
    std::set<std::string> out;
    for (const auto& [name, mod] : module_bindings)
        out.insert(name);
    return out;
}

std::set<std::string> ImportContext::functional_import_names() const {
    std::set<std::string> out;
    for (const auto& [name, mod] : functional_imports)
        out.insert(name);
    return out;
}

std::optional<FeatureKind> functional_builtin_kind(std::string_view call_name) {
    if (call_name == "map")
        return FeatureKind::MapCall;
    if (call_name == "sorted")
        return FeatureKind::SortedCall;
    if (call_name == "filter")
        return FeatureKind::FilterCall;
    if (call_name == "any")
        return FeatureKind::AnyCall;
    if (call_name == "all")
        return FeatureKind::AllCall;
    if (call_name == "enumerate")
        return FeatureKind::EnumerateCall;
    if (call_name == "zip")
        return FeatureKind::ZipCall;
    if (call_name == "iter")
        return FeatureKind::IterCall;
    if (call_name == "send")
        return FeatureKind::SendCall;
    return std::nullopt;
}

bool is_functional_builtin_name(std::string_view call_name) {
    return functional_builtin_kind(call_name).has_value();
}

bool is_functional_module(std::string_view dotted_module) {
    return dotted_module == "itertools" || dotted_module == "functools";
}

FeatureKind functional_module_call_kind(std::string_view dotted_module) {
    assert(is_functional_module(dotted_module));
    return dotted_module == "itertools" ? FeatureKind::ItertoolsCall : FeatureKind::FunctoolsCall;
}

bool is_functional_builtin(std::string_view call_name, const ImportContext& imports) {
    return is_functional_builtin_name(call_name) || imports.is_functional_import(call_name);
}

std::array<CatalogRow, kFeatureKindCount> catalog_rows() {
    std::array<CatalogRow, kFeatureKindCount> out{};
    for (std::size_t i = 0; i < kRows.size(); ++i) {
        const RowDef& r = kRows[i];
        out[i] = CatalogRow{r.kind,
                            r.name,
                            r.paradigms.contains(Paradigm::Imperative),
                            r.paradigms.contains(Paradigm::Procedural),
                            r.paradigms.contains(Paradigm::ObjectOriented),
                            r.paradigms.contains(Paradigm::Functional),
                            r.api_detected};
    }
    return out;
}

} // namespace paradigm
