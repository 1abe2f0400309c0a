#ifndef PARADIGM_FEATURE_CATALOG_HPP
#define PARADIGM_FEATURE_CATALOG_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace paradigm {

// Ordering is load-bearing: ties and report rows are emitted in this order.
enum class Paradigm : std::uint8_t {
    Functional = 0,
    ObjectOriented = 1,
    Procedural = 2,
    Imperative = 3,
};

inline constexpr std::array<Paradigm, 4> kAllParadigms = {
    Paradigm::Functional,
    Paradigm::ObjectOriented,
    Paradigm::Procedural,
    Paradigm::Imperative,
};

std::string_view to_string(Paradigm p);

/// Subset of the four paradigms. Empty sets are legal (a statement with no
/// intrinsic feature).
class ParadigmSet {
public:
    constexpr ParadigmSet() = default;
    constexpr ParadigmSet(std::initializer_list<Paradigm> ps) {
        for (Paradigm p : ps)
            bits_ |= bit(p);
    }

    constexpr bool contains(Paradigm p) const { return (bits_ & bit(p)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const {
        int n = 0;
        for (Paradigm p : kAllParadigms)
            n += contains(p) ? 1 : 0;
        return n;
    }

    constexpr void add(Paradigm p) { bits_ |= bit(p); }
    constexpr void remove(Paradigm p) { bits_ &= static_cast<std::uint8_t>(~bit(p)); }

    constexpr ParadigmSet operator|(ParadigmSet other) const {
        ParadigmSet r;
        r.bits_ = bits_ | other.bits_;
        return r;
    }
    constexpr ParadigmSet& operator|=(ParadigmSet other) {
        bits_ |= other.bits_;
        return *this;
    }
    constexpr ParadigmSet operator&(ParadigmSet other) const {
        ParadigmSet r;
        r.bits_ = bits_ & other.bits_;
        return r;
    }

    constexpr bool operator==(const ParadigmSet&) const = default;

    /// "func oo proc imp" style rendering in catalog order; "-" when empty.
    std::string str() const;

private:
    static constexpr std::uint8_t bit(Paradigm p) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(p));
    }
    std::uint8_t bits_ = 0;
};

// One value per catalog row, in the row order of the published table.
enum class FeatureKind : std::uint8_t {
    Conditional,      // if / elif / else
    WhileLoop,
    Break,
    Continue,
    Assert,
    Del,
    ArrayIndex,       // subscript expressions
    PassInLoop,
    PassInClass,
    PassInDef,
    Return,
    FunctionDecl,
    NestedFunctionDecl,
    ClassDecl,
    Inheritance,
    MethodDecl,
    With,
    Try,
    Except,
    Finally,
    Raise,
    ForLoop,
    InOperator,       // in / not in comparisons
    Yield,
    FunctionAsArg,
    Lambda,
    ListComprehension,
    Decorator,
    GeneratorExpression,
    IteratorDunder,   // __iter__ / __next__ declarations
    SendCall,
    IterCall,
    MapCall,
    SortedCall,
    FilterCall,
    AnyCall,
    AllCall,
    ItertoolsCall,
    FunctoolsCall,
    EnumerateCall,
    ZipCall,
};

inline constexpr std::size_t kFeatureKindCount = 41;

std::array<FeatureKind, kFeatureKindCount> all_feature_kinds();

/// Catalog row for a feature, transcribed verbatim from the published table.
/// The analyzer applies two documented adjustments on top of this at counting
/// time (imperative suppression; iterator-dunder declarations attributed as
/// functional + OO only).
ParadigmSet paradigms_of_feature(FeatureKind kind);

/// Stable machine-readable name used in reports and the catalog dump.
std::string_view feature_name(FeatureKind kind);

/// True for rows detected by call-name lists rather than syntax alone.
bool feature_is_api_detected(FeatureKind kind);

/// Names bound by imports in one source file. Populated by the analyzer;
/// consulted by call-classification and the functional name lists.
struct ImportContext {
    // binding name -> dotted module path, from `import X` / `import X as Y`
    std::map<std::string, std::string> module_bindings;
    // binding name -> "functools" | "itertools", from `from functools/itertools import ...`
    std::map<std::string, std::string> functional_imports;

    bool is_module_name(std::string_view name) const;
    // Dotted module path a binding refers to, if it is a module binding.
    std::optional<std::string> module_of(std::string_view name) const;
    bool is_functional_import(std::string_view name) const;
    // Origin module ("functools"/"itertools") of a functional import binding.
    std::optional<std::string> functional_origin(std::string_view name) const;

    std::set<std::string> module_names() const;
    std::set<std::string> functional_import_names() const;
};

/// Bare call names the catalog designates functional: map, sorted, filter,
/// any, all, enumerate, zip, iter, send. Exact match, closed list.
bool is_functional_builtin_name(std::string_view call_name);

/// FeatureKind for a bare functional-builtin call name, if any.
std::optional<FeatureKind> functional_builtin_kind(std::string_view call_name);

/// "itertools" / "functools".
bool is_functional_module(std::string_view dotted_module);

/// ItertoolsCall or FunctoolsCall for one of the two functional modules.
FeatureKind functional_module_call_kind(std::string_view dotted_module);

/// True iff the name is a functional builtin or was imported from
/// functools/itertools per the import context.
bool is_functional_builtin(std::string_view call_name, const ImportContext& imports);

/// One catalog dump row: feature name plus the four membership flags.
struct CatalogRow {
    FeatureKind kind;
    std::string_view name;
    bool imperative;
    bool procedural;
    bool object_oriented;
    bool functional;
    bool api_detected;
};

std::array<CatalogRow, kFeatureKindCount> catalog_rows();

} // namespace paradigm

#endif // PARADIGM_FEATURE_CATALOG_HPP
