#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rdfdelta/dataset.hpp"

namespace rdfdelta {

struct Variable {
    std::string name;  // without the '?' sigil
    auto operator<=>(const Variable&) const = default;
};

// Constants are pre-interned term ids.
using PatternTerm = std::variant<TermId, Variable>;

struct TriplePattern {
    PatternTerm s;
    PatternTerm p;
    PatternTerm o;
    bool operator==(const TriplePattern&) const = default;
};

enum class GraphSel { Old, New, Ontology };

struct FilterExpr;
using FilterPtr = std::shared_ptr<const FilterExpr>;

struct FilterExpr {
    enum class Op { Eq, Neq, And, Or };
    Op op = Op::Eq;
    PatternTerm lhs;  // Eq/Neq only
    PatternTerm rhs;  // Eq/Neq only
    std::vector<FilterPtr> children;  // And/Or only
};

FilterPtr f_eq(PatternTerm lhs, PatternTerm rhs);
FilterPtr f_neq(PatternTerm lhs, PatternTerm rhs);
FilterPtr f_and(std::vector<FilterPtr> children);
FilterPtr f_or(std::vector<FilterPtr> children);

struct GraphPattern;
using PatternPtr = std::shared_ptr<const GraphPattern>;

// Immutable graph-pattern expression tree. Every TriplePattern must sit under
// exactly one Scoped node naming the graph it evaluates against.
struct GraphPattern {
    enum class Kind { Empty, Basic, Scoped, Join, Union, Optional, Filter, NotExists };

    Kind kind = Kind::Empty;
    std::vector<TriplePattern> triples;  // Basic
    GraphSel graph = GraphSel::New;      // Scoped
    PatternPtr left;                     // Scoped/Join/Union/Optional/Filter/NotExists child
    PatternPtr right;                    // Join/Union/Optional second child; NotExists sub
    FilterPtr filter;                    // Filter
};

PatternPtr p_empty();
PatternPtr p_bgp(std::vector<TriplePattern> triples);
PatternPtr p_scoped(GraphSel g, PatternPtr child);
PatternPtr p_join(PatternPtr l, PatternPtr r);
PatternPtr p_union(PatternPtr l, PatternPtr r);
PatternPtr p_optional(PatternPtr l, PatternPtr r);
PatternPtr p_filter(PatternPtr child, FilterPtr f);
PatternPtr p_not_exists(PatternPtr child, PatternPtr sub);

// Structural equality (used by tests and by the delta-scan rewrite).
bool pattern_equal(const PatternPtr& a, const PatternPtr& b);
bool filter_equal(const FilterPtr& a, const FilterPtr& b);

struct MalformedPattern : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The three named graphs of one detection run. `added`/`deleted` are the
// materialized low-level delta, used by the evaluator's delta-scan rewrite.
struct EvalContext {
    std::shared_ptr<const Dataset> old_v;
    std::shared_ptr<const Dataset> new_v;
    std::shared_ptr<const Dataset> ontology;
    std::shared_ptr<const Dataset> added;
    std::shared_ptr<const Dataset> deleted;

    static EvalContext make(std::shared_ptr<const Dataset> old_v,
                            std::shared_ptr<const Dataset> new_v,
                            std::shared_ptr<const Dataset> ontology = nullptr);

    const Dataset& graph(GraphSel g) const;
    const TermTablePtr& table() const { return new_v->table(); }
};

// Solution mapping: variable name -> interned term.
using Mapping = std::map<std::string, TermId>;

std::set<Mapping> eval_triple_pattern(const TriplePattern& tp, const Dataset& ds);
std::set<Mapping> eval_graph_pattern(const PatternPtr& gp, const EvalContext& ctx);

// Collects every variable name occurring in the pattern (including filters and
// NotExists subs), in first-occurrence order.
std::vector<std::string> pattern_variables(const PatternPtr& gp);
std::vector<std::string> filter_variables(const FilterPtr& f);

}  // namespace rdfdelta
