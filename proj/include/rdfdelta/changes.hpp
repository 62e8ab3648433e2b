#pragma once

#include <map>
#include <string>
#include <vector>

#include "rdfdelta/pattern.hpp"

namespace rdfdelta {

struct ChangeError : std::runtime_error {
    enum class Kind {
        DuplicateName,
        UnboundParam,
        UnknownSimpleChange,
        ArityMismatch,
        Invalid,
    };

    ChangeError(Kind k, const std::string& message)
        : std::runtime_error(message), kind(k) {}

    Kind kind;
};

// Def. 1: ⟨δ⁺, δ⁻, cond_old, cond_new⟩. Conditions are unscoped pattern trees;
// compilation wraps their triple patterns in the OLD/NEW graph respectively.
struct SimpleChangeDef {
    std::string name;
    std::vector<Variable> params;
    std::vector<TriplePattern> delta_plus;
    std::vector<TriplePattern> delta_minus;
    PatternPtr cond_old;  // p_empty() when absent
    PatternPtr cond_new;
};

struct SimpleChangeRef {
    std::string change;
    std::vector<PatternTerm> args;  // variables of the complex def's scope, or constants
};

// §3.2 association, variable form: rename {v1}→{v2}, split {v0}→{v1..vn},
// merge {v1..vn}→{v0}.
struct Association {
    std::vector<PatternTerm> from;
    std::vector<PatternTerm> to;
};

// Def. 7: ⟨δ_s, cond_old, cond_new, A, P⟩. Larger integer = higher priority.
struct ComplexChangeDef {
    std::string name;
    std::vector<Variable> params;
    std::vector<SimpleChangeRef> consumed;
    PatternPtr cond_old;
    PatternPtr cond_new;
    std::vector<Association> associations;
    int priority = 0;
};

class ChangeLanguage;

// Compiles a simple definition into its detection pattern: each tp∈δ⁺ scoped
// NEW with NotExists of the same tp scoped OLD (mirrored for δ⁻), joined with
// the scoped conditions; filters hoisted above the joins.
PatternPtr compile_simple(const SimpleChangeDef& def);

// Compiles a complex definition into a pattern over the ONTOLOGY graph:
// per consumed ref, an individual match plus a not-consumed guard; association
// individual lookups with exact-membership guards; scoped conditions. The
// version pair is carried by the reserved variables __v_old/__v_new.
PatternPtr compile_complex(const ComplexChangeDef& def, const ChangeLanguage& lang);

inline constexpr const char* kVarOldVersion = "__v_old";
inline constexpr const char* kVarNewVersion = "__v_new";

class ChangeLanguage {
  public:
    struct SimpleEntry {
        SimpleChangeDef def;
        PatternPtr pattern;
    };
    struct ComplexEntry {
        ComplexChangeDef def;
        PatternPtr pattern;
    };

    explicit ChangeLanguage(TermTablePtr table) : table_(std::move(table)) {}

    void register_simple(SimpleChangeDef def);
    void register_complex(ComplexChangeDef def);

    const TermTablePtr& table() const { return table_; }
    const std::map<std::string, SimpleEntry>& simple() const { return simple_; }
    const std::map<std::string, ComplexEntry>& complex() const { return complex_; }
    const SimpleEntry* find_simple(const std::string& name) const;
    const ComplexEntry* find_complex(const std::string& name) const;

  private:
    void check_name_unused(const std::string& name) const;

    TermTablePtr table_;
    std::map<std::string, SimpleEntry> simple_;
    std::map<std::string, ComplexEntry> complex_;
};

}  // namespace rdfdelta
