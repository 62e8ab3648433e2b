#include "rdfdelta/changes.hpp"

#include <algorithm>
#include <set>

#include "rdfdelta/names.hpp"
#include "rdfdelta/vocab.hpp"

namespace rdfdelta {
namespace {

void collect_tp_vars(const TriplePattern& tp, std::set<std::string>& out) {
    for (const PatternTerm* t : {&tp.s, &tp.p, &tp.o})
        if (auto* v = std::get_if<Variable>(t)) out.insert(v->name);
}

std::set<std::string> body_variables(const SimpleChangeDef& def) {
    std::set<std::string> vars;
    for (const auto& tp : def.delta_plus) collect_tp_vars(tp, vars);
    for (const auto& tp : def.delta_minus) collect_tp_vars(tp, vars);
    for (const auto& p : {def.cond_old, def.cond_new})
        for (const auto& n : pattern_variables(p)) vars.insert(n);
    return vars;
}

// Wraps every BasicPattern of an (unscoped) condition tree in Scoped(sel).
PatternPtr scope_all(const PatternPtr& p, GraphSel sel) {
    if (!p) return p_empty();
    switch (p->kind) {
        case GraphPattern::Kind::Empty:
            return p;
        case GraphPattern::Kind::Basic:
            return p_scoped(sel, p);
        case GraphPattern::Kind::Scoped:
            return p;  // explicitly scoped already
        case GraphPattern::Kind::Join:
            return p_join(scope_all(p->left, sel), scope_all(p->right, sel));
        case GraphPattern::Kind::Union:
            return p_union(scope_all(p->left, sel), scope_all(p->right, sel));
        case GraphPattern::Kind::Optional:
            return p_optional(scope_all(p->left, sel), scope_all(p->right, sel));
        case GraphPattern::Kind::Filter:
            return p_filter(scope_all(p->left, sel), p->filter);
        case GraphPattern::Kind::NotExists:
            return p_not_exists(scope_all(p->left, sel), scope_all(p->right, sel));
    }
    throw ChangeError(ChangeError::Kind::Invalid, "unknown pattern node");
}

// Splits a condition tree into joinable parts, NotExists guards, and filters,
// scoping all triple patterns to `sel`. Filters are hoisted above the joins
// (join-then-filter evaluation order).
void decompose_condition(const PatternPtr& p, GraphSel sel,
                         std::vector<PatternPtr>& joins, std::vector<PatternPtr>& nes,
                         std::vector<FilterPtr>& filters) {
    if (!p || p->kind == GraphPattern::Kind::Empty) return;
    switch (p->kind) {
        case GraphPattern::Kind::Basic:
            joins.push_back(p_scoped(sel, p));
            return;
        case GraphPattern::Kind::Join:
            decompose_condition(p->left, sel, joins, nes, filters);
            decompose_condition(p->right, sel, joins, nes, filters);
            return;
        case GraphPattern::Kind::Filter:
            filters.push_back(p->filter);
            decompose_condition(p->left, sel, joins, nes, filters);
            return;
        case GraphPattern::Kind::NotExists:
            nes.push_back(scope_all(p->right, sel));
            decompose_condition(p->left, sel, joins, nes, filters);
            return;
        default:
            joins.push_back(scope_all(p, sel));
            return;
    }
}

PatternPtr assemble(std::vector<PatternPtr> joins, std::vector<PatternPtr> nes,
                    std::vector<FilterPtr> filters) {
    PatternPtr acc = joins.empty() ? p_empty() : joins[0];
    for (std::size_t i = 1; i < joins.size(); ++i) acc = p_join(acc, joins[i]);
    for (const auto& ne : nes) acc = p_not_exists(acc, ne);
    for (const auto& f : filters) acc = p_filter(acc, f);
    return acc;
}

void reject_reserved_vars(const std::vector<std::string>& vars,
                          const std::string& where) {
    for (const auto& v : vars)
        if (v.rfind("__", 0) == 0)
            throw ChangeError(ChangeError::Kind::Invalid,
                              where + ": variable names starting with \"__\" are reserved: ?" + v);
}

}  // namespace

PatternPtr compile_simple(const SimpleChangeDef& def) {
    std::vector<PatternPtr> joins, nes;
    std::vector<FilterPtr> filters;
    for (const auto& tp : def.delta_plus) {
        joins.push_back(p_scoped(GraphSel::New, p_bgp({tp})));
        nes.push_back(p_scoped(GraphSel::Old, p_bgp({tp})));
    }
    for (const auto& tp : def.delta_minus) {
        joins.push_back(p_scoped(GraphSel::Old, p_bgp({tp})));
        nes.push_back(p_scoped(GraphSel::New, p_bgp({tp})));
    }
    decompose_condition(def.cond_old, GraphSel::Old, joins, nes, filters);
    decompose_condition(def.cond_new, GraphSel::New, joins, nes, filters);
    return assemble(std::move(joins), std::move(nes), std::move(filters));
}

PatternPtr compile_complex(const ComplexChangeDef& def, const ChangeLanguage& lang) {
    TermTable& tt = *lang.table();
    const TermId rdf_type = tt.intern_uri(vocab::kRdfType);
    const TermId p_old_version = tt.intern_uri(names::prop_old_version());
    const TermId p_new_version = tt.intern_uri(names::prop_new_version());
    const TermId p_consumes = tt.intern_uri(names::prop_consumes());
    const TermId p_old_value = tt.intern_uri(names::prop_old_value());
    const TermId p_new_value = tt.intern_uri(names::prop_new_value());
    const TermId assoc_class = tt.intern_uri(names::association_class());
    const Variable v_old{kVarOldVersion};
    const Variable v_new{kVarNewVersion};

    std::vector<PatternPtr> joins, nes;
    std::vector<FilterPtr> filters;

    for (std::size_t j = 0; j < def.consumed.size(); ++j) {
        const SimpleChangeRef& ref = def.consumed[j];
        const Variable ind{"__sc" + std::to_string(j)};
        std::vector<TriplePattern> bgp;
        bgp.push_back({ind, rdf_type, tt.intern_uri(names::change_class(ref.change))});
        bgp.push_back({ind, p_old_version, v_old});
        bgp.push_back({ind, p_new_version, v_new});
        for (std::size_t i = 0; i < ref.args.size(); ++i)
            bgp.push_back({ind, tt.intern_uri(names::param_property(ref.change, i + 1)),
                           ref.args[i]});
        joins.push_back(p_scoped(GraphSel::Ontology, p_bgp(std::move(bgp))));
        // Def. 10 guard: no already-materialized consumer of this individual.
        const Variable cc{"__cc" + std::to_string(j)};
        nes.push_back(p_scoped(GraphSel::Ontology,
                               p_bgp({TriplePattern{cc, p_consumes, ind}})));
    }

    for (std::size_t j = 0; j < def.associations.size(); ++j) {
        const Association& a = def.associations[j];
        const Variable ind{"__as" + std::to_string(j)};
        std::vector<TriplePattern> bgp;
        bgp.push_back({ind, rdf_type, assoc_class});
        bgp.push_back({ind, p_old_version, v_old});
        bgp.push_back({ind, p_new_version, v_new});
        for (const auto& m : a.from) bgp.push_back({ind, p_old_value, m});
        for (const auto& m : a.to) bgp.push_back({ind, p_new_value, m});
        joins.push_back(p_scoped(GraphSel::Ontology, p_bgp(std::move(bgp))));
        // Exact-set matching (Def. 8: μ(α) ∈ A): the individual must carry no
        // member beyond the listed ones, and listed members must be distinct.
        auto side_guard = [&](TermId value_prop, const std::vector<PatternTerm>& members,
                              const char* tag) {
            const Variable extra{"__ax" + std::to_string(j) + tag};
            std::vector<FilterPtr> neqs;
            for (const auto& m : members) neqs.push_back(f_neq(extra, m));
            nes.push_back(p_filter(
                p_scoped(GraphSel::Ontology, p_bgp({TriplePattern{ind, value_prop, extra}})),
                f_and(std::move(neqs))));
        };
        side_guard(p_old_value, a.from, "f");
        side_guard(p_new_value, a.to, "t");
        for (std::size_t x = 0; x < a.from.size(); ++x)
            for (std::size_t y = x + 1; y < a.from.size(); ++y)
                filters.push_back(f_neq(a.from[x], a.from[y]));
        for (std::size_t x = 0; x < a.to.size(); ++x)
            for (std::size_t y = x + 1; y < a.to.size(); ++y)
                filters.push_back(f_neq(a.to[x], a.to[y]));
    }

    decompose_condition(def.cond_old, GraphSel::Old, joins, nes, filters);
    decompose_condition(def.cond_new, GraphSel::New, joins, nes, filters);
    return assemble(std::move(joins), std::move(nes), std::move(filters));
}

void ChangeLanguage::check_name_unused(const std::string& name) const {
    if (simple_.count(name) || complex_.count(name))
        throw ChangeError(ChangeError::Kind::DuplicateName,
                          "change name already registered: " + name);
}

void ChangeLanguage::register_simple(SimpleChangeDef def) {
    check_name_unused(def.name);
    if (def.delta_plus.empty() && def.delta_minus.empty())
        throw ChangeError(ChangeError::Kind::Invalid,
                          def.name + ": delta_plus and delta_minus are both empty");
    std::set<std::string> body = body_variables(def);
    for (const auto& p : def.params)
        if (!body.count(p.name))
            throw ChangeError(ChangeError::Kind::UnboundParam,
                              def.name + ": parameter ?" + p.name +
                                  " does not occur in the definition body");
    reject_reserved_vars({body.begin(), body.end()}, def.name);
    PatternPtr pattern = compile_simple(def);
    std::string key = def.name;  // read before the move below
    simple_.emplace(std::move(key), SimpleEntry{std::move(def), std::move(pattern)});
}

void ChangeLanguage::register_complex(ComplexChangeDef def) {
    check_name_unused(def.name);
    if (def.consumed.empty())
        throw ChangeError(ChangeError::Kind::Invalid,
                          def.name + ": complex change consumes no simple changes");
    std::set<std::string> body;
    for (const auto& ref : def.consumed) {
        auto it = simple_.find(ref.change);
        if (it == simple_.end())
            throw ChangeError(ChangeError::Kind::UnknownSimpleChange,
                              def.name + ": unknown simple change " + ref.change);
        if (ref.args.size() != it->second.def.params.size())
            throw ChangeError(
                ChangeError::Kind::ArityMismatch,
                def.name + ": " + ref.change + " expects " +
                    std::to_string(it->second.def.params.size()) + " arguments, got " +
                    std::to_string(ref.args.size()));
        for (const auto& a : ref.args)
            if (auto* v = std::get_if<Variable>(&a)) body.insert(v->name);
    }
    for (const auto& a : def.associations) {
        if (a.from.empty() || a.to.empty() || (a.from.size() > 1 && a.to.size() > 1))
            throw ChangeError(ChangeError::Kind::Invalid,
                              def.name + ": association must be a rename, split, or merge");
        for (const auto& side : {a.from, a.to})
            for (const auto& m : side)
                if (auto* v = std::get_if<Variable>(&m)) body.insert(v->name);
    }
    for (const auto& p : {def.cond_old, def.cond_new})
        for (const auto& n : pattern_variables(p)) body.insert(n);
    for (const auto& p : def.params)
        if (!body.count(p.name))
            throw ChangeError(ChangeError::Kind::UnboundParam,
                              def.name + ": parameter ?" + p.name +
                                  " does not occur in the definition body");
    reject_reserved_vars({body.begin(), body.end()}, def.name);
    PatternPtr pattern = compile_complex(def, *this);
    std::string key = def.name;  // read before the move below
    complex_.emplace(std::move(key), ComplexEntry{std::move(def), std::move(pattern)});
}

const ChangeLanguage::SimpleEntry* ChangeLanguage::find_simple(
    const std::string& name) const {
    auto it = simple_.find(name);
    return it == simple_.end() ? nullptr : &it->second;
}

const ChangeLanguage::ComplexEntry* ChangeLanguage::find_complex(
    const std::string& name) const {
    auto it = complex_.find(name);
    return it == complex_.end() ? nullptr : &it->second;
}

}  // namespace rdfdelta
