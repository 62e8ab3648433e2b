#pragma once

// Brute-force reference implementations: detectability by exhaustive
// enumeration of all variable assignments over a small universe, plus a
// generator of random definitions/version pairs restricted so that the
// enumerator's semantics coincide with the engine's (negation and filters
// only over variables that the consumed delta always binds).

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rdfdelta/detection.hpp"

namespace oracle {

using namespace rdfdelta;

inline TermId subst(const PatternTerm& t, const Mapping& mu) {
    if (auto* id = std::get_if<TermId>(&t)) return *id;
    auto it = mu.find(std::get<Variable>(t).name);
    return it == mu.end() ? kNoTerm : it->second;
}

inline bool filter_holds(const FilterPtr& f, const Mapping& mu) {
    switch (f->op) {
        case FilterExpr::Op::Eq:
        case FilterExpr::Op::Neq: {
            TermId l = subst(f->lhs, mu), r = subst(f->rhs, mu);
            if (l == kNoTerm || r == kNoTerm) return false;
            return f->op == FilterExpr::Op::Eq ? l == r : l != r;
        }
        case FilterExpr::Op::And:
            for (const auto& c : f->children)
                if (!filter_holds(c, mu)) return false;
            return true;
        case FilterExpr::Op::Or:
            for (const auto& c : f->children)
                if (filter_holds(c, mu)) return true;
            return false;
    }
    return false;
}

// Truth of an unscoped condition tree in `ds` under a total assignment.
inline bool cond_holds(const PatternPtr& p, const Dataset& ds, const Mapping& mu) {
    if (!p) return true;
    switch (p->kind) {
        case GraphPattern::Kind::Empty:
            return true;
        case GraphPattern::Kind::Basic:
            for (const TriplePattern& tp : p->triples)
                if (!ds.contains({subst(tp.s, mu), subst(tp.p, mu), subst(tp.o, mu)}))
                    return false;
            return true;
        case GraphPattern::Kind::Scoped:
            return cond_holds(p->left, ds, mu);
        case GraphPattern::Kind::Join:
            return cond_holds(p->left, ds, mu) && cond_holds(p->right, ds, mu);
        case GraphPattern::Kind::Union:
            return cond_holds(p->left, ds, mu) || cond_holds(p->right, ds, mu);
        case GraphPattern::Kind::Optional:
            return cond_holds(p->left, ds, mu);
        case GraphPattern::Kind::Filter:
            return cond_holds(p->left, ds, mu) && filter_holds(p->filter, mu);
        case GraphPattern::Kind::NotExists:
            return cond_holds(p->left, ds, mu) && !cond_holds(p->right, ds, mu);
    }
    return false;
}

inline void collect_vars(const PatternPtr& p, std::vector<std::string>& out) {
    for (const std::string& v : pattern_variables(p))
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

// Detectable argument tuples per Def. 3, by enumerating every total assignment
// of the definition's variables over `universe`.
inline std::set<std::vector<TermId>> detectable_args(const SimpleChangeDef& def,
                                                     const Dataset& v_old,
                                                     const Dataset& v_new,
                                                     const std::vector<TermId>& universe) {
    std::vector<std::string> vars;
    auto add_tp_vars = [&](const std::vector<TriplePattern>& tps) {
        for (const TriplePattern& tp : tps)
            for (const PatternTerm* t : {&tp.s, &tp.p, &tp.o})
                if (auto* v = std::get_if<Variable>(t))
                    if (std::find(vars.begin(), vars.end(), v->name) == vars.end())
                        vars.push_back(v->name);
    };
    add_tp_vars(def.delta_plus);
    add_tp_vars(def.delta_minus);
    collect_vars(def.cond_old, vars);
    collect_vars(def.cond_new, vars);

    std::set<std::vector<TermId>> result;
    std::vector<std::size_t> idx(vars.size(), 0);
    for (;;) {
        Mapping mu;
        for (std::size_t i = 0; i < vars.size(); ++i) mu[vars[i]] = universe[idx[i]];

        bool ok = true;
        for (const TriplePattern& tp : def.delta_plus) {
            Triple t{subst(tp.s, mu), subst(tp.p, mu), subst(tp.o, mu)};
            if (!v_new.contains(t) || v_old.contains(t)) { ok = false; break; }
        }
        if (ok)
            for (const TriplePattern& tp : def.delta_minus) {
                Triple t{subst(tp.s, mu), subst(tp.p, mu), subst(tp.o, mu)};
                if (!v_old.contains(t) || v_new.contains(t)) { ok = false; break; }
            }
        if (ok && cond_holds(def.cond_old, v_old, mu) &&
            cond_holds(def.cond_new, v_new, mu)) {
            std::vector<TermId> args;
            for (const Variable& p : def.params) args.push_back(mu.at(p.name));
            result.insert(std::move(args));
        }

        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < universe.size()) break;
            idx[i] = 0;
        }
        if (i == idx.size() || vars.empty()) break;
    }
    return result;
}

// Random (definition, version-pair) instances over a <=12-term universe.
struct InstanceGen {
    explicit InstanceGen(std::uint64_t seed) : rng(seed) {}

    std::mt19937_64 rng;
    TermTablePtr tt;
    std::vector<TermId> uris;      // any position
    std::vector<TermId> literals;  // object position only
    std::vector<TermId> universe;  // uris + literals

    std::size_t pick(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    }
    bool chance(int percent) { return pick(100) < static_cast<std::size_t>(percent); }

    void fresh_universe() {
        tt = std::make_shared<TermTable>();
        uris.clear();
        literals.clear();
        universe.clear();
        for (int i = 0; i < 8; ++i)
            uris.push_back(tt->intern_uri("u:r" + std::to_string(i)));
        for (int i = 0; i < 3; ++i)
            literals.push_back(tt->intern_literal("l" + std::to_string(i)));
        universe = uris;
        universe.insert(universe.end(), literals.begin(), literals.end());
    }

    Dataset random_version(const std::string& label, std::size_t max_triples) {
        DatasetBuilder b(tt);
        for (std::size_t i = pick(max_triples + 1); i > 0; --i)
            b.add(uris[pick(uris.size())], uris[pick(uris.size())],
                  universe[pick(universe.size())]);
        return std::move(b).build(label);
    }

    // Definitions use variables ?v0..?v2 in the delta plus at most one
    // condition-only variable ?c0 (bound positively); negation-as-failure and
    // filters range over delta variables and constants only.
    SimpleChangeDef random_def(const std::string& name) {
        SimpleChangeDef def;
        def.name = name;

        auto pos_term = [&](bool allow_literal) -> PatternTerm {
            if (chance(55)) return Variable{"v" + std::to_string(pick(3))};
            if (allow_literal && chance(30)) return literals[pick(literals.size())];
            return uris[pick(uris.size())];
        };
        auto random_tp = [&] {
            return TriplePattern{pos_term(false), pos_term(false), pos_term(true)};
        };
        std::size_t nplus = pick(3), nminus = pick(3);
        if (nplus + nminus == 0) nplus = 1;
        for (std::size_t i = 0; i < nplus; ++i) def.delta_plus.push_back(random_tp());
        for (std::size_t i = 0; i < nminus; ++i) def.delta_minus.push_back(random_tp());

        std::vector<std::string> dvars;
        for (const auto* side : {&def.delta_plus, &def.delta_minus})
            for (const TriplePattern& tp : *side)
                for (const PatternTerm* t : {&tp.s, &tp.p, &tp.o})
                    if (auto* v = std::get_if<Variable>(t))
                        if (std::find(dvars.begin(), dvars.end(), v->name) == dvars.end())
                            dvars.push_back(v->name);

        auto delta_term = [&](bool allow_literal) -> PatternTerm {
            if (!dvars.empty() && chance(60)) return Variable{dvars[pick(dvars.size())]};
            if (allow_literal && chance(30)) return literals[pick(literals.size())];
            return uris[pick(uris.size())];
        };
        auto random_cond = [&]() -> PatternPtr {
            switch (pick(4)) {
                case 0:
                    return p_empty();
                case 1: {  // positive pattern, may introduce one fresh variable
                    PatternTerm s = chance(40) ? PatternTerm{Variable{"c0"}}
                                               : delta_term(false);
                    return p_bgp({{s, delta_term(false), delta_term(true)}});
                }
                case 2: {  // filter over delta variables / constants
                    PatternTerm l = delta_term(true), r = delta_term(true);
                    return p_filter(p_empty(), chance(50) ? f_eq(l, r) : f_neq(l, r));
                }
                default:  // negation over delta variables / constants only
                    return p_not_exists(
                        p_empty(),
                        p_bgp({{delta_term(false), delta_term(false), delta_term(true)}}));
            }
        };
        def.cond_old = random_cond();
        def.cond_new = random_cond();

        std::sort(dvars.begin(), dvars.end());
        for (const std::string& v : dvars) def.params.push_back(Variable{v});
        return def;
    }
};

// Runs one randomized instance: a language of `ndefs` random definitions over
// a fresh universe, compared against the enumerator. Returns mismatch count.
inline std::size_t run_instance(InstanceGen& gen, std::size_t ndefs,
                                unsigned threads = 1) {
    gen.fresh_universe();
    ChangeLanguage lang(gen.tt);
    std::vector<SimpleChangeDef> defs;
    for (std::size_t i = 0; i < ndefs; ++i) {
        defs.push_back(gen.random_def("Change_" + std::to_string(i)));
        lang.register_simple(defs.back());
    }
    auto v_old = std::make_shared<const Dataset>(gen.random_version("v1", 25));
    auto v_new = std::make_shared<const Dataset>(gen.random_version("v2", 25));
    EvalContext ctx = EvalContext::make(v_old, v_new);

    SimpleDetectionResult got = detect_simple(lang, ctx, threads);
    std::map<std::string, std::set<std::vector<TermId>>> engine;
    for (const ChangeInstantiation& inst : got.detected)
        engine[inst.change_name].insert(inst.args);

    std::size_t mismatches = 0;
    for (const SimpleChangeDef& def : defs) {
        auto want = detectable_args(def, *v_old, *v_new, gen.universe);
        if (engine[def.name] != want) ++mismatches;
    }
    return mismatches;
}

}  // namespace oracle
