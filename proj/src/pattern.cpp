#include "rdfdelta/pattern.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <unordered_map>

namespace rdfdelta {

FilterPtr f_eq(PatternTerm lhs, PatternTerm rhs) {
    auto f = std::make_shared<FilterExpr>();
    f->op = FilterExpr::Op::Eq;
    f->lhs = std::move(lhs);
    f->rhs = std::move(rhs);
    return f;
}
FilterPtr f_neq(PatternTerm lhs, PatternTerm rhs) {
    auto f = std::make_shared<FilterExpr>();
    f->op = FilterExpr::Op::Neq;
    f->lhs = std::move(lhs);
    f->rhs = std::move(rhs);
    return f;
}
FilterPtr f_and(std::vector<FilterPtr> children) {
    auto f = std::make_shared<FilterExpr>();
    f->op = FilterExpr::Op::And;
    f->children = std::move(children);
    return f;
}
FilterPtr f_or(std::vector<FilterPtr> children) {
    auto f = std::make_shared<FilterExpr>();
    f->op = FilterExpr::Op::Or;
    f->children = std::move(children);
    return f;
}

namespace {
PatternPtr make_node(GraphPattern n) {
    return std::make_shared<const GraphPattern>(std::move(n));
}
}  // namespace

PatternPtr p_empty() {
    static const PatternPtr empty = make_node({});
    return empty;
}
PatternPtr p_bgp(std::vector<TriplePattern> triples) {
    GraphPattern n;
    n.kind = GraphPattern::Kind::Basic;
    n.triples = std::move(triples);
    return make_node(std::move(n));
}
PatternPtr p_scoped(GraphSel g, PatternPtr child) {
    GraphPattern n;
    n.kind = GraphPattern::Kind::Scoped;
    n.graph = g;
    n.left = std::move(child);
    return make_node(std::move(n));
}
PatternPtr p_join(PatternPtr l, PatternPtr r) {
    GraphPattern n;
    n.kind = GraphPattern::Kind::Join;
    n.left = std::move(l);
    n.right = std::move(r);
    return make_node(std::move(n));
}
PatternPtr p_union(PatternPtr l, PatternPtr r) {
    GraphPattern n;
    n.kind = GraphPattern::Kind::Union;
    n.left = std::move(l);
    n.right = std::move(r);
    return make_node(std::move(n));
}
PatternPtr p_optional(PatternPtr l, PatternPtr r) {
    GraphPattern n;
    n.kind = GraphPattern::Kind::Optional;
    n.left = std::move(l);
    n.right = std::move(r);
    return make_node(std::move(n));
}
PatternPtr p_filter(PatternPtr child, FilterPtr f) {
    GraphPattern n;
    n.kind = GraphPattern::Kind::Filter;
    n.left = std::move(child);
    n.filter = std::move(f);
    return make_node(std::move(n));
}
PatternPtr p_not_exists(PatternPtr child, PatternPtr sub) {
    GraphPattern n;
    n.kind = GraphPattern::Kind::NotExists;
    n.left = std::move(child);
    n.right = std::move(sub);
    return make_node(std::move(n));
}

bool filter_equal(const FilterPtr& a, const FilterPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->op != b->op || a->lhs != b->lhs || a->rhs != b->rhs) return false;
    if (a->children.size() != b->children.size()) return false;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!filter_equal(a->children[i], b->children[i])) return false;
    return true;
}

bool pattern_equal(const PatternPtr& a, const PatternPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->triples != b->triples || a->graph != b->graph)
        return false;
    return pattern_equal(a->left, b->left) && pattern_equal(a->right, b->right) &&
           filter_equal(a->filter, b->filter);
}

EvalContext EvalContext::make(std::shared_ptr<const Dataset> old_v,
                              std::shared_ptr<const Dataset> new_v,
                              std::shared_ptr<const Dataset> ontology) {
    EvalContext ctx;
    auto delta = low_level_delta(*old_v, *new_v);
    ctx.added = std::make_shared<const Dataset>(std::move(delta.added));
    ctx.deleted = std::make_shared<const Dataset>(std::move(delta.deleted));
    ctx.old_v = std::move(old_v);
    ctx.new_v = std::move(new_v);
    if (ontology) {
        ctx.ontology = std::move(ontology);
    } else {
        ctx.ontology = std::make_shared<const Dataset>(
            DatasetBuilder(ctx.new_v->table()).build("ontology"));
    }
    return ctx;
}

const Dataset& EvalContext::graph(GraphSel g) const {
    switch (g) {
        case GraphSel::Old: return *old_v;
        case GraphSel::New: return *new_v;
        case GraphSel::Ontology: return *ontology;
    }
    throw MalformedPattern("unknown graph selector");
}

namespace {

void collect_filter_vars(const FilterPtr& f, std::vector<std::string>& out) {
    if (!f) return;
    for (const PatternTerm* t : {&f->lhs, &f->rhs})
        if (auto* v = std::get_if<Variable>(t)) out.push_back(v->name);
    for (const auto& c : f->children) collect_filter_vars(c, out);
}

void collect_vars(const PatternPtr& p, std::vector<std::string>& out) {
    if (!p) return;
    for (const TriplePattern& tp : p->triples)
        for (const PatternTerm* t : {&tp.s, &tp.p, &tp.o})
            if (auto* v = std::get_if<Variable>(t)) out.push_back(v->name);
    collect_filter_vars(p->filter, out);
    collect_vars(p->left, out);
    collect_vars(p->right, out);
}

std::vector<std::string> dedup_keep_order(std::vector<std::string> names) {
    std::vector<std::string> out;
    for (auto& n : names)
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
    return out;
}

// --- delta-scan rewrite -----------------------------------------------------
//
// compile_simple emits, for each consumed triple pattern tp, the pair
//   Scoped(NEW, {tp})  +  NotExists(…, Scoped(OLD, {tp}))      (δ⁺; mirrored for δ⁻).
// Because the NotExists sub is the identical pattern (fully bound by the
// positive match), "tp ∈ NEW and not tp ∈ OLD" is pointwise equivalent to a
// scan of the materialized added set. The rewrite keeps detection cost
// proportional to the delta instead of the dataset.

struct DeltaTarget {
    GraphSel scan_graph;  // graph whose Scoped single-tp part we replace
    GraphSel sub_graph;   // graph the NotExists sub must name
};

bool is_single_tp_scoped(const PatternPtr& p, GraphSel g, const TriplePattern** out) {
    if (!p || p->kind != GraphPattern::Kind::Scoped || p->graph != g) return false;
    const PatternPtr& c = p->left;
    if (!c || c->kind != GraphPattern::Kind::Basic || c->triples.size() != 1) return false;
    *out = &c->triples[0];
    return true;
}

void flatten_join(const PatternPtr& p, std::vector<PatternPtr>& parts) {
    if (p && p->kind == GraphPattern::Kind::Join) {
        flatten_join(p->left, parts);
        flatten_join(p->right, parts);
    } else {
        parts.push_back(p);
    }
}

PatternPtr rebuild_join(const std::vector<PatternPtr>& parts) {
    if (parts.empty()) return p_empty();
    PatternPtr acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = p_join(acc, parts[i]);
    return acc;
}

// Internal plan node for a delta scan; reuses the Scoped shape with a flag
// carried out-of-band (the evaluator maps it to ctx.added / ctx.deleted).
struct DeltaScanInfo {
    const GraphPattern* node;
    bool added;  // true: scan added set; false: scan deleted set
};

PatternPtr rewrite_deltas(const PatternPtr& p,
                          std::vector<std::pair<const GraphPattern*, bool>>& scans) {
    if (!p) return p;
    switch (p->kind) {
        case GraphPattern::Kind::Filter:
            return p_filter(rewrite_deltas(p->left, scans), p->filter);
        case GraphPattern::Kind::NotExists: {
            PatternPtr child = rewrite_deltas(p->left, scans);
            const TriplePattern* sub_tp = nullptr;
            for (GraphSel sub_g : {GraphSel::Old, GraphSel::New}) {
                if (!is_single_tp_scoped(p->right, sub_g, &sub_tp)) continue;
                const GraphSel pos_g = sub_g == GraphSel::Old ? GraphSel::New : GraphSel::Old;
                std::vector<PatternPtr> parts;
                flatten_join(child, parts);
                for (auto& part : parts) {
                    const TriplePattern* part_tp = nullptr;
                    if (!is_single_tp_scoped(part, pos_g, &part_tp)) continue;
                    if (!(*part_tp == *sub_tp)) continue;
                    if (std::find_if(scans.begin(), scans.end(),
                                     [&](auto& s) { return s.first == part.get(); }) !=
                        scans.end())
                        continue;  // already claimed by an outer NotExists
                    scans.emplace_back(part.get(), pos_g == GraphSel::New);
                    return rebuild_join(parts);  // drop this NotExists entirely
                }
            }
            return p_not_exists(child, p->right);
        }
        default:
            return p;
    }
}

// --- evaluator ---------------------------------------------------------------

class Evaluator {
  public:
    using Sol = std::vector<TermId>;  // kNoTerm = unbound
    using Sols = std::vector<Sol>;

    Evaluator(const EvalContext& ctx, const PatternPtr& root) : ctx_(ctx) {
        std::vector<std::string> names;
        collect_vars(root, names);
        vars_ = dedup_keep_order(std::move(names));
        for (std::size_t i = 0; i < vars_.size(); ++i) index_[vars_[i]] = i;
        root_ = rewrite_deltas(root, delta_scans_);
    }

    const std::vector<std::string>& vars() const { return vars_; }

    Sols run() {
        Sols seeds;
        seeds.emplace_back(vars_.size(), kNoTerm);
        Sols out = eval(root_, std::nullopt, seeds);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

  private:
    const Dataset& scan_dataset(const GraphPattern* node, GraphSel g) const {
        for (const auto& [ptr, added] : delta_scans_)
            if (ptr == node) return added ? *ctx_.added : *ctx_.deleted;
        return ctx_.graph(g);
    }

    Sols eval(const PatternPtr& p, std::optional<GraphSel> g, const Sols& seeds) {
        if (seeds.empty()) return {};
        switch (p->kind) {
            case GraphPattern::Kind::Empty:
                return seeds;
            case GraphPattern::Kind::Basic: {
                if (!g) throw MalformedPattern("triple pattern outside any GRAPH scope");
                Sols out;
                for (const Sol& seed : seeds) eval_bgp(p->triples, ctx_.graph(*g), seed, out);
                return out;
            }
            case GraphPattern::Kind::Scoped: {
                // A delta-scan claim on this node redirects its (single) BGP.
                const Dataset& ds = scan_dataset(p.get(), p->graph);
                if (&ds != &ctx_.graph(p->graph)) {
                    Sols out;
                    for (const Sol& seed : seeds) eval_bgp(p->left->triples, ds, seed, out);
                    return out;
                }
                return eval(p->left, p->graph, seeds);
            }
            case GraphPattern::Kind::Join:
                return eval(p->right, g, eval(p->left, g, seeds));
            case GraphPattern::Kind::Union: {
                Sols out = eval(p->left, g, seeds);
                Sols r = eval(p->right, g, seeds);
                out.insert(out.end(), r.begin(), r.end());
                return out;
            }
            case GraphPattern::Kind::Optional: {
                Sols left = eval(p->left, g, seeds);
                Sols out;
                for (const Sol& mu : left) {
                    Sols ext = eval(p->right, g, {mu});
                    if (ext.empty()) out.push_back(mu);
                    else out.insert(out.end(), ext.begin(), ext.end());
                }
                return out;
            }
            case GraphPattern::Kind::Filter: {
                Sols sols = eval(p->left, g, seeds);
                Sols out;
                for (Sol& mu : sols)
                    if (eval_filter(p->filter, mu)) out.push_back(std::move(mu));
                return out;
            }
            case GraphPattern::Kind::NotExists: {
                Sols sols = eval(p->left, g, seeds);
                Sols out;
                for (Sol& mu : sols) {
                    if (eval(p->right, g, {mu}).empty()) out.push_back(std::move(mu));
                }
                return out;
            }
        }
        throw MalformedPattern("unknown pattern node");
    }

    // Extends `seed` by all BGP solutions over `ds`, appending to `out`.
    void eval_bgp(const std::vector<TriplePattern>& tps, const Dataset& ds,
                  const Sol& seed, Sols& out) {
        std::vector<const TriplePattern*> remaining;
        remaining.reserve(tps.size());
        for (const auto& tp : tps) remaining.push_back(&tp);
        Sols frontier{seed};
        while (!remaining.empty() && !frontier.empty()) {
            // Greedy: pick the pattern with the smallest estimated match count
            // under the current bindings (representative: first frontier row).
            std::size_t best = 0, best_cost = SIZE_MAX;
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                auto [cs, cp, co] = constants(*remaining[i], frontier.front());
                std::size_t cost = ds.count_estimate(cs, cp, co);
                if (cost < best_cost) {
                    best_cost = cost;
                    best = i;
                }
            }
            const TriplePattern& tp = *remaining[best];
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
            Sols next;
            for (const Sol& mu : frontier) {
                auto [cs, cp, co] = constants(tp, mu);
                for (const Triple& t : ds.match(cs, cp, co)) {
                    Sol ext = mu;
                    if (try_bind(tp.s, t.s, ext) && try_bind(tp.p, t.p, ext) &&
                        try_bind(tp.o, t.o, ext))
                        next.push_back(std::move(ext));
                }
            }
            frontier = std::move(next);
        }
        out.insert(out.end(), frontier.begin(), frontier.end());
    }

    std::tuple<std::optional<TermId>, std::optional<TermId>, std::optional<TermId>>
    constants(const TriplePattern& tp, const Sol& mu) const {
        auto one = [&](const PatternTerm& t) -> std::optional<TermId> {
            if (auto* id = std::get_if<TermId>(&t)) return *id;
            TermId v = mu[index_.at(std::get<Variable>(t).name)];
            if (v != kNoTerm) return v;
            return std::nullopt;
        };
        return {one(tp.s), one(tp.p), one(tp.o)};
    }

    bool try_bind(const PatternTerm& t, TermId value, Sol& mu) const {
        if (auto* id = std::get_if<TermId>(&t)) return *id == value;
        TermId& slot = mu[index_.at(std::get<Variable>(t).name)];
        if (slot == kNoTerm) {
            slot = value;
            return true;
        }
        return slot == value;
    }

    // Unbound operand => false (error-as-false).
    bool eval_filter(const FilterPtr& f, const Sol& mu) const {
        switch (f->op) {
            case FilterExpr::Op::And:
                for (const auto& c : f->children)
                    if (!eval_filter(c, mu)) return false;
                return true;
            case FilterExpr::Op::Or:
                for (const auto& c : f->children)
                    if (eval_filter(c, mu)) return true;
                return false;
            case FilterExpr::Op::Eq:
            case FilterExpr::Op::Neq: {
                auto value = [&](const PatternTerm& t) -> TermId {
                    if (auto* id = std::get_if<TermId>(&t)) return *id;
                    return mu[index_.at(std::get<Variable>(t).name)];
                };
                TermId l = value(f->lhs), r = value(f->rhs);
                if (l == kNoTerm || r == kNoTerm) return false;
                return f->op == FilterExpr::Op::Eq ? l == r : l != r;
            }
        }
        return false;
    }

    const EvalContext& ctx_;
    PatternPtr root_;
    std::vector<std::string> vars_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<const GraphPattern*, bool>> delta_scans_;
};

}  // namespace

std::vector<std::string> pattern_variables(const PatternPtr& gp) {
    std::vector<std::string> names;
    collect_vars(gp, names);
    return dedup_keep_order(std::move(names));
}

std::vector<std::string> filter_variables(const FilterPtr& f) {
    std::vector<std::string> names;
    collect_filter_vars(f, names);
    return dedup_keep_order(std::move(names));
}

std::set<Mapping> eval_triple_pattern(const TriplePattern& tp, const Dataset& ds) {
    std::set<Mapping> out;
    // Reuse the BGP machinery through a one-graph context would drag in the
    // delta computation; do it directly.
    auto one = [&](const PatternTerm& t) -> std::optional<TermId> {
        if (auto* id = std::get_if<TermId>(&t)) return *id;
        return std::nullopt;
    };
    for (const Triple& t : ds.match(one(tp.s), one(tp.p), one(tp.o))) {
        Mapping mu;
        bool ok = true;
        auto bind = [&](const PatternTerm& pt, TermId v) {
            if (auto* var = std::get_if<Variable>(&pt)) {
                auto [it, inserted] = mu.emplace(var->name, v);
                if (!inserted && it->second != v) ok = false;
            }
        };
        bind(tp.s, t.s);
        bind(tp.p, t.p);
        bind(tp.o, t.o);
        if (ok) out.insert(std::move(mu));
    }
    return out;
}

std::set<Mapping> eval_graph_pattern(const PatternPtr& gp, const EvalContext& ctx) {
    Evaluator ev(ctx, gp);
    std::set<Mapping> out;
    for (const auto& sol : ev.run()) {
        Mapping mu;
        for (std::size_t i = 0; i < ev.vars().size(); ++i)
            if (sol[i] != kNoTerm) mu.emplace(ev.vars()[i], sol[i]);
        out.insert(std::move(mu));
    }
    return out;
}

}  // namespace rdfdelta
