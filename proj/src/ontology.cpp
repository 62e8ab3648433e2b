#include "rdfdelta/ontology.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <set>

#include "rdfdelta/names.hpp"
#include "rdfdelta/ntriples.hpp"
#include "rdfdelta/vocab.hpp"

namespace rdfdelta {
namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string pattern_term_str(const PatternTerm& t, const TermTable& table) {
    if (auto* id = std::get_if<TermId>(&t)) return table.ntriples(*id);
    return "?" + std::get<Variable>(t).name;
}

std::string filter_str(const FilterPtr& f, const TermTable& table) {
    switch (f->op) {
        case FilterExpr::Op::Eq:
            return "(" + pattern_term_str(f->lhs, table) + " = " +
                   pattern_term_str(f->rhs, table) + ")";
        case FilterExpr::Op::Neq:
            return "(" + pattern_term_str(f->lhs, table) + " != " +
                   pattern_term_str(f->rhs, table) + ")";
        case FilterExpr::Op::And:
        case FilterExpr::Op::Or: {
            std::string sep = f->op == FilterExpr::Op::And ? " && " : " || ";
            std::string out = "(";
            for (std::size_t i = 0; i < f->children.size(); ++i) {
                if (i) out += sep;
                out += filter_str(f->children[i], table);
            }
            return out + ")";
        }
    }
    return "";
}

const char* graph_name(GraphSel g) {
    switch (g) {
        case GraphSel::Old: return "OLD";
        case GraphSel::New: return "NEW";
        case GraphSel::Ontology: return "ONTOLOGY";
    }
    return "?";
}

}  // namespace

std::string serialize_pattern(const PatternPtr& p, const TermTable& table) {
    if (!p) return "{}";
    switch (p->kind) {
        case GraphPattern::Kind::Empty:
            return "{}";
        case GraphPattern::Kind::Basic: {
            std::string out = "{";
            for (std::size_t i = 0; i < p->triples.size(); ++i) {
                if (i) out += " ";
                const auto& tp = p->triples[i];
                out += pattern_term_str(tp.s, table) + " " +
                       pattern_term_str(tp.p, table) + " " +
                       pattern_term_str(tp.o, table) + " .";
            }
            return out + "}";
        }
        case GraphPattern::Kind::Scoped:
            return std::string("GRAPH ") + graph_name(p->graph) + " " +
                   serialize_pattern(p->left, table);
        case GraphPattern::Kind::Join:
            return serialize_pattern(p->left, table) + " " +
                   serialize_pattern(p->right, table);
        case GraphPattern::Kind::Union:
            return "{" + serialize_pattern(p->left, table) + " UNION " +
                   serialize_pattern(p->right, table) + "}";
        case GraphPattern::Kind::Optional:
            return serialize_pattern(p->left, table) + " OPTIONAL " +
                   serialize_pattern(p->right, table);
        case GraphPattern::Kind::Filter:
            return serialize_pattern(p->left, table) + " FILTER " +
                   filter_str(p->filter, table);
        case GraphPattern::Kind::NotExists:
            return serialize_pattern(p->left, table) + " FILTER NOT EXISTS " +
                   serialize_pattern(p->right, table);
    }
    return "{}";
}

void ChangesOntology::merge_instances(const Dataset& more) {
    DatasetBuilder b(table_);
    b.add_all(instances_);
    b.add_all(more);
    instances_ = std::move(b).build("instances");
}

Dataset ChangesOntology::combined(std::string label) const {
    DatasetBuilder b(table_);
    b.add_all(schema_);
    b.add_all(instances_);
    return std::move(b).build(std::move(label));
}

namespace {

// A parameter is Resource-kinded if it occurs in a subject or predicate
// position anywhere in the definition; otherwise Literal-kinded.
bool param_is_resource(const std::string& name, const std::vector<TriplePattern>& tps,
                       const std::vector<PatternPtr>& conds) {
    auto occurs_sp = [&](const TriplePattern& tp) {
        for (const PatternTerm* t : {&tp.s, &tp.p})
            if (auto* v = std::get_if<Variable>(t); v && v->name == name) return true;
        return false;
    };
    for (const auto& tp : tps)
        if (occurs_sp(tp)) return true;
    std::function<bool(const PatternPtr&)> walk = [&](const PatternPtr& p) -> bool {
        if (!p) return false;
        for (const auto& tp : p->triples)
            if (occurs_sp(tp)) return true;
        return walk(p->left) || walk(p->right);
    };
    for (const auto& c : conds)
        if (walk(c)) return true;
    return false;
}

void emit_param_properties(DatasetBuilder& b, const std::string& change_name,
                           const std::vector<Variable>& params,
                           const std::vector<TriplePattern>& tps,
                           const std::vector<PatternPtr>& conds) {
    TermTable& tt = *b.table();
    const TermId rdf_type = tt.intern_uri(vocab::kRdfType);
    const TermId rdf_property = tt.intern_uri(vocab::kRdfProperty);
    const TermId rdfs_domain = tt.intern_uri(vocab::kRdfsDomain);
    const TermId rdfs_range = tt.intern_uri(vocab::kRdfsRange);
    const TermId rdfs_label = tt.intern_uri(vocab::kRdfsLabel);
    const TermId cls = tt.intern_uri(names::change_class(change_name));
    for (std::size_t i = 0; i < params.size(); ++i) {
        const TermId prop = tt.intern_uri(names::param_property(change_name, i + 1));
        b.add(prop, rdf_type, rdf_property);
        b.add(prop, rdfs_domain, cls);
        b.add(prop, rdfs_range,
              tt.intern_uri(param_is_resource(params[i].name, tps, conds)
                                ? vocab::kRdfsResource
                                : vocab::kRdfsLiteral));
        b.add(prop, rdfs_label, tt.intern_literal(params[i].name));
    }
}

}  // namespace

Dataset emit_schema(const ChangeLanguage& lang) {
    TermTable& tt = *lang.table();
    DatasetBuilder b(lang.table());
    const TermId rdf_type = tt.intern_uri(vocab::kRdfType);
    const TermId rdfs_class = tt.intern_uri(vocab::kRdfsClass);
    const TermId rdfs_subclass = tt.intern_uri(vocab::kRdfsSubClassOf);
    const TermId cname = tt.intern_uri(names::prop_cname());

    // Fixed upper level.
    const TermId simple_cls = tt.intern_uri(names::simple_change_class());
    const TermId complex_cls = tt.intern_uri(names::complex_change_class());
    const TermId assoc_cls = tt.intern_uri(names::association_class());
    b.add(simple_cls, rdf_type, rdfs_class);
    b.add(complex_cls, rdf_type, rdfs_class);
    b.add(assoc_cls, rdf_type, rdfs_class);

    for (const auto& [name, entry] : lang.simple()) {
        const TermId cls = tt.intern_uri(names::change_class(name));
        b.add(cls, rdfs_subclass, simple_cls);
        b.add(cls, cname, tt.intern_literal(name));
        std::vector<TriplePattern> tps = entry.def.delta_plus;
        tps.insert(tps.end(), entry.def.delta_minus.begin(), entry.def.delta_minus.end());
        emit_param_properties(b, name, entry.def.params, tps,
                              {entry.def.cond_old, entry.def.cond_new});
    }
    for (const auto& [name, entry] : lang.complex()) {
        const TermId cls = tt.intern_uri(names::change_class(name));
        b.add(cls, rdfs_subclass, complex_cls);
        b.add(cls, cname, tt.intern_literal(name));
        b.add(cls, tt.intern_uri(names::prop_priority()),
              tt.intern_literal(std::to_string(entry.def.priority)));
        for (const auto& ref : entry.def.consumed)
            b.add(cls, tt.intern_uri(names::prop_consumed_change()),
                  tt.intern_uri(names::change_class(ref.change)));
        b.add(cls, tt.intern_uri(names::prop_detection_query()),
              tt.intern_literal(serialize_pattern(entry.pattern, tt)));
        emit_param_properties(b, name, entry.def.params, {},
                              {entry.def.cond_old, entry.def.cond_new});
    }
    return std::move(b).build("schema");
}

Dataset emit_detections(const std::set<ChangeInstantiation>& instantiations,
                        const ConsumptionMap& consumption, const ChangeLanguage& lang) {
    TermTable& tt = *lang.table();
    DatasetBuilder b(lang.table());
    const TermId rdf_type = tt.intern_uri(vocab::kRdfType);
    const TermId p_old = tt.intern_uri(names::prop_old_version());
    const TermId p_new = tt.intern_uri(names::prop_new_version());
    const TermId p_consumes = tt.intern_uri(names::prop_consumes());

    std::set<std::string> seen_ids;
    for (const ChangeInstantiation& inst : instantiations) {
        const bool is_complex = inst.kind == ChangeKind::Complex;
        if ((is_complex && !lang.find_complex(inst.change_name)) ||
            (!is_complex && !lang.find_simple(inst.change_name)))
            throw UnknownChange("instantiation of unregistered change: " +
                                inst.change_name);
        if (!seen_ids.insert(inst.stable_id).second)
            throw std::logic_error("stable_id collision on " + inst.canonical);
        const TermId ind = tt.intern_uri(names::detection_individual(inst.stable_id));
        b.add(ind, rdf_type, tt.intern_uri(names::change_class(inst.change_name)));
        b.add(ind, p_old, tt.intern_uri(names::version_iri(inst.version_pair.first)));
        b.add(ind, p_new, tt.intern_uri(names::version_iri(inst.version_pair.second)));
        for (std::size_t i = 0; i < inst.args.size(); ++i)
            b.add(ind, tt.intern_uri(names::param_property(inst.change_name, i + 1)),
                  inst.args[i]);
        if (is_complex) {
            // co:consumes edges: the simple instantiations this complex consumed.
            for (const auto& [simple, consumers] : consumption.simple_consumers)
                if (consumers.count(inst))
                    b.add(ind, p_consumes,
                          tt.intern_uri(names::detection_individual(simple.stable_id)));
        }
    }
    return std::move(b).build("detections");
}

Dataset emit_associations(const AssociationStore& assoc,
                          const std::pair<std::string, std::string>& version_pair,
                          TermTablePtr table) {
    TermTable& tt = *table;
    DatasetBuilder b(table);
    const TermId rdf_type = tt.intern_uri(vocab::kRdfType);
    const TermId assoc_cls = tt.intern_uri(names::association_class());
    const TermId p_old = tt.intern_uri(names::prop_old_version());
    const TermId p_new = tt.intern_uri(names::prop_new_version());
    const TermId p_old_value = tt.intern_uri(names::prop_old_value());
    const TermId p_new_value = tt.intern_uri(names::prop_new_value());
    const TermId v_old = tt.intern_uri(names::version_iri(version_pair.first));
    const TermId v_new = tt.intern_uri(names::version_iri(version_pair.second));

    for (const GroundAssociation& a : assoc.associations) {
        std::string key = "assoc:";
        for (TermId t : a.from) key += tt.ntriples(t) + "|";
        key += "->";
        for (TermId t : a.to) key += tt.ntriples(t) + "|";
        key += "@" + version_pair.first + "->" + version_pair.second;
        const TermId ind = tt.intern_uri(names::association_individual(fnv128_hex(key)));
        b.add(ind, rdf_type, assoc_cls);
        b.add(ind, p_old, v_old);
        b.add(ind, p_new, v_new);
        for (TermId t : a.from) b.add(ind, p_old_value, t);
        for (TermId t : a.to) b.add(ind, p_new_value, t);
    }
    return std::move(b).build("associations");
}

IngestStats ingest(const Dataset& triples, const std::string& sink,
                   ChangesOntology& store) {
    IngestStats stats;
    auto t0 = std::chrono::steady_clock::now();
    {
        std::ofstream out(sink, std::ios::binary);
        if (!out) throw IoError("cannot open sink file for writing: " + sink);
        serialize_ntriples(triples, out);
        if (!out) throw IoError("write failed: " + sink);
    }
    stats.triples_written = triples.size();
    stats.write_seconds = seconds_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    const std::size_t before = store.instances().size();
    store.merge_instances(triples);
    stats.triples_merged = store.instances().size() - before;
    stats.merge_seconds = seconds_since(t1);
    return stats;
}

}  // namespace rdfdelta
