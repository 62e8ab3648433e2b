#include "rdfdelta/synth.hpp"

#include <random>
#include <string>
#include <vector>

#include "rdfdelta/vocab.hpp"

namespace rdfdelta::synth {
namespace {

// Shared machinery: a stable core present in both versions plus per-side
// mutation triples. The mutation menus only produce delta triples that exactly
// one catalog change consumes (see the per-case notes below).
struct Gen {
    Gen(std::uint64_t seed, TermTablePtr table)
        : rng(seed), tt(std::move(table)), type(tt->intern_uri(vocab::kRdfType)) {}

    std::mt19937_64 rng;
    TermTablePtr tt;
    TermId type;
    std::vector<Triple> shared, old_extra, new_extra;
    std::size_t fresh_n = 0;

    std::size_t pick(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    }
    bool coin() { return pick(2) == 0; }

    TermId uri(const std::string& local) {
        return tt->intern_uri("http://synth.example/" + local);
    }
    TermId fresh(const char* stem) {
        return uri(std::string(stem) + std::to_string(fresh_n++));
    }
    TermId lit(const std::string& lexical) { return tt->intern_literal(lexical); }
    TermId fresh_lit(const char* stem) {
        return lit(std::string(stem) + std::to_string(fresh_n++));
    }

    // A stable pool: n entities typed `cls` in both versions (kNoTerm = untyped).
    std::vector<TermId> pool(const char* stem, std::size_t n, TermId cls) {
        std::vector<TermId> out;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(uri(std::string(stem) + std::to_string(i)));
            if (cls != kNoTerm) shared.push_back({out.back(), type, cls});
        }
        return out;
    }
    TermId any(const std::vector<TermId>& p) { return p[pick(p.size())]; }

    // Routes a mutation triple to the version that makes it added (new-only)
    // or deleted (old-only).
    void emit(bool add_side, Triple t) {
        (add_side ? new_extra : old_extra).push_back(t);
    }

    VersionPair finish() {
        DatasetBuilder ob(tt), nb(tt);
        for (const Triple& t : shared) {
            ob.add(t);
            nb.add(t);
        }
        for (const Triple& t : old_extra) ob.add(t);
        for (const Triple& t : new_extra) nb.add(t);
        return {std::make_shared<const Dataset>(std::move(ob).build("v1")),
                std::make_shared<const Dataset>(std::move(nb).build("v2"))};
    }
};

VersionPair random_rdf_pair(std::uint64_t seed, TermTablePtr table,
                            std::size_t mutations) {
    Gen g(seed, std::move(table));
    const TermId cls = g.tt->intern_uri(vocab::kRdfsClass);
    const TermId prop = g.tt->intern_uri(vocab::kRdfProperty);
    const TermId res = g.tt->intern_uri(vocab::kRdfsResource);
    const TermId sub_class = g.tt->intern_uri(vocab::kRdfsSubClassOf);
    const TermId sub_prop = g.tt->intern_uri(vocab::kRdfsSubPropertyOf);
    const TermId domain = g.tt->intern_uri(vocab::kRdfsDomain);
    const TermId range = g.tt->intern_uri(vocab::kRdfsRange);
    const TermId comment = g.tt->intern_uri(vocab::kRdfsComment);
    const TermId label = g.tt->intern_uri(vocab::kRdfsLabel);

    auto classes = g.pool("class", 4, cls);
    auto props = g.pool("prop", 4, prop);
    auto inds = g.pool("ind", 4, res);
    auto plain = g.pool("plainp", 4, kNoTerm);  // non-RDFS predicates

    for (std::size_t i = 0; i < mutations; ++i) {
        bool add = g.coin();
        switch (g.pick(9)) {
            case 0:  // Add/Delete_Type_Class
                g.emit(add, {g.fresh("c"), g.type, cls});
                break;
            case 1:  // Add/Delete_Type_Property
                g.emit(add, {g.fresh("p"), g.type, prop});
                break;
            case 2:  // Add/Delete_Type_Individual
                g.emit(add, {g.fresh("i"), g.type, res});
                break;
            case 3:  // Add/Delete_Superclass: both ends typed Class in v2
                g.emit(add, {g.any(classes), sub_class, g.any(classes)});
                break;
            case 4:  // Add/Delete_Superproperty
                g.emit(add, {g.any(props), sub_prop, g.any(props)});
                break;
            case 5:  // Add/Delete_Domain|Range: subject typed Property in v2
                g.emit(add, {g.any(props), g.coin() ? domain : range, g.any(classes)});
                break;
            case 6:  // Add/Delete_Comment|Label
                g.emit(add, {g.any(inds), g.coin() ? comment : label,
                             g.fresh_lit("note")});
                break;
            case 7:  // Add/Delete_Property_Instance: non-reserved predicate
                g.emit(add, {g.any(inds), g.any(plain),
                             g.coin() ? g.any(inds) : g.fresh_lit("val")});
                break;
            default:  // Add_Type_To_Individual / Delete_Type_From_Individual
                g.emit(add, {g.coin() ? g.any(inds) : g.fresh("i"), g.type,
                             g.any(classes)});
                break;
        }
    }
    return g.finish();
}

VersionPair random_qb_pair(std::uint64_t seed, TermTablePtr table,
                           std::size_t mutations) {
    Gen g(seed, std::move(table));
    const TermId dim_prop = g.tt->intern_uri(vocab::kQbDimensionProperty);
    const TermId meas_prop = g.tt->intern_uri(vocab::kQbMeasureProperty);
    const TermId attr_prop = g.tt->intern_uri(vocab::kQbAttributeProperty);
    const TermId coded_prop = g.tt->intern_uri(vocab::kQbCodedProperty);
    const TermId dsd = g.tt->intern_uri(vocab::kQbDataStructureDefinition);
    const TermId hcl = g.tt->intern_uri(vocab::kQbHierarchicalCodeList);
    const TermId observation = g.tt->intern_uri(vocab::kQbObservation);
    const TermId attribute = g.tt->intern_uri(vocab::kQbAttribute);
    const TermId code_list = g.tt->intern_uri(vocab::kQbCodeList);
    const TermId component = g.tt->intern_uri(vocab::kQbComponent);
    const TermId dimension = g.tt->intern_uri(vocab::kQbDimension);
    const TermId measure = g.tt->intern_uri(vocab::kQbMeasure);
    const TermId data_set = g.tt->intern_uri(vocab::kQbDataSet);
    const TermId structure = g.tt->intern_uri(vocab::kQbStructure);
    const TermId skos_concept = g.tt->intern_uri(vocab::kSkosConcept);
    const TermId scheme = g.tt->intern_uri(vocab::kSkosConceptScheme);
    const TermId in_scheme = g.tt->intern_uri(vocab::kSkosInScheme);
    const TermId broader = g.tt->intern_uri(vocab::kSkosBroaderTransitive);
    const TermId range = g.tt->intern_uri(vocab::kRdfsRange);
    const TermId label = g.tt->intern_uri(vocab::kRdfsLabel);

    auto dims = g.pool("dim", 3, dim_prop);
    auto meas = g.pool("meas", 3, meas_prop);
    auto coded = g.pool("coded", 3, coded_prop);
    auto schemes = g.pool("scheme", 3, scheme);
    auto hiers = g.pool("hier", 3, hcl);
    auto concepts = g.pool("concept", 3, skos_concept);
    auto fts = g.pool("ft", 3, dsd);
    auto obs = g.pool("obs", 3, observation);
    auto untyped = g.pool("plain", 4, kNoTerm);
    // Stable dataset scaffold: never mutated (bare qb:structure triples have
    // no single-triple consumer in the catalog).
    auto dss = g.pool("ds", 3, kNoTerm);
    for (std::size_t i = 0; i < dss.size(); ++i)
        g.shared.push_back({dss[i], structure, fts[i]});

    const TermId typings[] = {dim_prop, observation, scheme,   hcl,
                              skos_concept, meas_prop, dsd, attr_prop};

    for (std::size_t i = 0; i < mutations; ++i) {
        bool add = g.coin();
        switch (g.pick(13)) {
            case 0:  // one of the eight Add/Delete typing changes
                g.emit(add, {g.fresh("x"), g.type, typings[g.pick(8)]});
                break;
            case 1:  // Add/Delete_Label
                g.emit(add, {g.any(concepts), label, g.fresh_lit("lbl")});
                break;
            case 2:  // Attach/Detach_Observation_to_Dataset
                g.emit(add, {g.fresh("o"), data_set, g.any(dss)});
                break;
            case 3:  // Attach/Detach_Instance_to_Codelist (scheme-typed target)
                g.emit(add, {g.any(concepts), in_scheme, g.any(schemes)});
                break;
            case 4:  // Attach/Detach_Instance_to_Hierarchy
                g.emit(add, {g.any(concepts), in_scheme, g.any(hiers)});
                break;
            case 5:  // Add/Delete_Inscheme (untyped target)
                g.emit(add, {g.any(concepts), in_scheme, g.any(untyped)});
                break;
            case 6:  // Attach/Detach_Instance_to_Parent
                g.emit(add, {g.any(concepts), broader, g.any(concepts)});
                break;
            case 7: {  // range: measure | dimension | untyped subject
                TermId s = g.any(g.pick(3) == 0   ? meas
                                 : g.pick(2) == 0 ? dims
                                                  : untyped);
                g.emit(add, {s, range, g.fresh("t")});
                break;
            }
            case 8:  // attribute: typed subject needs a coded attr; untyped
                     // subject needs an untyped attr (Generic_Attribute)
                if (g.coin())
                    g.emit(add, {g.coin() ? g.any(meas) : g.any(dims), attribute,
                                 g.any(coded)});
                else
                    g.emit(add, {g.any(untyped), attribute, g.any(untyped)});
                break;
            case 9:  // Attach/Detach_Codelist_to_Dimension (never HCL-typed)
                g.emit(add, {g.any(dims), code_list,
                             g.coin() ? g.any(schemes) : g.fresh("cl")});
                break;
            case 10: {  // Attach/Detach_Measure_to_Fact_Table (fresh spec node)
                TermId cs = g.fresh("cs");
                TermId ft = g.any(fts);
                g.emit(add, {ft, component, cs});
                g.emit(add, {cs, measure, g.any(meas)});
                break;
            }
            case 11: {  // Attach/Detach_Dimension_to_Fact_Table
                TermId cs = g.fresh("cs");
                TermId ft = g.any(fts);
                g.emit(add, {ft, component, cs});
                g.emit(add, {cs, dimension, g.any(dims)});
                break;
            }
            default:  // Add/Delete_Unknown_Property
                g.emit(add, {g.any(untyped), g.fresh("up"),
                             g.coin() ? g.any(untyped) : g.fresh_lit("v")});
                break;
        }
    }
    return g.finish();
}

}  // namespace

VersionPair random_pair(CatalogId model, std::uint64_t seed, TermTablePtr table,
                        std::size_t mutations) {
    return model == CatalogId::RdfModel
               ? random_rdf_pair(seed, std::move(table), mutations)
               : random_qb_pair(seed, std::move(table), mutations);
}

VersionPair scaled_pair(std::uint64_t seed, std::size_t base_size,
                        std::size_t delta_size, TermTablePtr table) {
    Gen g(seed, std::move(table));
    const TermId label = g.tt->intern_uri(vocab::kRdfsLabel);
    const std::string ns = std::to_string(seed) + "/";
    auto preds = g.pool((ns + "bp").c_str(), 16, kNoTerm);
    for (std::size_t i = 0; i < base_size; ++i)
        g.shared.push_back({g.uri(ns + "e" + std::to_string(i)), preds[i % 16],
                            g.lit("x" + std::to_string(i))});
    for (std::size_t i = 0; i < delta_size; ++i)
        g.new_extra.push_back({g.uri(ns + "le" + std::to_string(i)), label,
                               g.lit("l" + std::to_string(i))});
    return g.finish();
}

}  // namespace rdfdelta::synth
