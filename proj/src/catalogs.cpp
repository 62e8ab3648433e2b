#include "rdfdelta/catalogs.hpp"

#include "rdfdelta/vocab.hpp"

namespace rdfdelta {
namespace {

// Shared shorthand for transcribing the built-in catalog tables.
struct CatalogBuilder {
    explicit CatalogBuilder(TermTablePtr table)
        : lang(table), tt(*table), type(tt.intern_uri(vocab::kRdfType)) {}

    PatternTerm uri(const char* iri) { return tt.intern_uri(iri); }
    static Variable var(const char* name) { return Variable{name}; }

    TriplePattern typed(PatternTerm x, PatternTerm cls) { return {x, type, cls}; }

    // One Add/Delete (or Attach/Detach) pair sharing a delta shape. `cond` is
    // attached per the table rows: cond_for_add names the row used by the add
    // side (true = cond_new); the delete side uses the mirrored row unless
    // `same_row_for_delete` keeps it in cond_new (as the RDF tables do).
    void pair(std::string add_name, std::string del_name, std::vector<Variable> params,
              std::vector<TriplePattern> delta, PatternPtr cond = nullptr,
              bool same_row_for_delete = false) {
        SimpleChangeDef add;
        add.name = std::move(add_name);
        add.params = params;
        add.delta_plus = delta;
        add.cond_new = cond ? cond : p_empty();
        add.cond_old = p_empty();
        lang.register_simple(std::move(add));

        SimpleChangeDef del;
        del.name = std::move(del_name);
        del.params = std::move(params);
        del.delta_minus = std::move(delta);
        if (same_row_for_delete) {
            del.cond_new = cond ? cond : p_empty();
            del.cond_old = p_empty();
        } else {
            del.cond_old = cond ? cond : p_empty();
            del.cond_new = p_empty();
        }
        lang.register_simple(std::move(del));
    }

    ChangeLanguage lang;
    TermTable& tt;
    const TermId type;
};

}  // namespace

ChangeLanguage rdf_catalog(TermTablePtr table) {
    CatalogBuilder b(std::move(table));
    const auto v = CatalogBuilder::var;
    const PatternTerm cls = b.uri(vocab::kRdfsClass);
    const PatternTerm prop = b.uri(vocab::kRdfProperty);
    const PatternTerm res = b.uri(vocab::kRdfsResource);
    const PatternTerm sub_class = b.uri(vocab::kRdfsSubClassOf);
    const PatternTerm sub_prop = b.uri(vocab::kRdfsSubPropertyOf);
    const PatternTerm domain = b.uri(vocab::kRdfsDomain);
    const PatternTerm range = b.uri(vocab::kRdfsRange);
    const PatternTerm comment = b.uri(vocab::kRdfsComment);
    const PatternTerm label = b.uri(vocab::kRdfsLabel);
    const PatternTerm rdf_type = PatternTerm{b.type};

    b.pair("Add_Type_Class", "Delete_Type_Class", {v("a")}, {b.typed(v("a"), cls)});
    b.pair("Add_Type_Property", "Delete_Type_Property", {v("a")},
           {b.typed(v("a"), prop)});
    b.pair("Add_Type_Individual", "Delete_Type_Individual", {v("a")},
           {b.typed(v("a"), res)});

    b.pair("Add_Superclass", "Delete_Superclass", {v("a"), v("b")},
           {{v("a"), sub_class, v("b")}},
           p_bgp({b.typed(v("a"), cls), b.typed(v("b"), cls)}),
           /*same_row_for_delete=*/true);
    b.pair("Add_Superproperty", "Delete_Superproperty", {v("a"), v("b")},
           {{v("a"), sub_prop, v("b")}},
           p_bgp({b.typed(v("a"), prop), b.typed(v("b"), prop)}),
           /*same_row_for_delete=*/true);

    b.pair("Add_Type_To_Individual", "Delete_Type_From_Individual", {v("a"), v("b")},
           {{v("a"), rdf_type, v("b")}},
           p_filter(p_empty(), f_and({f_neq(v("b"), cls), f_neq(v("b"), prop),
                                      f_neq(v("b"), res)})),
           /*same_row_for_delete=*/true);

    b.pair("Add_Property_Instance", "Delete_Property_Instance",
           {v("a1"), v("b"), v("a2")}, {{v("a1"), v("b"), v("a2")}},
           p_filter(p_empty(),
                    f_and({f_neq(v("b"), sub_class), f_neq(v("b"), sub_prop),
                           f_neq(v("b"), rdf_type), f_neq(v("b"), comment),
                           f_neq(v("b"), label), f_neq(v("b"), domain),
                           f_neq(v("b"), range)})),
           /*same_row_for_delete=*/true);

    b.pair("Add_Domain", "Delete_Domain", {v("a"), v("b")}, {{v("a"), domain, v("b")}},
           p_bgp({b.typed(v("a"), prop)}), /*same_row_for_delete=*/true);
    b.pair("Add_Range", "Delete_Range", {v("a"), v("b")}, {{v("a"), range, v("b")}},
           p_bgp({b.typed(v("a"), prop)}), /*same_row_for_delete=*/true);

    b.pair("Add_Comment", "Delete_Comment", {v("a"), v("b")},
           {{v("a"), comment, v("b")}});
    b.pair("Add_Label", "Delete_Label", {v("a"), v("b")}, {{v("a"), label, v("b")}});

    return std::move(b.lang);
}

ChangeLanguage datacube_catalog(TermTablePtr table) {
    CatalogBuilder b(std::move(table));
    const auto v = CatalogBuilder::var;
    const PatternTerm dim_prop = b.uri(vocab::kQbDimensionProperty);
    const PatternTerm meas_prop = b.uri(vocab::kQbMeasureProperty);
    const PatternTerm attr_prop = b.uri(vocab::kQbAttributeProperty);
    const PatternTerm coded_prop = b.uri(vocab::kQbCodedProperty);
    const PatternTerm dsd = b.uri(vocab::kQbDataStructureDefinition);
    const PatternTerm hcl = b.uri(vocab::kQbHierarchicalCodeList);
    const PatternTerm observation = b.uri(vocab::kQbObservation);
    const PatternTerm attribute = b.uri(vocab::kQbAttribute);
    const PatternTerm code_list = b.uri(vocab::kQbCodeList);
    const PatternTerm component = b.uri(vocab::kQbComponent);
    const PatternTerm component_prop = b.uri(vocab::kQbComponentProperty);
    const PatternTerm dimension = b.uri(vocab::kQbDimension);
    const PatternTerm measure = b.uri(vocab::kQbMeasure);
    const PatternTerm data_set = b.uri(vocab::kQbDataSet);
    const PatternTerm structure = b.uri(vocab::kQbStructure);
    const PatternTerm skos_concept = b.uri(vocab::kSkosConcept);
    const PatternTerm scheme = b.uri(vocab::kSkosConceptScheme);
    const PatternTerm in_scheme = b.uri(vocab::kSkosInScheme);
    const PatternTerm broader = b.uri(vocab::kSkosBroaderTransitive);
    const PatternTerm range = b.uri(vocab::kRdfsRange);
    const PatternTerm label = b.uri(vocab::kRdfsLabel);
    const PatternTerm rdf_type = PatternTerm{b.type};

    auto is_dimension = [&](const char* x) { return p_bgp({b.typed(v(x), dim_prop)}); };
    auto is_measure = [&](const char* x) { return p_bgp({b.typed(v(x), meas_prop)}); };
    auto not_scheme = [&](const char* x) {
        return p_not_exists(p_empty(), p_bgp({b.typed(v(x), scheme)}));
    };

    // Entity typings.
    b.pair("Add_Dimension", "Delete_Dimension", {v("d")}, {b.typed(v("d"), dim_prop)});
    b.pair("Add_Observation", "Delete_Observation", {v("o")},
           {b.typed(v("o"), observation)});
    b.pair("Add_Codelist", "Delete_Codelist", {v("c")}, {b.typed(v("c"), scheme)});
    b.pair("Add_Hierarchy", "Delete_Hierarchy", {v("h")}, {b.typed(v("h"), hcl)},
           not_scheme("h"));
    b.pair("Add_Instance", "Delete_Instance", {v("i")}, {b.typed(v("i"), skos_concept)});
    b.pair("Add_Measure", "Delete_Measure", {v("m")}, {b.typed(v("m"), meas_prop)});
    b.pair("Add_Fact_Table", "Delete_Fact_Table", {v("ft")}, {b.typed(v("ft"), dsd)});
    b.pair("Add_Attribute", "Delete_Attribute", {v("attr")},
           {b.typed(v("attr"), attr_prop)});

    // Dimension attachments.
    b.pair("Attach_Datatype_to_Dimension", "Detach_Datatype_from_Dimension",
           {v("d"), v("t")}, {{v("d"), range, v("t")}}, is_dimension("d"));
    b.pair("Attach_Attr_to_Dimension", "Detach_Attr_from_Dimension",
           {v("d"), v("attr")}, {{v("d"), attribute, v("attr")}}, is_dimension("d"));
    b.pair("Attach_Codelist_to_Dimension", "Detach_Codelist_from_Dimension",
           {v("d"), v("c")}, {{v("d"), code_list, v("c")}});
    b.pair("Attach_Hierarchy_to_Dimension", "Detach_Hierarchy_from_Dimension",
           {v("d"), v("h")}, {{v("d"), code_list, v("h")}},
           p_not_exists(p_bgp({b.typed(v("h"), hcl)}), p_bgp({b.typed(v("h"), scheme)})));

    // Observation structure.
    b.pair("Attach_Observation_to_FT", "Detach_Observation_from_FT",
           {v("o"), v("ft")},
           {{v("o"), data_set, v("ds")}, {v("ds"), structure, v("ft")}});
    b.pair("Attach_Observation_to_Dataset", "Detach_Observation_from_Dataset",
           {v("o"), v("ds")}, {{v("o"), data_set, v("ds")}});
    b.pair("Add_Measure_Value_to_Observation", "Delete_Measure_Value_from_Observation",
           {v("o"), v("m"), v("v")},
           {{v("o"), data_set, v("ds")},
            {v("ds"), structure, v("ft")},
            {v("ft"), component, v("cs")},
            {v("cs"), measure, v("m")},
            {v("m"), range, v("v")}},
           is_measure("m"));
    b.pair("Add_Dimension_Value_to_Observation",
           "Delete_Dimension_Value_from_Observation", {v("o"), v("d"), v("v")},
           {{v("o"), data_set, v("ds")},
            {v("ds"), structure, v("ft")},
            {v("ft"), component, v("cs")},
            {v("cs"), dimension, v("d")},
            {v("d"), range, v("v")}},
           is_dimension("d"));

    // Codelists, hierarchies, instances.
    b.pair("Attach_Instance_to_Codelist", "Detach_Instance_from_Codelist",
           {v("c"), v("i")}, {{v("i"), in_scheme, v("c")}},
           p_bgp({b.typed(v("c"), scheme)}));
    b.pair("Attach_Instance_to_Hierarchy", "Detach_Instance_from_Hierarchy",
           {v("h"), v("i")}, {{v("i"), in_scheme, v("h")}},
           p_bgp({b.typed(v("h"), hcl)}));
    b.pair("Attach_Instance_to_Parent", "Detach_Instance_from_Parent",
           {v("i"), v("p")}, {{v("i"), broader, v("p")}});

    // Measures and fact tables.
    b.pair("Attach_Type_To_Measure", "Detach_Type_From_Measure", {v("m"), v("t")},
           {{v("m"), range, v("t")}}, is_measure("m"));
    b.pair("Attach_Attr_to_Measure", "Detach_Attr_from_Measure", {v("attr"), v("m")},
           {{v("m"), attribute, v("attr")}}, is_measure("m"));
    b.pair("Attach_Measure_to_Fact_Table", "Detach_Measure_from_Fact_Table",
           {v("ft"), v("m")},
           {{v("ft"), component, v("cs")}, {v("cs"), measure, v("m")}});
    b.pair("Attach_Dimension_to_Fact_Table", "Detach_Dimension_from_Fact_Table",
           {v("d"), v("ft")},
           {{v("ft"), component, v("cs")}, {v("cs"), dimension, v("d")}});

    // Scheme membership outside codelists/hierarchies.
    b.pair("Add_Inscheme", "Delete_Inscheme", {v("x"), v("s")},
           {{v("x"), in_scheme, v("s")}},
           p_not_exists(p_empty(),
                        p_union(p_bgp({b.typed(v("s"), scheme)}),
                                p_bgp({b.typed(v("s"), hcl)}))));

    b.pair("Add_Label", "Delete_Label", {v("s"), v("o")}, {{v("s"), label, v("o")}});

    // Catch-all: any predicate not claimed by a specific change above; type
    // triples of the vocabulary's own classes are excluded as well.
    {
        std::vector<FilterPtr> fs;
        for (const PatternTerm& p :
             {label, range, in_scheme, broader, code_list, component, dimension,
              measure, attribute, data_set, structure})
            fs.push_back(f_neq(v("p"), p));
        for (const PatternTerm& cls :
             {skos_concept, scheme, attr_prop, coded_prop, dim_prop, meas_prop, dsd, hcl,
              observation})
            fs.push_back(f_or({f_neq(v("p"), rdf_type), f_neq(v("o"), cls)}));
        b.pair("Add_Unknown_Property", "Delete_Unknown_Property",
               {v("s"), v("p"), v("o")}, {{v("s"), v("p"), v("o")}},
               p_filter(p_empty(), f_and(std::move(fs))));
    }

    // Catch-all range triples on subjects that are not measures or dimensions
    // (those are claimed by Attach_Type_To_Measure / Attach_Datatype_to_Dimension).
    b.pair("Add_Generic_Datatype", "Delete_Generic_Datatype", {v("x"), v("t")},
           {{v("x"), range, v("t")}},
           p_not_exists(p_not_exists(p_empty(), p_bgp({b.typed(v("x"), meas_prop)})),
                        p_bgp({b.typed(v("x"), dim_prop)})));

    b.pair("Add_Generic_Attribute", "Delete_Generic_Attribute", {v("x"), v("attr")},
           {{v("x"), attribute, v("attr")}},
           p_not_exists(p_empty(),
                        p_union(p_union(p_bgp({b.typed(v("attr"), dim_prop)}),
                                        p_bgp({b.typed(v("attr"), meas_prop)})),
                                p_bgp({b.typed(v("attr"), coded_prop)}))));

    b.pair("Add_Generic_Value_to_Observation", "Delete_Generic_Value_from_Observation",
           {v("o"), v("p"), v("v")},
           {{v("o"), data_set, v("ds")},
            {v("ds"), structure, v("ft")},
            {v("ft"), component, v("cs")},
            {v("cs"), component_prop, v("p")},
            {v("p"), range, v("v")}},
           p_not_exists(p_empty(), p_union(p_bgp({b.typed(v("p"), dim_prop)}),
                                           p_bgp({b.typed(v("p"), meas_prop)}))));

    return std::move(b.lang);
}

ChangeLanguage make_catalog(CatalogId id, TermTablePtr table) {
    return id == CatalogId::RdfModel ? rdf_catalog(std::move(table))
                                     : datacube_catalog(std::move(table));
}

}  // namespace rdfdelta
