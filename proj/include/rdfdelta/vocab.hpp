#pragma once

// Pinned vocabulary IRIs used by the built-in catalogs and the changes ontology.

namespace rdfdelta::vocab {

inline constexpr const char* kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* kQb = "http://purl.org/linked-data/cube#";
inline constexpr const char* kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr const char* kCo = "http://rdf-delta.dev/co#";
inline constexpr const char* kVersions = "http://rdf-delta.dev/co/versions/";

inline constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* kRdfProperty = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
inline constexpr const char* kRdfsClass = "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr const char* kRdfsResource = "http://www.w3.org/2000/01/rdf-schema#Resource";
inline constexpr const char* kRdfsLiteral = "http://www.w3.org/2000/01/rdf-schema#Literal";
inline constexpr const char* kRdfsSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr const char* kRdfsSubPropertyOf = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr const char* kRdfsDomain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr const char* kRdfsRange = "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr const char* kRdfsComment = "http://www.w3.org/2000/01/rdf-schema#comment";
inline constexpr const char* kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";

inline constexpr const char* kQbDimensionProperty = "http://purl.org/linked-data/cube#DimensionProperty";
inline constexpr const char* kQbMeasureProperty = "http://purl.org/linked-data/cube#MeasureProperty";
inline constexpr const char* kQbAttributeProperty = "http://purl.org/linked-data/cube#AttributeProperty";
inline constexpr const char* kQbCodedProperty = "http://purl.org/linked-data/cube#CodedProperty";
inline constexpr const char* kQbDataStructureDefinition = "http://purl.org/linked-data/cube#DataStructureDefinition";
inline constexpr const char* kQbHierarchicalCodeList = "http://purl.org/linked-data/cube#HierarchicalCodeList";
inline constexpr const char* kQbObservation = "http://purl.org/linked-data/cube#Observation";
inline constexpr const char* kQbAttribute = "http://purl.org/linked-data/cube#attribute";
inline constexpr const char* kQbCodeList = "http://purl.org/linked-data/cube#codeList";
inline constexpr const char* kQbComponent = "http://purl.org/linked-data/cube#component";
inline constexpr const char* kQbComponentProperty = "http://purl.org/linked-data/cube#componentProperty";
inline constexpr const char* kQbDimension = "http://purl.org/linked-data/cube#dimension";
inline constexpr const char* kQbMeasure = "http://purl.org/linked-data/cube#measure";
inline constexpr const char* kQbDataSet = "http://purl.org/linked-data/cube#dataSet";
inline constexpr const char* kQbStructure = "http://purl.org/linked-data/cube#structure";

inline constexpr const char* kSkosConcept = "http://www.w3.org/2004/02/skos/core#Concept";
inline constexpr const char* kSkosConceptScheme = "http://www.w3.org/2004/02/skos/core#ConceptScheme";
inline constexpr const char* kSkosInScheme = "http://www.w3.org/2004/02/skos/core#inScheme";
inline constexpr const char* kSkosBroaderTransitive = "http://www.w3.org/2004/02/skos/core#broaderTransitive";

}  // namespace rdfdelta::vocab
