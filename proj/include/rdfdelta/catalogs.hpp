#pragma once

#include "rdfdelta/changes.hpp"

namespace rdfdelta {

enum class CatalogId { RdfModel, DataCube };

// Built-in simple-change language for the plain RDF model (22 changes).
ChangeLanguage rdf_catalog(TermTablePtr table);

// Built-in simple-change language for the Data Cube multi-dimensional model
// (58 changes). The Unknown/Generic entries are the completeness catch-alls.
ChangeLanguage datacube_catalog(TermTablePtr table);

ChangeLanguage make_catalog(CatalogId id, TermTablePtr table);

}  // namespace rdfdelta
