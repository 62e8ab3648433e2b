#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rdfdelta/detection.hpp"

namespace rdfdelta {

// Malformed definition/association input (distinct from ChangeError, which
// covers semantically invalid definitions).
struct DefsParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Loads a complex-change definition document (JSON array; grammar documented
// in docs/formats.md) and registers every definition into `lang`.
// Returns the number of definitions registered.
std::size_t load_complex_defs(std::istream& in, ChangeLanguage& lang);
std::size_t load_complex_defs_file(const std::string& path, ChangeLanguage& lang);

// Loads a ground-association document (JSON array of {"old":[...],"new":[...]}).
AssociationStore load_associations(std::istream& in, TermTable& table);
AssociationStore load_associations_file(const std::string& path, TermTable& table);

}  // namespace rdfdelta
