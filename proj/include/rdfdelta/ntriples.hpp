#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rdfdelta/dataset.hpp"

namespace rdfdelta {

struct ParseError : std::runtime_error {
    enum class Kind { Syntax, BlankNode };

    ParseError(Kind k, std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          kind(k),
          line(line) {}

    Kind kind;
    std::size_t line;
};

Dataset parse_ntriples(std::istream& in, TermTablePtr table, std::string label = {});
Dataset parse_ntriples(std::string_view text, TermTablePtr table,
                       std::string label = {});

// Canonical form: one triple per line, '.' terminated, '\n' endings, lines
// sorted lexicographically by serialized (s,p,o).
void serialize_ntriples(const Dataset& ds, std::ostream& out);
std::string serialize_ntriples(const Dataset& ds);

}  // namespace rdfdelta
