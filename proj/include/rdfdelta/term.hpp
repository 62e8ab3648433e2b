#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rdfdelta {

using TermId = std::uint32_t;
inline constexpr TermId kNoTerm = 0xFFFFFFFFu;

enum class TermKind : std::uint8_t { Uri, Literal };

// Decoded view of a term. The engine works on interned TermIds; this struct is
// only used at the edges (parsing, display, tests).
struct Term {
    TermKind kind = TermKind::Uri;
    std::string lexical;   // IRI string (no angle brackets) or literal lexical form
    std::string language;  // literal language tag, may be empty
    std::string datatype;  // literal datatype IRI, may be empty

    static Term uri(std::string iri);
    static Term literal(std::string lexical, std::string language = {},
                        std::string datatype = {});

    bool operator==(const Term&) const = default;
};

// Escapes a literal lexical form / IRI for N-Triples output.
std::string ntriples_escape(std::string_view s);

// Canonical N-Triples serialization of a term ("<iri>", "\"x\"@en", ...).
std::string term_to_ntriples(const Term& t);

// Interning pool shared by every dataset of one run, so ids are comparable
// across version graphs.
class TermTable {
  public:
    TermId intern_uri(std::string_view iri);
    TermId intern_literal(std::string_view lexical, std::string_view language = {},
                          std::string_view datatype = {});
    TermId intern(const Term& t);

    // Returns kNoTerm when absent (does not intern).
    TermId find(const Term& t) const;

    TermKind kind(TermId id) const { return kinds_.at(id); }
    // Canonical N-Triples form; also the key used for lexicographic ordering.
    const std::string& ntriples(TermId id) const { return forms_.at(id); }
    Term decode(TermId id) const;
    std::size_t size() const { return forms_.size(); }

  private:
    TermId intern_form(std::string form, TermKind kind);

    std::deque<std::string> forms_;  // deque: element addresses are stable
    std::vector<TermKind> kinds_;
    std::unordered_map<std::string_view, TermId> index_;  // views into forms_
};

using TermTablePtr = std::shared_ptr<TermTable>;

}  // namespace rdfdelta
