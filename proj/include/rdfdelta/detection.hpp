#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rdfdelta/changes.hpp"

namespace rdfdelta {

enum class ChangeKind { Simple, Complex };

// Def. 2: a change with concrete arguments. `canonical` is the deterministic
// display/ordering key "Name(arg1,...)@old->new"; stable_id is its 128-bit hash.
struct ChangeInstantiation {
    std::string change_name;
    ChangeKind kind = ChangeKind::Simple;
    std::vector<TermId> args;
    std::pair<std::string, std::string> version_pair;  // (old label, new label)
    std::string canonical;
    std::string stable_id;

    bool operator==(const ChangeInstantiation& o) const { return canonical == o.canonical; }
    bool operator<(const ChangeInstantiation& o) const { return canonical < o.canonical; }
};

ChangeInstantiation make_instantiation(std::string change_name, ChangeKind kind,
                                       std::vector<TermId> args,
                                       std::pair<std::string, std::string> version_pair,
                                       const TermTable& table);

struct ConsumptionMap {
    // Def. 4: low-level triple -> simple instantiations consuming it.
    std::map<Triple, std::set<ChangeInstantiation>> triple_consumers;
    // Def. 9: simple instantiation -> complex instantiations consuming it.
    std::map<ChangeInstantiation, std::set<ChangeInstantiation>> simple_consumers;
};

struct GroundAssociation {
    std::vector<TermId> from;  // sorted, distinct
    std::vector<TermId> to;
    auto operator<=>(const GroundAssociation&) const = default;
};

// A^{Vold,Vnew}: ground associations provided as input for one version pair.
struct AssociationStore {
    std::vector<GroundAssociation> associations;
};

struct DetectionReport {
    std::set<ChangeInstantiation> simple_detected;
    std::set<ChangeInstantiation> complex_detected;
    ConsumptionMap consumption;
    std::set<Triple> unconsumed_delta;
    std::map<Triple, std::set<ChangeInstantiation>> ambiguous_delta;
    double creation_seconds = 0.0;
    double ingestion_seconds = 0.0;
    std::map<std::string, std::size_t> counts;
    std::vector<std::string> warnings;
};

struct SimpleDetectionResult {
    std::set<ChangeInstantiation> detected;
    ConsumptionMap consumption;  // triple_consumers only
};

// Def. 3 detection over the compiled patterns; per-definition evaluations run
// on up to `threads` workers, merged in definition-name order (deterministic).
SimpleDetectionResult detect_simple(const ChangeLanguage& lang, const EvalContext& ctx,
                                    unsigned threads = 1);

// Def. 5: delta triples with no consumer.
std::set<Triple> check_completeness(const ConsumptionMap& consumption,
                                    const LowLevelDelta& delta);

// Def. 6: delta triples with >= 2 distinct consuming instantiations.
std::map<Triple, std::set<ChangeInstantiation>> check_unambiguity(
    const ConsumptionMap& consumption, const LowLevelDelta& delta);

struct ComplexDetectionResult {
    std::set<ChangeInstantiation> detected;
    // Additions for ConsumptionMap::simple_consumers.
    std::map<ChangeInstantiation, std::set<ChangeInstantiation>> simple_consumers;
    // complex instantiation -> consumed simple instantiations (for emission).
    std::map<ChangeInstantiation, std::set<ChangeInstantiation>> consumed_by_complex;
    std::vector<std::string> warnings;
};

struct MissingSimpleLayer : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Defs. 8-10: descending priority tiers over the ontology graph; each tier's
// co:consumes edges are materialized before lower tiers run.
ComplexDetectionResult detect_complex(const ChangeLanguage& lang, const EvalContext& ctx,
                                      const AssociationStore& assoc,
                                      unsigned threads = 1);

}  // namespace rdfdelta
