#pragma once

#include <string>

#include "rdfdelta/detection.hpp"

namespace rdfdelta {

struct UnknownChange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The emitted ontology of changes: definition classes (schema level) and
// detection/association individuals (instance level).
class ChangesOntology {
  public:
    explicit ChangesOntology(TermTablePtr table)
        : table_(std::move(table)),
          schema_(DatasetBuilder(table_).build("schema")),
          instances_(DatasetBuilder(table_).build("instances")) {}

    const Dataset& schema() const { return schema_; }
    const Dataset& instances() const { return instances_; }
    void set_schema(Dataset schema) { schema_ = std::move(schema); }
    void merge_instances(const Dataset& more);

    // Schema + instances as one graph for EvalContext.ontology.
    Dataset combined(std::string label = "ontology") const;
    const TermTablePtr& table() const { return table_; }

  private:
    TermTablePtr table_;
    Dataset schema_;
    Dataset instances_;
};

// Fig. 2/3 shapes: classes under co:Simple_Change / co:Complex_Change,
// descriptive names, parameter properties, priorities, consumed-change links,
// and the serialized detection pattern of each complex change.
Dataset emit_schema(const ChangeLanguage& lang);

// Fig. 4/5 shapes: one individual per instantiation (type, version pair,
// parameter values; plus co:consumes edges for complex instantiations).
// Output triple count = Σ (3 + arity + consumed-count).
Dataset emit_detections(const std::set<ChangeInstantiation>& instantiations,
                        const ConsumptionMap& consumption, const ChangeLanguage& lang);

// Fig. 6 shape: one individual per ground association.
Dataset emit_associations(const AssociationStore& assoc,
                          const std::pair<std::string, std::string>& version_pair,
                          TermTablePtr table);

struct IngestStats {
    std::size_t triples_written = 0;
    std::size_t triples_merged = 0;  // net new triples in the store
    double write_seconds = 0.0;      // sink write (tail of the "triple creation" phase)
    double merge_seconds = 0.0;      // bulk merge into the store ("triple ingestion")
};

// §5 pipeline tail: serialize `triples` to `sink` as canonical N-Triples, then
// bulk-merge them into store.instances. Phase durations reported separately.
IngestStats ingest(const Dataset& triples, const std::string& sink,
                   ChangesOntology& store);

// Compact serialization of a compiled pattern (stored on complex classes).
std::string serialize_pattern(const PatternPtr& p, const TermTable& table);

}  // namespace rdfdelta
