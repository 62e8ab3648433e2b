#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rdfdelta/catalogs.hpp"

namespace rdfdelta {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 2;  // --strict and diagnostics present
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitIo = 74;

struct RunConfig {
    std::string old_path;
    std::string new_path;
    CatalogId model = CatalogId::RdfModel;
    std::string complex_defs_path;   // optional
    std::string associations_path;   // optional
    std::string ontology_out_path;
    std::string report_out_path;
    unsigned threads = 1;
    bool timings = false;  // include wall-clock timings in the report
    bool strict = false;   // diagnostics (unconsumed/ambiguous/warnings) -> exit 2
};

// End-to-end detection: parse both versions, run the catalog (plus optional
// user-defined complex changes), write the ontology and the JSON report.
// Returns a process exit code; failures are described on `err`.
int run_detect(const RunConfig& config, std::ostream& err);

struct CheckConfig {
    CatalogId model = CatalogId::RdfModel;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t mutations = 12;     // delta mutations per generated pair
    bool inject_duplicate = false;  // adversarial: clones Add_Label under a new name
    unsigned threads = 1;
};

struct CheckOutcome {
    std::size_t trials = 0;
    std::size_t unconsumed = 0;  // total unconsumed delta triples across trials
    std::size_t ambiguous = 0;   // total ambiguous delta triples across trials
};

// Randomized completeness/unambiguity verification over synthetic pairs.
CheckOutcome run_check_trials(const CheckConfig& config, std::ostream& out);
int run_check(const CheckConfig& config, std::ostream& out);  // 0 iff no violations

struct BenchConfig {
    CatalogId model = CatalogId::RdfModel;
    std::vector<std::size_t> sizes;   // unchanged-dataset sizes
    std::vector<std::size_t> deltas;  // label-addition counts
    std::string csv_out;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct BenchRow {
    std::size_t base_size = 0;
    std::size_t delta_size = 0;
    std::size_t detections = 0;
    double prep_seconds = 0.0;      // delta computation / context setup
    double creation_seconds = 0.0;  // detection + triple creation + sink write
    double ingestion_seconds = 0.0; // bulk merge into the ontology store
};

// One row per (size, delta) grid cell; generation time is excluded.
std::vector<BenchRow> run_bench_grid(const BenchConfig& config);
int run_bench(const BenchConfig& config, std::ostream& out);

}  // namespace rdfdelta
