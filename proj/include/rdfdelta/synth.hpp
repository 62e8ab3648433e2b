#pragma once

#include <cstdint>
#include <memory>

#include "rdfdelta/catalogs.hpp"
#include "rdfdelta/dataset.hpp"

namespace rdfdelta::synth {

struct VersionPair {
    std::shared_ptr<const Dataset> old_v;  // labeled "v1"
    std::shared_ptr<const Dataset> new_v;  // labeled "v2"
};

// Seeded random version pair over the given catalog's closed vocabulary. The
// mutation menu is restricted so that every delta triple is consumed by
// exactly one catalog change (used by the completeness/unambiguity harness).
VersionPair random_pair(CatalogId model, std::uint64_t seed, TermTablePtr table,
                        std::size_t mutations = 12);

// Benchmark/scaling fixture: `base_size` property-instance triples shared by
// both versions plus `delta_size` rdfs:label additions in the new version
// (each one Add_Label detection under either built-in catalog).
VersionPair scaled_pair(std::uint64_t seed, std::size_t base_size,
                        std::size_t delta_size, TermTablePtr table);

}  // namespace rdfdelta::synth
