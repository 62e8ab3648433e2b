#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rdfdelta {

// Deterministic IRI minting for the changes ontology (co: namespace). All
// functions are pure: no counters, no clocks.
namespace names {

// co: base and the fixed upper-level IRIs.
std::string co(std::string_view local);
std::string simple_change_class();   // co:Simple_Change
std::string complex_change_class();  // co:Complex_Change
std::string association_class();     // co:Association
std::string prop_cname();            // co:cname
std::string prop_priority();         // co:priority
std::string prop_detection_query();  // co:detection_query
std::string prop_consumed_change();  // co:consumed_change (schema level)
std::string prop_consumes();         // co:consumes (instance level)
std::string prop_old_version();      // co:old_version
std::string prop_new_version();      // co:new_version
std::string prop_old_value();        // co:old_value
std::string prop_new_value();        // co:new_value

// co:{Name} for a change definition.
std::string change_class(std::string_view change_name);

// Lowercase initials of the change-name words; words split on '_' and the
// compound "Super{...}" (the paper shows co:asc_p1 for Add_Superclass).
std::string abbrev(std::string_view change_name);

// co:{abbrev}_p{i}, 1-based.
std::string param_property(std::string_view change_name, std::size_t i);

// co:d_{stable_id} / co:a_{hash}.
std::string detection_individual(std::string_view stable_id);
std::string association_individual(std::string_view hash);

// Version IRI minted from a dataset label (percent-encoded).
std::string version_iri(std::string_view label);

}  // namespace names

// 128-bit FNV-1a (two independent 64-bit passes), hex encoded: the stable-id /
// association-hash primitive.
std::string fnv128_hex(std::string_view data);

}  // namespace rdfdelta
