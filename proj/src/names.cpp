#include "rdfdelta/names.hpp"

#include <cctype>
#include <cstdio>

#include "rdfdelta/vocab.hpp"

namespace rdfdelta {

std::string fnv128_hex(std::string_view data) {
    constexpr std::uint64_t prime = 0x100000001b3ull;
    std::uint64_t h1 = 0xcbf29ce484222325ull;   // standard FNV-1a offset basis
    std::uint64_t h2 = 0x6c62272e07bb0142ull;   // independent basis (FNV-1 128 high word)
    for (unsigned char c : data) {
        h1 = (h1 ^ c) * prime;
        h2 = (h2 ^ (c + 0x9eu)) * prime;
    }
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx",
                  static_cast<unsigned long long>(h1),
                  static_cast<unsigned long long>(h2));
    return buf;
}

namespace names {

std::string co(std::string_view local) {
    return std::string(vocab::kCo) + std::string(local);
}

std::string simple_change_class() { return co("Simple_Change"); }
std::string complex_change_class() { return co("Complex_Change"); }
std::string association_class() { return co("Association"); }
std::string prop_cname() { return co("cname"); }
std::string prop_priority() { return co("priority"); }
std::string prop_detection_query() { return co("detection_query"); }
std::string prop_consumed_change() { return co("consumed_change"); }
std::string prop_consumes() { return co("consumes"); }
std::string prop_old_version() { return co("old_version"); }
std::string prop_new_version() { return co("new_version"); }
std::string prop_old_value() { return co("old_value"); }
std::string prop_new_value() { return co("new_value"); }

std::string change_class(std::string_view change_name) { return co(change_name); }

std::string abbrev(std::string_view change_name) {
    std::string out;
    std::size_t start = 0;
    while (start <= change_name.size()) {
        std::size_t end = change_name.find('_', start);
        if (end == std::string_view::npos) end = change_name.size();
        std::string_view word = change_name.substr(start, end - start);
        if (!word.empty()) {
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(word[0])));
            // "Superclass"/"Superproperty" count as two words (paper: asc_p1).
            if (word.size() > 5 && (word.substr(0, 5) == "Super" || word.substr(0, 5) == "super"))
                out += static_cast<char>(
                    std::tolower(static_cast<unsigned char>(word[5])));
        }
        if (end == change_name.size()) break;
        start = end + 1;
    }
    return out;
}

std::string param_property(std::string_view change_name, std::size_t i) {
    return co(abbrev(change_name) + "_p" + std::to_string(i));
}

std::string detection_individual(std::string_view stable_id) {
    return co("d_" + std::string(stable_id));
}

std::string association_individual(std::string_view hash) {
    return co("a_" + std::string(hash));
}

std::string version_iri(std::string_view label) {
    std::string out = vocab::kVersions;
    for (unsigned char c : label) {
        const bool safe = std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~';
        if (safe) {
            out += static_cast<char>(c);
        } else {
            char buf[4];
            std::snprintf(buf, sizeof buf, "%%%02X", c);
            out += buf;
        }
    }
    return out;
}

}  // namespace names
}  // namespace rdfdelta
