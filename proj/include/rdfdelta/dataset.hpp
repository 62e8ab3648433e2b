#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rdfdelta/term.hpp"

namespace rdfdelta {

struct Triple {
    TermId s = kNoTerm;
    TermId p = kNoTerm;
    TermId o = kNoTerm;

    auto operator<=>(const Triple&) const = default;
};

class DatasetBuilder;

// Immutable set of triples with SPO/POS/OSP indexes. Safe to share read-only
// across threads after construction.
class Dataset {
  public:
    Dataset() = default;
    explicit Dataset(TermTablePtr table, std::string label = {});

    const TermTablePtr& table() const { return table_; }
    const std::string& label() const { return label_; }
    const std::vector<Triple>& triples() const { return spo_; }  // sorted (s,p,o)
    std::size_t size() const { return spo_.size(); }
    bool empty() const { return spo_.empty(); }
    bool contains(const Triple& t) const;

    // Triples matching the given constant positions (nullopt = wildcard).
    // Every combination is a contiguous range of one of the three orderings.
    std::span<const Triple> match(std::optional<TermId> s, std::optional<TermId> p,
                                  std::optional<TermId> o) const;
    // Upper bound on |match(...)| without materializing; used for planning.
    std::size_t count_estimate(std::optional<TermId> s, std::optional<TermId> p,
                               std::optional<TermId> o) const;

  private:
    friend class DatasetBuilder;

    TermTablePtr table_;
    std::string label_;
    std::vector<Triple> spo_;  // sorted by (s,p,o)
    std::vector<Triple> pos_;  // sorted by (p,o,s)
    std::vector<Triple> osp_;  // sorted by (o,s,p)
};

class DatasetBuilder {
  public:
    explicit DatasetBuilder(TermTablePtr table) : table_(std::move(table)) {}

    void add(Triple t) { triples_.push_back(t); }
    void add(TermId s, TermId p, TermId o) { triples_.push_back({s, p, o}); }
    void add_all(const Dataset& ds);
    const TermTablePtr& table() const { return table_; }

    Dataset build(std::string label = {}) &&;

  private:
    TermTablePtr table_;
    std::vector<Triple> triples_;
};

struct LowLevelDelta {
    Dataset added;    // new \ old
    Dataset deleted;  // old \ new
};

// Exact set differences. Both datasets must share the same term table.
LowLevelDelta low_level_delta(const Dataset& v_old, const Dataset& v_new);

}  // namespace rdfdelta
