#include "rdfdelta/dataset.hpp"

#include <algorithm>
#include <stdexcept>

namespace rdfdelta {
namespace {

struct PosLess {  // (p,o,s)
    bool operator()(const Triple& a, const Triple& b) const {
        return std::tie(a.p, a.o, a.s) < std::tie(b.p, b.o, b.s);
    }
};
struct OspLess {  // (o,s,p)
    bool operator()(const Triple& a, const Triple& b) const {
        return std::tie(a.o, a.s, a.p) < std::tie(b.o, b.s, b.p);
    }
};

// Contiguous range of `index` whose elements match the bound prefix
// (k1 mandatory-or-nullopt before k2 etc. per the index's component order).
template <class Less>
std::span<const Triple> prefix_range(const std::vector<Triple>& index, Triple lo,
                                     Triple hi, Less less) {
    auto first = std::lower_bound(index.begin(), index.end(), lo, less);
    auto last = std::upper_bound(index.begin(), index.end(), hi, less);
    return {first, last};
}

}  // namespace

Dataset::Dataset(TermTablePtr table, std::string label)
    : table_(std::move(table)), label_(std::move(label)) {}

bool Dataset::contains(const Triple& t) const {
    return std::binary_search(spo_.begin(), spo_.end(), t);
}

std::span<const Triple> Dataset::match(std::optional<TermId> s,
                                       std::optional<TermId> p,
                                       std::optional<TermId> o) const {
    constexpr TermId LO = 0, HI = kNoTerm;
    if (s) {
        if (p) {
            // (s,p,?) or (s,p,o): spo prefix
            return prefix_range(spo_, Triple{*s, *p, o.value_or(LO)},
                                Triple{*s, *p, o.value_or(HI)}, std::less<Triple>{});
        }
        if (o) {  // (s,?,o): osp prefix on (o,s)
            return prefix_range(osp_, Triple{*s, LO, *o}, Triple{*s, HI, *o}, OspLess{});
        }
        return prefix_range(spo_, Triple{*s, LO, LO}, Triple{*s, HI, HI},
                            std::less<Triple>{});
    }
    if (p) {  // (?,p,?) or (?,p,o): pos prefix
        return prefix_range(pos_, Triple{LO, *p, o.value_or(LO)},
                            Triple{HI, *p, o.value_or(HI)}, PosLess{});
    }
    if (o) {  // (?,?,o): osp prefix
        return prefix_range(osp_, Triple{LO, LO, *o}, Triple{HI, HI, *o}, OspLess{});
    }
    return {spo_.data(), spo_.size()};
}

std::size_t Dataset::count_estimate(std::optional<TermId> s, std::optional<TermId> p,
                                    std::optional<TermId> o) const {
    return match(s, p, o).size();
}

void DatasetBuilder::add_all(const Dataset& ds) {
    triples_.insert(triples_.end(), ds.triples().begin(), ds.triples().end());
}

Dataset DatasetBuilder::build(std::string label) && {
    Dataset ds(std::move(table_), std::move(label));
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
    ds.spo_ = std::move(triples_);
    ds.pos_ = ds.spo_;
    std::sort(ds.pos_.begin(), ds.pos_.end(), PosLess{});
    ds.osp_ = ds.spo_;
    std::sort(ds.osp_.begin(), ds.osp_.end(), OspLess{});
    return ds;
}

LowLevelDelta low_level_delta(const Dataset& v_old, const Dataset& v_new) {
    if (v_old.table() != v_new.table())
        throw std::invalid_argument("low_level_delta: datasets use different term tables");
    DatasetBuilder added(v_new.table());
    DatasetBuilder deleted(v_new.table());
    std::vector<Triple> tmp;
    std::set_difference(v_new.triples().begin(), v_new.triples().end(),
                        v_old.triples().begin(), v_old.triples().end(),
                        std::back_inserter(tmp));
    for (const Triple& t : tmp) added.add(t);
    tmp.clear();
    std::set_difference(v_old.triples().begin(), v_old.triples().end(),
                        v_new.triples().begin(), v_new.triples().end(),
                        std::back_inserter(tmp));
    for (const Triple& t : tmp) deleted.add(t);
    return LowLevelDelta{std::move(added).build("added"), std::move(deleted).build("deleted")};
}

}  // namespace rdfdelta
