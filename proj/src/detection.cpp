#include "rdfdelta/detection.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "rdfdelta/names.hpp"
#include "rdfdelta/vocab.hpp"

namespace rdfdelta {
namespace {

// Runs task(i) for i in [0,n) on up to `threads` workers. Tasks must only
// write to their own slot; the caller merges results in index order.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& task) {
    threads = std::max(1u, threads);
    if (threads == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t)
        pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::optional<Triple> ground(const TriplePattern& tp, const Mapping& mu) {
    auto one = [&](const PatternTerm& t) -> std::optional<TermId> {
        if (auto* id = std::get_if<TermId>(&t)) return *id;
        auto it = mu.find(std::get<Variable>(t).name);
        if (it == mu.end()) return std::nullopt;
        return it->second;
    };
    auto s = one(tp.s), p = one(tp.p), o = one(tp.o);
    if (!s || !p || !o) return std::nullopt;
    return Triple{*s, *p, *o};
}

}  // namespace

ChangeInstantiation make_instantiation(std::string change_name, ChangeKind kind,
                                       std::vector<TermId> args,
                                       std::pair<std::string, std::string> version_pair,
                                       const TermTable& table) {
    ChangeInstantiation inst;
    inst.canonical = change_name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) inst.canonical += ",";
        inst.canonical += table.ntriples(args[i]);
    }
    inst.canonical += ")@" + version_pair.first + "->" + version_pair.second;
    inst.stable_id = fnv128_hex(inst.canonical);
    inst.change_name = std::move(change_name);
    inst.kind = kind;
    inst.args = std::move(args);
    inst.version_pair = std::move(version_pair);
    return inst;
}

SimpleDetectionResult detect_simple(const ChangeLanguage& lang, const EvalContext& ctx,
                                    unsigned threads) {
    std::vector<const ChangeLanguage::SimpleEntry*> entries;
    for (const auto& [name, entry] : lang.simple()) entries.push_back(&entry);

    const std::pair<std::string, std::string> pair{ctx.old_v->label(), ctx.new_v->label()};
    const TermTable& table = *ctx.table();

    struct Slot {
        std::set<ChangeInstantiation> detected;
        std::map<Triple, std::set<ChangeInstantiation>> consumers;
    };
    std::vector<Slot> slots(entries.size());

    parallel_for(entries.size(), threads, [&](std::size_t i) {
        const auto& entry = *entries[i];
        Slot& slot = slots[i];
        for (const Mapping& mu : eval_graph_pattern(entry.pattern, ctx)) {
            std::vector<TermId> args;
            bool bound = true;
            for (const Variable& p : entry.def.params) {
                auto it = mu.find(p.name);
                if (it == mu.end()) {
                    bound = false;
                    break;
                }
                args.push_back(it->second);
            }
            if (!bound) continue;
            ChangeInstantiation inst = make_instantiation(
                entry.def.name, ChangeKind::Simple, std::move(args), pair, table);
            for (const auto* deltas : {&entry.def.delta_plus, &entry.def.delta_minus})
                for (const TriplePattern& tp : *deltas)
                    if (auto t = ground(tp, mu)) slot.consumers[*t].insert(inst);
            slot.detected.insert(std::move(inst));
        }
    });

    SimpleDetectionResult result;
    for (Slot& slot : slots) {  // deterministic: definition-name order
        result.detected.merge(slot.detected);
        for (auto& [t, insts] : slot.consumers) {
            auto& target = result.consumption.triple_consumers[t];
            target.merge(insts);
            // merge() keeps duplicates in source; harmless, but be tidy:
        }
    }
    return result;
}

std::set<Triple> check_completeness(const ConsumptionMap& consumption,
                                    const LowLevelDelta& delta) {
    std::set<Triple> unconsumed;
    for (const Dataset* side : {&delta.added, &delta.deleted})
        for (const Triple& t : side->triples()) {
            auto it = consumption.triple_consumers.find(t);
            if (it == consumption.triple_consumers.end() || it->second.empty())
                unconsumed.insert(t);
        }
    return unconsumed;
}

std::map<Triple, std::set<ChangeInstantiation>> check_unambiguity(
    const ConsumptionMap& consumption, const LowLevelDelta& delta) {
    std::map<Triple, std::set<ChangeInstantiation>> ambiguous;
    for (const Dataset* side : {&delta.added, &delta.deleted})
        for (const Triple& t : side->triples()) {
            auto it = consumption.triple_consumers.find(t);
            if (it != consumption.triple_consumers.end() && it->second.size() >= 2)
                ambiguous.emplace(t, it->second);
        }
    return ambiguous;
}

namespace {

// Reads a simple-change detection individual back from the ontology graph.
std::optional<ChangeInstantiation> reconstruct_simple(
    TermId individual, const Dataset& ontology, const ChangeLanguage& lang,
    const std::pair<std::string, std::string>& pair) {
    const TermTable& table = *ontology.table();
    const Term rdf_type = Term::uri(vocab::kRdfType);
    TermId type_id = table.find(rdf_type);
    if (type_id == kNoTerm) return std::nullopt;
    auto types = ontology.match(individual, type_id, std::nullopt);
    if (types.empty()) return std::nullopt;
    const std::string& class_form = table.ntriples(types.front().o);
    // "<http://...#Name>" -> "Name"
    std::size_t hash = class_form.rfind('#');
    if (hash == std::string::npos) return std::nullopt;
    std::string name = class_form.substr(hash + 1, class_form.size() - hash - 2);
    const auto* entry = lang.find_simple(name);
    if (!entry) return std::nullopt;
    std::vector<TermId> args;
    for (std::size_t i = 0; i < entry->def.params.size(); ++i) {
        TermId prop = table.find(Term::uri(names::param_property(name, i + 1)));
        if (prop == kNoTerm) return std::nullopt;
        auto vals = ontology.match(individual, prop, std::nullopt);
        if (vals.size() != 1) return std::nullopt;
        args.push_back(vals.front().o);
    }
    return make_instantiation(name, ChangeKind::Simple, std::move(args), pair, table);
}

}  // namespace

ComplexDetectionResult detect_complex(const ChangeLanguage& lang, const EvalContext& ctx,
                                      const AssociationStore& /*assoc*/,
                                      unsigned threads) {
    ComplexDetectionResult result;
    if (lang.complex().empty()) return result;

    TermTable& table = *ctx.table();
    {
        TermId sc = table.find(Term::uri(names::simple_change_class()));
        TermId type = table.find(Term::uri(vocab::kRdfType));
        TermId cls = table.find(Term::uri(vocab::kRdfsClass));
        if (sc == kNoTerm || type == kNoTerm || cls == kNoTerm ||
            !ctx.ontology->contains({sc, type, cls}))
            throw MissingSimpleLayer(
                "ontology graph lacks the materialized simple-change layer");
    }

    const std::pair<std::string, std::string> pair{ctx.old_v->label(), ctx.new_v->label()};
    const TermId v_old_iri = table.intern_uri(names::version_iri(pair.first));
    const TermId v_new_iri = table.intern_uri(names::version_iri(pair.second));
    const TermId p_consumes = table.intern_uri(names::prop_consumes());

    // Descending priority tiers; name order inside a tier.
    std::map<int, std::vector<const ChangeLanguage::ComplexEntry*>, std::greater<>> tiers;
    for (const auto& [name, entry] : lang.complex())
        tiers[entry.def.priority].push_back(&entry);

    std::shared_ptr<const Dataset> working = ctx.ontology;

    for (const auto& [priority, entries] : tiers) {
        EvalContext tier_ctx = ctx;
        tier_ctx.ontology = working;

        struct Slot {
            std::set<ChangeInstantiation> detected;
            // complex inst -> consumed individual ids
            std::map<ChangeInstantiation, std::set<TermId>> consumed;
            std::vector<std::string> warnings;
        };
        std::vector<Slot> slots(entries.size());

        parallel_for(entries.size(), threads, [&](std::size_t i) {
            const auto& entry = *entries[i];
            Slot& slot = slots[i];
            PatternPtr restricted = p_filter(
                entry.pattern,
                f_and({f_eq(Variable{kVarOldVersion}, v_old_iri),
                       f_eq(Variable{kVarNewVersion}, v_new_iri)}));
            for (const Mapping& mu : eval_graph_pattern(restricted, tier_ctx)) {
                std::vector<TermId> args;
                bool bound = true;
                for (const Variable& p : entry.def.params) {
                    auto it = mu.find(p.name);
                    if (it == mu.end()) {
                        bound = false;
                        break;
                    }
                    args.push_back(it->second);
                }
                if (!bound) continue;
                ChangeInstantiation inst = make_instantiation(
                    entry.def.name, ChangeKind::Complex, std::move(args), pair, table);
                auto& consumed = slot.consumed[inst];
                std::size_t before_distinct = 0;
                for (std::size_t j = 0; j < entry.def.consumed.size(); ++j) {
                    auto it = mu.find("__sc" + std::to_string(j));
                    if (it != mu.end()) consumed.insert(it->second);
                    ++before_distinct;
                }
                if (consumed.size() < before_distinct &&
                    entry.def.consumed.size() > 1)
                    slot.warnings.push_back(
                        inst.canonical +
                        ": two consumed refs matched the same simple instantiation");
                slot.detected.insert(std::move(inst));
            }
        });

        // Materialize this tier's consumes edges before lower tiers run.
        DatasetBuilder next(working->table());
        next.add_all(*working);
        for (Slot& slot : slots) {
            for (auto& [inst, individuals] : slot.consumed) {
                TermId subject =
                    table.intern_uri(names::detection_individual(inst.stable_id));
                for (TermId ind : individuals) {
                    next.add(subject, p_consumes, ind);
                    if (auto simple = reconstruct_simple(ind, *working, lang, pair)) {
                        result.simple_consumers[*simple].insert(inst);
                        result.consumed_by_complex[inst].insert(*simple);
                    }
                }
            }
            result.detected.merge(slot.detected);
            for (auto& w : slot.warnings) result.warnings.push_back(std::move(w));
        }
        working = std::make_shared<const Dataset>(std::move(next).build(working->label()));
    }

    // Equal-priority shared consumption can only arise inside one tier.
    for (const auto& [simple, consumers] : result.simple_consumers)
        if (consumers.size() >= 2) {
            std::string w = "simple change " + simple.canonical +
                            " consumed by multiple equal-priority complex changes:";
            for (const auto& c : consumers) w += " " + c.canonical;
            result.warnings.push_back(std::move(w));
        }
    std::sort(result.warnings.begin(), result.warnings.end());
    return result;
}

}  // namespace rdfdelta
