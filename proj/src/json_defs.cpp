#include "rdfdelta/json_defs.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>

#include "rdfdelta/ontology.hpp"

namespace rdfdelta {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw DefsParseError(what); }

std::string need_string(const json& j, const char* where) {
    if (!j.is_string()) fail(std::string(where) + ": expected a string");
    return j.get<std::string>();
}

// Term tokens: "?name" variable, "<iri>" URI, "\"lex\"", "\"lex\"@lang",
// "\"lex\"^^<dt>" typed literal, anything else a plain literal lexical form.
Term parse_ground_term(const std::string& tok, const char* where) {
    if (tok.empty()) fail(std::string(where) + ": empty term token");
    if (tok.front() == '<') {
        if (tok.back() != '>' || tok.size() < 3)
            fail(std::string(where) + ": malformed IRI token " + tok);
        return Term::uri(tok.substr(1, tok.size() - 2));
    }
    if (tok.front() == '"') {
        std::size_t close = tok.rfind('"');
        if (close == 0) fail(std::string(where) + ": unterminated literal " + tok);
        std::string lex = tok.substr(1, close - 1);
        std::string rest = tok.substr(close + 1);
        if (rest.empty()) return Term::literal(std::move(lex));
        if (rest.front() == '@') return Term::literal(std::move(lex), rest.substr(1));
        if (rest.rfind("^^<", 0) == 0 && rest.back() == '>')
            return Term::literal(std::move(lex), {}, rest.substr(3, rest.size() - 4));
        fail(std::string(where) + ": malformed literal suffix " + rest);
    }
    return Term::literal(tok);
}

struct PatternParser {
    TermTable& tt;

    PatternTerm term(const json& j, const char* where) {
        std::string tok = need_string(j, where);
        if (!tok.empty() && tok.front() == '?') {
            if (tok.size() < 2) fail(std::string(where) + ": empty variable name");
            return Variable{tok.substr(1)};
        }
        return tt.intern(parse_ground_term(tok, where));
    }

    FilterPtr filter(const json& j) {
        if (!j.is_object() || !j.contains("op")) fail("filter: expected {\"op\": ...}");
        std::string op = need_string(j.at("op"), "filter.op");
        if (op == "eq" || op == "neq") {
            if (!j.contains("lhs") || !j.contains("rhs"))
                fail("filter: eq/neq needs lhs and rhs");
            PatternTerm l = term(j.at("lhs"), "filter.lhs");
            PatternTerm r = term(j.at("rhs"), "filter.rhs");
            return op == "eq" ? f_eq(l, r) : f_neq(l, r);
        }
        if (op == "and" || op == "or") {
            if (!j.contains("args") || !j.at("args").is_array())
                fail("filter: and/or needs an args array");
            std::vector<FilterPtr> children;
            for (const json& c : j.at("args")) children.push_back(filter(c));
            if (children.empty()) fail("filter: and/or with no args");
            return op == "and" ? f_and(std::move(children)) : f_or(std::move(children));
        }
        fail("filter: unknown op \"" + op + "\"");
    }

    TriplePattern triple(const json& j) {
        if (!j.is_array() || j.size() != 3) fail("bgp: each entry must be [s, p, o]");
        return {term(j[0], "bgp.s"), term(j[1], "bgp.p"), term(j[2], "bgp.o")};
    }

    // A pattern is a node object or an array of patterns (implicit join).
    PatternPtr pattern(const json& j) {
        if (j.is_null()) return p_empty();
        if (j.is_array()) {
            PatternPtr acc = p_empty();
            for (const json& c : j) {
                PatternPtr part = pattern(c);
                acc = acc->kind == GraphPattern::Kind::Empty ? part : p_join(acc, part);
            }
            return acc;
        }
        if (!j.is_object() || j.size() != 1)
            fail("pattern: expected a single-key node object or an array");
        const auto& [key, value] = *j.items().begin();
        if (key == "bgp") {
            if (!value.is_array()) fail("bgp: expected an array of triples");
            std::vector<TriplePattern> tps;
            for (const json& t : value) tps.push_back(triple(t));
            return p_bgp(std::move(tps));
        }
        if (key == "union") {
            if (!value.is_array() || value.empty())
                fail("union: expected a non-empty array of patterns");
            PatternPtr acc = pattern(value[0]);
            for (std::size_t i = 1; i < value.size(); ++i)
                acc = p_union(acc, pattern(value[i]));
            return acc;
        }
        if (key == "not_exists") return p_not_exists(p_empty(), pattern(value));
        if (key == "filter") return p_filter(p_empty(), filter(value));
        fail("pattern: unknown node \"" + key + "\"");
    }
};

Variable parse_param(const json& j) {
    std::string tok = need_string(j, "params");
    if (tok.size() < 2 || tok.front() != '?')
        fail("params: expected \"?name\", got \"" + tok + "\"");
    return Variable{tok.substr(1)};
}

json parse_document(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) fail("document root must be a JSON array");
    return doc;
}

}  // namespace

std::size_t load_complex_defs(std::istream& in, ChangeLanguage& lang) {
    json doc = parse_document(in);
    PatternParser pp{*lang.table()};
    for (const json& entry : doc) {
        if (!entry.is_object()) fail("each definition must be an object");
        ComplexChangeDef def;
        if (!entry.contains("name")) fail("definition missing \"name\"");
        def.name = need_string(entry.at("name"), "name");
        if (entry.contains("params"))
            for (const json& p : entry.at("params")) def.params.push_back(parse_param(p));
        def.priority = entry.value("priority", 0);
        if (entry.contains("consumes")) {
            if (!entry.at("consumes").is_array()) fail(def.name + ": consumes must be an array");
            for (const json& c : entry.at("consumes")) {
                if (!c.is_object() || !c.contains("change"))
                    fail(def.name + ": each consumed entry needs a \"change\"");
                SimpleChangeRef ref;
                ref.change = need_string(c.at("change"), "consumes.change");
                if (c.contains("args"))
                    for (const json& a : c.at("args"))
                        ref.args.push_back(pp.term(a, "consumes.args"));
                def.consumed.push_back(std::move(ref));
            }
        }
        def.cond_old = pp.pattern(entry.contains("cond_old") ? entry.at("cond_old") : json());
        def.cond_new = pp.pattern(entry.contains("cond_new") ? entry.at("cond_new") : json());
        if (entry.contains("associations")) {
            for (const json& a : entry.at("associations")) {
                if (!a.is_object() || !a.contains("from") || !a.contains("to"))
                    fail(def.name + ": each association needs \"from\" and \"to\"");
                Association assoc;
                for (const json& m : a.at("from"))
                    assoc.from.push_back(pp.term(m, "associations.from"));
                for (const json& m : a.at("to"))
                    assoc.to.push_back(pp.term(m, "associations.to"));
                def.associations.push_back(std::move(assoc));
            }
        }
        lang.register_complex(std::move(def));
    }
    return doc.size();
}

std::size_t load_complex_defs_file(const std::string& path, ChangeLanguage& lang) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open definitions file: " + path);
    return load_complex_defs(in, lang);
}

AssociationStore load_associations(std::istream& in, TermTable& table) {
    json doc = parse_document(in);
    AssociationStore store;
    for (const json& entry : doc) {
        if (!entry.is_object() || !entry.contains("old") || !entry.contains("new"))
            fail("each association needs \"old\" and \"new\" arrays");
        GroundAssociation ga;
        auto member = [&](const json& m, const char* where) {
            std::string tok = need_string(m, where);
            if (!tok.empty() && tok.front() == '?')
                fail(std::string(where) + ": ground terms required, got variable " + tok);
            return table.intern(parse_ground_term(tok, where));
        };
        for (const json& m : entry.at("old")) ga.from.push_back(member(m, "old"));
        for (const json& m : entry.at("new")) ga.to.push_back(member(m, "new"));
        if (ga.from.empty() || ga.to.empty())
            fail("associations: \"old\" and \"new\" must both be non-empty");
        std::sort(ga.from.begin(), ga.from.end());
        ga.from.erase(std::unique(ga.from.begin(), ga.from.end()), ga.from.end());
        std::sort(ga.to.begin(), ga.to.end());
        ga.to.erase(std::unique(ga.to.begin(), ga.to.end()), ga.to.end());
        store.associations.push_back(std::move(ga));
    }
    std::sort(store.associations.begin(), store.associations.end());
    store.associations.erase(
        std::unique(store.associations.begin(), store.associations.end()),
        store.associations.end());
    return store;
}

AssociationStore load_associations_file(const std::string& path, TermTable& table) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open associations file: " + path);
    return load_associations(in, table);
}

}  // namespace rdfdelta
