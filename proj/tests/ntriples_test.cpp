#include <doctest.h>

#include <random>
#include <sstream>

#include "rdfdelta/ntriples.hpp"

using namespace rdfdelta;

namespace {
TermTablePtr table() { return std::make_shared<TermTable>(); }
}  // namespace

TEST_CASE("single well-formed line") {
    auto tt = table();
    Dataset d = parse_ntriples("<a:s> <a:p> <a:o> .\n", tt);
    CHECK(d.size() == 1);
    Triple t{tt->find(Term::uri("a:s")), tt->find(Term::uri("a:p")),
             tt->find(Term::uri("a:o"))};
    CHECK(d.contains(t));
}

TEST_CASE("empty input, comments, duplicates") {
    auto tt = table();
    CHECK(parse_ntriples("", tt).empty());
    CHECK(parse_ntriples("# comment only\n\n", tt).empty());
    Dataset d = parse_ntriples("<a:s> <a:p> <a:o> .\n<a:s> <a:p> <a:o> .\n", tt);
    CHECK(d.size() == 1);
}

TEST_CASE("blank nodes are rejected with the line number") {
    auto tt = table();
    try {
        parse_ntriples("<a:s> <a:p> <a:o> .\n_:b1 <a:p> <a:o> .\n", tt);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::BlankNode);
        CHECK(e.line == 2);
    }
}

TEST_CASE("syntax errors carry the line number") {
    auto tt = table();
    try {
        parse_ntriples("<a:s> <a:p> .\n", tt);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::Syntax);
        CHECK(e.line == 1);
    }
    CHECK_THROWS_AS(parse_ntriples("\"lit\" <a:p> <a:o> .\n", tt), ParseError);
}

TEST_CASE("literals: plain, tagged, typed, escaped") {
    auto tt = table();
    Dataset d = parse_ntriples(
        "<a:s> <a:p> \"x\" .\n"
        "<a:s> <a:p> \"x\"@en .\n"
        "<a:s> <a:p> \"x\"^^<a:dt> .\n"
        "<a:s> <a:p> \"a\\\"b\\nc\" .\n",
        tt);
    CHECK(d.size() == 4);
    CHECK(tt->find(Term::literal("x")) != kNoTerm);
    CHECK(tt->find(Term::literal("x", "en")) != kNoTerm);
    CHECK(tt->find(Term::literal("x", "", "a:dt")) != kNoTerm);
    CHECK(tt->find(Term::literal("a\"b\nc")) != kNoTerm);
}

TEST_CASE("canonical serialization") {
    auto tt = table();
    DatasetBuilder b(tt);
    CHECK(serialize_ntriples(std::move(b).build()) == "");

    auto tt2 = table();
    DatasetBuilder b2(tt2);
    b2.add(tt2->intern_uri("a:s"), tt2->intern_uri("a:p"), tt2->intern_literal("x"));
    CHECK(serialize_ntriples(std::move(b2).build()) == "<a:s> <a:p> \"x\" .\n");

    // Lines are sorted by serialized form.
    auto tt3 = table();
    DatasetBuilder b3(tt3);
    TermId zp = tt3->intern_uri("z:p"), ap = tt3->intern_uri("a:p");
    TermId s = tt3->intern_uri("m:s"), o = tt3->intern_uri("m:o");
    b3.add(s, zp, o);
    b3.add(s, ap, o);
    CHECK(serialize_ntriples(std::move(b3).build()) ==
          "<m:s> <a:p> <m:o> .\n<m:s> <z:p> <m:o> .\n");
}

TEST_CASE("randomized round-trip: parse(serialize(d)) = d") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        auto tt = table();
        std::vector<TermId> uris, objects;
        for (int i = 0; i < 5; ++i)
            uris.push_back(tt->intern_uri("http://example.org/u" + std::to_string(i)));
        objects = uris;
        objects.push_back(tt->intern_literal("plain \"quoted\"\n"));
        objects.push_back(tt->intern_literal("tagged", "en-GB"));
        objects.push_back(tt->intern_literal("typed", "", "http://example.org/dt"));

        DatasetBuilder b(tt);
        std::uniform_int_distribution<std::size_t> pu(0, uris.size() - 1);
        std::uniform_int_distribution<std::size_t> po(0, objects.size() - 1);
        std::uniform_int_distribution<int> n(0, 30);
        for (int i = n(rng); i > 0; --i) b.add(uris[pu(rng)], uris[pu(rng)], objects[po(rng)]);
        Dataset d = std::move(b).build("v");

        auto tt2 = table();
        Dataset back = parse_ntriples(serialize_ntriples(d), tt2);
        CHECK(back.size() == d.size());
        CHECK(serialize_ntriples(back) == serialize_ntriples(d));
    }
}
