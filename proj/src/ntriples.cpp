#include "rdfdelta/ntriples.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace rdfdelta {
namespace {

struct LineParser {
    std::string_view line;
    std::size_t pos = 0;
    std::size_t lineno;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(ParseError::Kind::Syntax, lineno, msg);
    }
    bool eof() const { return pos >= line.size(); }
    char peek() const { return line[pos]; }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    // \uXXXX or \UXXXXXXXX, appended as UTF-8.
    void append_codepoint(std::string& out, int digits) {
        if (pos + digits > line.size()) fail("truncated unicode escape");
        char32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            char c = line[pos++];
            cp <<= 4;
            if (c >= '0' && c <= '9') cp |= static_cast<char32_t>(c - '0');
            else if (c >= 'a' && c <= 'f') cp |= static_cast<char32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') cp |= static_cast<char32_t>(c - 'A' + 10);
            else fail("bad hex digit in unicode escape");
        }
        if (cp <= 0x7F) {
            out += static_cast<char>(cp);
        } else if (cp <= 0x7FF) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp <= 0xFFFF) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    }

    std::string parse_iriref() {
        expect('<');
        std::string iri;
        while (!eof() && peek() != '>') {
            char c = line[pos++];
            if (c == '\\') {
                if (eof()) fail("truncated escape in IRI");
                char e = line[pos++];
                if (e == 'u') append_codepoint(iri, 4);
                else if (e == 'U') append_codepoint(iri, 8);
                else fail("bad escape in IRI");
            } else if (static_cast<unsigned char>(c) <= 0x20) {
                fail("whitespace/control character in IRI");
            } else {
                iri += c;
            }
        }
        expect('>');
        if (iri.find(':') == std::string::npos) fail("relative IRI: " + iri);
        return iri;
    }

    std::string parse_quoted() {
        expect('"');
        std::string lex;
        while (!eof() && peek() != '"') {
            char c = line[pos++];
            if (c == '\\') {
                if (eof()) fail("truncated escape in literal");
                char e = line[pos++];
                switch (e) {
                    case 't': lex += '\t'; break;
                    case 'b': lex += '\b'; break;
                    case 'n': lex += '\n'; break;
                    case 'r': lex += '\r'; break;
                    case 'f': lex += '\f'; break;
                    case '"': lex += '"'; break;
                    case '\'': lex += '\''; break;
                    case '\\': lex += '\\'; break;
                    case 'u': append_codepoint(lex, 4); break;
                    case 'U': append_codepoint(lex, 8); break;
                    default: fail("bad escape in literal");
                }
            } else {
                lex += c;
            }
        }
        expect('"');
        return lex;
    }

    Term parse_term(bool object_position) {
        if (eof()) fail("unexpected end of statement");
        char c = peek();
        if (c == '_') throw ParseError(ParseError::Kind::BlankNode, lineno,
                                       "blank nodes are not supported");
        if (c == '<') return Term::uri(parse_iriref());
        if (c == '"') {
            if (!object_position) fail("literal in subject/predicate position");
            std::string lex = parse_quoted();
            if (!eof() && peek() == '@') {
                ++pos;
                std::string lang;
                while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                                  peek() == '-'))
                    lang += line[pos++];
                if (lang.empty()) fail("empty language tag");
                return Term::literal(std::move(lex), std::move(lang));
            }
            if (pos + 1 < line.size() && peek() == '^' && line[pos + 1] == '^') {
                pos += 2;
                return Term::literal(std::move(lex), {}, parse_iriref());
            }
            return Term::literal(std::move(lex));
        }
        fail("unexpected character");
    }
};

}  // namespace

Dataset parse_ntriples(std::istream& in, TermTablePtr table, std::string label) {
    DatasetBuilder b(table);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        LineParser lp{line, 0, lineno};
        lp.skip_ws();
        if (lp.eof() || lp.peek() == '#') continue;
        Term s = lp.parse_term(false);
        lp.skip_ws();
        Term p = lp.parse_term(false);
        lp.skip_ws();
        Term o = lp.parse_term(true);
        lp.skip_ws();
        lp.expect('.');
        lp.skip_ws();
        if (!lp.eof() && lp.peek() != '#') lp.fail("trailing content after '.'");
        b.add(table->intern(s), table->intern(p), table->intern(o));
    }
    return std::move(b).build(std::move(label));
}

Dataset parse_ntriples(std::string_view text, TermTablePtr table, std::string label) {
    std::istringstream in{std::string(text)};
    return parse_ntriples(in, std::move(table), std::move(label));
}

void serialize_ntriples(const Dataset& ds, std::ostream& out) {
    if (ds.empty()) return;
    const TermTable& tt = *ds.table();
    std::vector<std::string> lines;
    lines.reserve(ds.size());
    for (const Triple& t : ds.triples()) {
        std::string line = tt.ntriples(t.s);
        line += ' ';
        line += tt.ntriples(t.p);
        line += ' ';
        line += tt.ntriples(t.o);
        line += " .";
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    for (const std::string& l : lines) {
        out << l << '\n';
    }
}

std::string serialize_ntriples(const Dataset& ds) {
    std::ostringstream out;
    serialize_ntriples(ds, out);
    return out.str();
}

}  // namespace rdfdelta
