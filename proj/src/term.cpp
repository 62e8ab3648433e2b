#include "rdfdelta/term.hpp"

#include <cstdio>

namespace rdfdelta {

Term Term::uri(std::string iri) {
    Term t;
    t.kind = TermKind::Uri;
    t.lexical = std::move(iri);
    return t;
}

Term Term::literal(std::string lexical, std::string language, std::string datatype) {
    if (!language.empty() && !datatype.empty())
        throw std::invalid_argument("literal cannot carry both language tag and datatype");
    Term t;
    t.kind = TermKind::Literal;
    t.lexical = std::move(lexical);
    t.language = std::move(language);
    t.datatype = std::move(datatype);
    return t;
}

std::string ntriples_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04X", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

std::string term_to_ntriples(const Term& t) {
    if (t.kind == TermKind::Uri) {
        if (t.lexical.find(':') == std::string::npos)
            throw std::invalid_argument("IRI is not absolute: " + t.lexical);
        return "<" + t.lexical + ">";
    }
    std::string out = "\"" + ntriples_escape(t.lexical) + "\"";
    if (!t.language.empty()) out += "@" + t.language;
    else if (!t.datatype.empty()) out += "^^<" + t.datatype + ">";
    return out;
}

TermId TermTable::intern_form(std::string form, TermKind kind) {
    if (auto it = index_.find(std::string_view(form)); it != index_.end())
        return it->second;
    const auto id = static_cast<TermId>(forms_.size());
    forms_.push_back(std::move(form));
    kinds_.push_back(kind);
    index_.emplace(std::string_view(forms_.back()), id);
    return id;
}

TermId TermTable::intern_uri(std::string_view iri) {
    return intern(Term::uri(std::string(iri)));
}

TermId TermTable::intern_literal(std::string_view lexical, std::string_view language,
                                 std::string_view datatype) {
    return intern(Term::literal(std::string(lexical), std::string(language),
                                std::string(datatype)));
}

TermId TermTable::intern(const Term& t) {
    return intern_form(term_to_ntriples(t), t.kind);
}

TermId TermTable::find(const Term& t) const {
    const std::string form = term_to_ntriples(t);
    auto it = index_.find(std::string_view(form));
    return it == index_.end() ? kNoTerm : it->second;
}

Term TermTable::decode(TermId id) const {
    const std::string& f = forms_.at(id);
    if (kind(id) == TermKind::Uri) return Term::uri(f.substr(1, f.size() - 2));
    // Literal: unescape the quoted part, then trailing @lang / ^^<dt>.
    std::size_t i = 1;
    std::string lex;
    while (i < f.size() && f[i] != '"') {
        if (f[i] == '\\' && i + 1 < f.size()) {
            char c = f[i + 1];
            i += 2;
            switch (c) {
                case 'n': lex += '\n'; break;
                case 'r': lex += '\r'; break;
                case 't': lex += '\t'; break;
                case '"': lex += '"'; break;
                case '\\': lex += '\\'; break;
                case 'u': {
                    unsigned v = std::stoul(f.substr(i, 4), nullptr, 16);
                    lex += static_cast<char>(v);
                    i += 4;
                    break;
                }
                default: lex += c;
            }
        } else {
            lex += f[i++];
        }
    }
    ++i;  // closing quote
    std::string lang, dt;
    if (i < f.size() && f[i] == '@') lang = f.substr(i + 1);
    else if (i + 1 < f.size() && f[i] == '^') dt = f.substr(i + 3, f.size() - i - 4);
    return Term::literal(std::move(lex), std::move(lang), std::move(dt));
}

}  // namespace rdfdelta
