#include "hessberg/text.hpp"

#include <cctype>
#include <sstream>

#include "hessberg/errors.hpp"

namespace hessberg {

static std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Splits on sep, but never inside a [...] coefficient vector.
static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']' && depth > 0) --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

static int parse_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (...) {
        throw InputError("expected an integer for " + what + ", got '" + s + "'");
    }
    if (pos != s.size())
        throw InputError("trailing characters after integer in " + what + ": '" + s + "'");
    return v;
}

Root parse_root_text(const std::string& text, int rank) {
    std::string t = strip(text);
    if (t.empty()) throw InputError("empty root expression");

    bool negate = false;
    if (t[0] == '-' && t.size() > 1 && t[1] == '[') {
        negate = true;
        t = t.substr(1);
    }
    if (t[0] == '[') {
        if (t.back() != ']') throw InputError("unterminated coefficient vector '" + text + "'");
        std::string body = t.substr(1, t.size() - 2);
        std::vector<std::string> parts = body.empty() ? std::vector<std::string>{} : split(body, ',');
        if (static_cast<int>(parts.size()) != rank)
            throw InputError("coefficient vector '" + text + "' needs exactly " +
                             std::to_string(rank) + " entries");
        Root r{std::vector<int>(rank, 0)};
        for (int i = 0; i < rank; ++i) r.coeffs[i] = parse_int(strip(parts[i]), "root coefficient");
        if (negate) r = r.negated();
        if (r.is_zero()) throw InputError("zero vector is not a root");
        return r;
    }

    // Symbolic sum of terms [+-][k]a<i>.
    Root r{std::vector<int>(rank, 0)};
    std::size_t p = 0;
    bool any = false;
    while (p < t.size()) {
        while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
        if (p >= t.size()) break;
        int sign = 1;
        if (t[p] == '+' || t[p] == '-') {
            sign = t[p] == '-' ? -1 : 1;
            ++p;
        } else if (any) {
            throw InputError("expected + or - between root terms in '" + text + "'");
        }
        while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
        int coef = 1;
        if (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) {
            coef = 0;
            while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p])))
                coef = coef * 10 + (t[p++] - '0');
        }
        if (p >= t.size() || t[p] != 'a')
            throw InputError("malformed root term in '" + text + "' (expected e.g. a1, 2a3)");
        ++p;
        if (p >= t.size() || !std::isdigit(static_cast<unsigned char>(t[p])))
            throw InputError("root term missing simple index in '" + text + "'");
        int idx = 0;
        while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p])))
            idx = idx * 10 + (t[p++] - '0');
        if (idx < 1 || idx > rank)
            throw InputError("simple root index " + std::to_string(idx) + " out of range 1.." +
                             std::to_string(rank));
        r.coeffs[idx - 1] += sign * coef;
        any = true;
    }
    if (!any) throw InputError("empty root expression '" + text + "'");
    if (r.is_zero()) throw InputError("root expression '" + text + "' sums to zero");
    return r;
}

std::string root_symbolic(const Root& r) {
    std::string out;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        int c = r.coeffs[i];
        if (c == 0) continue;
        if (c > 0 && !out.empty()) out += "+";
        if (c < 0) out += "-";
        if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
        out += "a" + std::to_string(i + 1);
    }
    return out;
}

std::string root_vector_text(const Root& r) {
    std::string out = "[";
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        out += (i ? "," : "") + std::to_string(r.coeffs[i]);
    return out + "]";
}

std::vector<int> parse_word_text(const std::string& text, int rank) {
    std::istringstream in(strip(text));
    std::vector<int> letters;
    std::string tok;
    bool saw_e = false;
    while (in >> tok) {
        if (tok == "e") {
            saw_e = true;
            continue;
        }
        if (tok.size() < 2 || tok[0] != 's')
            throw InputError("malformed word letter '" + tok + "' (expected s1, s2, ... or e)");
        int idx = parse_int(tok.substr(1), "word letter");
        if (idx < 1 || idx > rank)
            throw InputError("word letter " + tok + " out of range 1.." + std::to_string(rank));
        letters.push_back(idx - 1);
    }
    if (saw_e && !letters.empty())
        throw InputError("'e' cannot be mixed with letters in a word");
    return letters;
}

std::string word_text(const std::vector<int>& letters) {
    if (letters.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i)
        out += (i ? " s" : "s") + std::to_string(letters[i] + 1);
    return out;
}

std::uint32_t parse_levi_text(const std::string& text, int rank) {
    std::string t = strip(text);
    if (t.empty()) return 0;
    std::uint32_t mask = 0;
    for (const std::string& part : split(t, ',')) {
        int idx = parse_int(strip(part), "Levi index");
        if (idx < 1 || idx > rank)
            throw InputError("Levi index " + std::to_string(idx) + " out of range 1.." +
                             std::to_string(rank));
        mask |= std::uint32_t(1) << (idx - 1);
    }
    return mask;
}

std::string levi_text(std::uint32_t mask, int rank) {
    std::string out;
    for (int i = 0; i < rank; ++i) {
        if ((mask >> i) & 1) {
            if (!out.empty()) out += ",";
            out += std::to_string(i + 1);
        }
    }
    return out;
}

HessenbergSpace parse_hessenberg_text(const RootSystem& rs, const std::string& text) {
    std::string t = strip(text);
    if (t == "all")
        throw InputError("--hess all is only valid for catalog-style commands");
    if (t.rfind("neg=", 0) == 0) {
        std::string body = strip(t.substr(4));
        std::vector<Root> roots;
        if (!body.empty())
            for (const std::string& part : split(body, ','))
                roots.push_back(parse_root_text(part, rs.rank()));
        return hessenberg_from_negative_roots(rs, roots);
    }
    if (t.rfind("h=", 0) == 0) {
        std::vector<int> h;
        for (const std::string& part : split(t.substr(2), ','))
            h.push_back(parse_int(strip(part), "Hessenberg function value"));
        return hessenberg_from_function(rs, h);
    }
    throw InputError("malformed Hessenberg space '" + text +
                     "' (expected neg=..., h=..., or all)");
}

NilpotentSupport parse_nilpotent_text(const RootSystem& rs, const std::string& text) {
    std::string t = strip(text);
    NilpotentSupport n;
    if (t.empty()) return n;
    for (const std::string& part : split(t, ',')) {
        Root r = parse_root_text(part, rs.rank());
        auto id = rs.positive_id_of(r);
        if (!id)
            throw InputError("nilpotent support member '" + strip(part) +
                             "' is not a positive root of " + rs.name());
        n.phi_n.set(*id);
    }
    return n;
}

}  // namespace hessberg
