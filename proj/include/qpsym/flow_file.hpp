#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qpsym/flow.hpp"

namespace qpsym {

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace detail

/// Parsed flow spec file, prior to semantic validation.
///
/// Line-oriented grammar, '#' starts a comment:
///   min_poly = c0 c1 ... cd        (integers, low-to-high, monic)
///   root     = lo hi               (rationals "p/q" or integers)
///   n        = <int>
///   a1       = q0 q1 ... q(d-1)    (power-basis rational coordinates)
///   ...
///   an       = ...
struct FlowFile {
    std::vector<BigInt> min_poly;
    Rational root_lo, root_hi;
    std::size_t n = 0;
    std::vector<std::vector<Rational>> frequency_coords;
};

/// Syntax layer only: structural problems raise ParseError; field or flow
/// validity is checked when the objects are built.
inline FlowFile parse_flow_file(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty key or value");
        if (!kv.emplace(key, value).second)
            throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }

    auto take = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParseError("missing '" + key + "' line");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    FlowFile f;
    for (const auto& tok : detail::split_ws(take("min_poly")))
        f.min_poly.push_back(Rational::parse_int(tok));
    if (f.min_poly.size() < 2) throw ParseError("min_poly needs degree >= 1");
    if (f.min_poly.back() != 1) throw ParseError("min_poly must be monic");

    auto root = detail::split_ws(take("root"));
    if (root.size() != 2) throw ParseError("root needs exactly two endpoints");
    f.root_lo = Rational::parse(root[0]);
    f.root_hi = Rational::parse(root[1]);

    auto ntok = detail::split_ws(take("n"));
    if (ntok.size() != 1) throw ParseError("n needs exactly one value");
    BigInt nval = Rational::parse_int(ntok[0]);
    if (nval < 1 || nval > 64) throw ParseError("n out of range");
    f.n = static_cast<std::size_t>(nval);

    std::size_t d = f.min_poly.size() - 1;
    for (std::size_t i = 1; i <= f.n; ++i) {
        auto toks = detail::split_ws(take("a" + std::to_string(i)));
        if (toks.size() != d)
            throw ParseError("a" + std::to_string(i) + " needs exactly " + std::to_string(d) +
                             " coordinates");
        std::vector<Rational> coords;
        coords.reserve(d);
        for (const auto& t : toks) coords.push_back(Rational::parse(t));
        f.frequency_coords.push_back(std::move(coords));
    }
    if (!kv.empty()) throw ParseError("unexpected key '" + kv.begin()->first + "'");
    return f;
}

/// Parse and validate: returns the frequency vector of the flow.
/// ParseError for syntax, InvalidField / InvalidFlow for semantics.
inline FrequencyVector load_flow(std::istream& in) {
    FlowFile f = parse_flow_file(in);
    FieldPtr field = make_field(f.min_poly, f.root_lo, f.root_hi);
    std::vector<AlgebraicNumber> a;
    a.reserve(f.n);
    for (auto& coords : f.frequency_coords) a.emplace_back(field, std::move(coords));
    return FrequencyVector(field, std::move(a));
}

/// Translation vector grammar: coordinates '|'-separated, each coordinate a
/// ','-separated power-basis tuple of rationals (short tuples are padded
/// with zeros).
inline std::vector<AlgebraicNumber> parse_translation(const std::string& text,
                                                      const FieldPtr& field, std::size_t n) {
    std::vector<std::string> parts{""};
    for (char ch : text) {
        if (ch == '|')
            parts.emplace_back();
        else
            parts.back() += ch;
    }
    if (parts.size() != n) throw ParseError("translation needs " + std::to_string(n) + " coordinates");
    std::size_t d = field->degree();
    std::vector<AlgebraicNumber> out;
    out.reserve(n);
    for (const auto& part : parts) {
        std::vector<std::string> toks{""};
        for (char ch : part) {
            if (ch == ',')
                toks.emplace_back();
            else if (ch != ' ')
                toks.back() += ch;
        }
        if (toks.size() > d) throw ParseError("translation coordinate has too many entries");
        std::vector<Rational> coords(d);
        for (std::size_t k = 0; k < toks.size(); ++k) coords[k] = Rational::parse(toks[k]);
        out.emplace_back(field, std::move(coords));
    }
    return out;
}

} // namespace qpsym
