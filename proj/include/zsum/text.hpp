#pragma once

// Textual syntax shared by the CLI and the report writers:
//   groups      "8" or "2x4"
//   elements    "5" (cyclic) or "1:3" (colon-joined residues)
//   sequences   "0,0,1,3" (comma-joined entries; empty string = empty)
//   weight sets "1,-1" (reduced modulo the exponent on parse)

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>

#include "zsum/lemmas.hpp"
#include "zsum/sequence.hpp"

namespace zsum {

namespace detail {

inline std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline long long parse_int(std::string_view s, const char* what) {
    s = trimmed(s);
    long long v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::invalid_argument(std::string("cannot parse ") + what + " from '" +
                                    std::string(s) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace detail

inline GroupSpec parse_group(std::string_view text) {
    std::vector<int> orders;
    for (auto part : detail::split(text, 'x')) {
        const long long f = detail::parse_int(part, "cyclic factor order");
        if (f < 1 || f > INT32_MAX) throw std::invalid_argument("factor order out of range");
        orders.push_back(static_cast<int>(f));
    }
    return GroupSpec(std::move(orders));
}

inline std::string format_group(const GroupSpec& G) {
    std::string out;
    for (std::size_t i = 0; i < G.orders().size(); ++i) {
        if (i) out += 'x';
        out += std::to_string(G.orders()[i]);
    }
    return out;
}

/// Residues are reduced modulo the factor orders, so "-1" in Z/5 means 4.
inline GroupElement parse_element(std::string_view text, const GroupSpec& G) {
    const auto parts = detail::split(text, ':');
    if (static_cast<int>(parts.size()) != G.rank())
        throw std::invalid_argument("element '" + std::string(text) + "' has " +
                                    std::to_string(parts.size()) + " components, group " +
                                    format_group(G) + " needs " + std::to_string(G.rank()));
    std::vector<int> r(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const long long o = G.orders()[k];
        long long v = detail::parse_int(parts[k], "element residue") % o;
        if (v < 0) v += o;
        r[k] = static_cast<int>(v);
    }
    return GroupElement(std::move(r));
}

inline std::string format_element(const GroupElement& g) {
    std::string out;
    for (std::size_t k = 0; k < g.residues.size(); ++k) {
        if (k) out += ':';
        out += std::to_string(g.residues[k]);
    }
    return out;
}

inline Sequence parse_sequence(std::string_view text, const GroupSpec& G) {
    if (detail::trimmed(text).empty()) return Sequence();
    std::vector<GroupElement> entries;
    for (auto part : detail::split(text, ',')) entries.push_back(parse_element(part, G));
    return Sequence(std::move(entries), G);
}

inline std::string format_sequence(const Sequence& S) {
    std::string out;
    for (std::size_t i = 0; i < S.entries().size(); ++i) {
        if (i) out += ',';
        out += format_element(S.entries()[i]);
    }
    return out;
}

inline std::vector<long long> parse_weight_list(std::string_view text) {
    std::vector<long long> raw;
    for (auto part : detail::split(text, ',')) raw.push_back(detail::parse_int(part, "weight"));
    return raw;
}

inline WeightSet parse_weights(std::string_view text, const GroupSpec& G) {
    return WeightSet(parse_weight_list(text), G);
}

inline std::string format_weights(const WeightSet& A) {
    std::string out;
    for (std::size_t i = 0; i < A.residues().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(A.residues()[i]);
    }
    return out;
}

/// Semicolon-separated sets of comma-separated elements: "1,2;0;3,4".
inline SetSequence parse_set_sequence(std::string_view text, const GroupSpec& G) {
    SetSequence A;
    for (auto part : detail::split(text, ';')) {
        std::vector<GroupElement> set;
        for (auto el : detail::split(part, ','))
            if (!detail::trimmed(el).empty()) set.push_back(parse_element(el, G));
        if (set.empty()) throw std::invalid_argument("set sequence members must be nonempty");
        A.sets.push_back(std::move(set));
    }
    return A;
}

/// RFC4180-ish: quote when a comma, quote or newline is present.
inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace zsum
