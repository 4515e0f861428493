#pragma once

// Hierarchical classification codes (NAICS, NACE, SOC, ...) and prefix
// expansion. A code contains another code of the same scheme when its
// digit string is a prefix ("325" contains "325130").

#include <algorithm>
#include <cctype>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shockgrid/errors.hpp"

namespace shockgrid {

enum class scheme {
    naics,
    nace,
    soc,
    onet_soc,
    bls_io,
    custom,
};

inline std::string_view to_string(scheme s) {
    switch (s) {
        case scheme::naics: return "NAICS";
        case scheme::nace: return "NACE";
        case scheme::soc: return "SOC";
        case scheme::onet_soc: return "ONET_SOC";
        case scheme::bls_io: return "BLS_IO";
        case scheme::custom: return "CUSTOM";
    }
    return "?";
}

inline scheme scheme_from_string(std::string_view s) {
    if (s == "NAICS" || s == "naics") return scheme::naics;
    if (s == "NACE" || s == "nace") return scheme::nace;
    if (s == "SOC" || s == "soc") return scheme::soc;
    if (s == "ONET_SOC" || s == "onet_soc" || s == "ONET-SOC") return scheme::onet_soc;
    if (s == "BLS_IO" || s == "bls_io" || s == "BLS-IO") return scheme::bls_io;
    if (s == "CUSTOM" || s == "custom") return scheme::custom;
    raise(errc::schema_error, "unknown scheme '" + std::string(s) + "'");
}

// Letters are legal only in schemes that use alphanumeric labels.
inline bool scheme_allows_letters(scheme s) {
    return s == scheme::nace || s == scheme::bls_io || s == scheme::custom;
}

struct class_code {
    scheme code_scheme = scheme::custom;
    std::string digits;
    std::string title;

    friend bool operator==(const class_code& a, const class_code& b) {
        return a.code_scheme == b.code_scheme && a.digits == b.digits;
    }
    friend std::strong_ordering operator<=>(const class_code& a, const class_code& b) {
        if (a.code_scheme != b.code_scheme)
            return static_cast<int>(a.code_scheme) <=> static_cast<int>(b.code_scheme);
        return a.digits <=> b.digits;
    }

    bool contains(const class_code& finer) const {
        return code_scheme == finer.code_scheme && finer.digits.size() >= digits.size() &&
               finer.digits.compare(0, digits.size(), digits) == 0;
    }

    std::string str() const {
        return std::string(to_string(code_scheme)) + ":" + digits;
    }
};

// Separators (hyphen, dot) are presentation only and stripped up front,
// so SOC "11-1011" and "111011" are the same code.
inline class_code parse_code(scheme s, std::string_view raw, std::string_view title = {}) {
    std::string digits;
    digits.reserve(raw.size());
    std::size_t begin = raw.find_first_not_of(" \t\r\n");
    std::size_t end = raw.find_last_not_of(" \t\r\n");
    if (begin == std::string_view::npos)
        raise(errc::malformed_code, "empty code");
    for (std::size_t i = begin; i <= end; ++i) {
        char c = raw[i];
        if (c == '-' || c == '.') continue;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
        } else if (std::isalpha(static_cast<unsigned char>(c)) && scheme_allows_letters(s)) {
            digits.push_back(c);
        } else {
            raise(errc::malformed_code, "illegal character '" + std::string(1, c) + "' in '" +
                                            std::string(raw) + "' for scheme " +
                                            std::string(to_string(s)));
        }
    }
    if (digits.size() < 2 || digits.size() > 8)
        raise(errc::malformed_code, "code '" + std::string(raw) + "' has length " +
                                        std::to_string(digits.size()) + ", expected 2-8");
    return class_code{s, std::move(digits), std::string(title)};
}

inline std::vector<class_code> expand_prefix(const class_code& coarse,
                                             std::span<const class_code> universe) {
    std::vector<class_code> out;
    for (const auto& c : universe) {
        if (c.code_scheme != coarse.code_scheme)
            raise(errc::scheme_mismatch, "universe code " + c.str() + " does not match scheme of " +
                                             coarse.str());
        if (coarse.contains(c)) out.push_back(c);
    }
    return out;
}

inline void sort_codes(std::vector<class_code>& codes) {
    std::sort(codes.begin(), codes.end());
}

// Index of an exact code in a sorted axis, or -1.
inline long find_code(std::span<const class_code> sorted_axis, const class_code& code) {
    auto it = std::lower_bound(sorted_axis.begin(), sorted_axis.end(), code);
    if (it != sorted_axis.end() && *it == code) return it - sorted_axis.begin();
    return -1;
}

} // namespace shockgrid
