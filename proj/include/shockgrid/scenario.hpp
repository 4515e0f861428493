#pragma once

// Demand scenarios: bundled sector-shock tables plus loading, validation,
// canonical serialization and category->sector resolution.
//
// Bundled scenarios are embedded as CSV text in the exact schema accepted
// for user files (sector_code, shock_pct, postponed, source) and go through
// the same parser. cbo_severe / cbo_mild carry NAICS 2-digit prefixes and
// cover all 24 sectors; the other tables are spending-category estimates
// that are translated to NAICS prefixes through a best-effort mapping and
// flagged "approximate".

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "shockgrid/csv.hpp"
#include "shockgrid/errors.hpp"
#include "shockgrid/types.hpp"

namespace shockgrid {

inline const std::array<std::string_view, 24>& naics2_sectors() {
    static const std::array<std::string_view, 24> sectors = {
        "11", "21", "22", "23", "31", "32", "33", "42", "44", "45", "48", "49",
        "51", "52", "53", "54", "55", "56", "61", "62", "71", "72", "81", "92"};
    return sectors;
}

namespace detail {

inline constexpr const char* cbo_severe_csv = R"(sector_code,shock_pct,postponed,source
11,-10,,CBO (2006) severe
21,-10,,CBO (2006) severe
22,0,,CBO (2006) severe
23,-10,,CBO (2006) severe
31,-10,,CBO (2006) severe
32,-10,,CBO (2006) severe
33,-10,,CBO (2006) severe
42,-10,,CBO (2006) severe
44,-10,,CBO (2006) severe
45,-10,,CBO (2006) severe
48,-67,,CBO (2006) severe
49,-67,,CBO (2006) severe
51,0,,CBO (2006) severe
52,0,,CBO (2006) severe
53,0,,CBO (2006) severe
54,0,,CBO (2006) severe
55,0,,CBO (2006) severe
56,0,,CBO (2006) severe
61,0,,CBO (2006) severe
62,15,,CBO (2006) severe
71,-80,,CBO (2006) severe
72,-80,,CBO (2006) severe
81,-5,,CBO (2006) severe
92,0,,CBO (2006) severe
)";

inline constexpr const char* cbo_mild_csv = R"(sector_code,shock_pct,postponed,source
11,-3,,CBO (2006) mild
21,-3,,CBO (2006) mild
22,0,,CBO (2006) mild
23,-3,,CBO (2006) mild
31,-3,,CBO (2006) mild
32,-3,,CBO (2006) mild
33,-3,,CBO (2006) mild
42,-3,,CBO (2006) mild
44,-3,,CBO (2006) mild
45,-3,,CBO (2006) mild
48,-17,,CBO (2006) mild
49,-17,,CBO (2006) mild
51,0,,CBO (2006) mild
52,0,,CBO (2006) mild
53,0,,CBO (2006) mild
54,0,,CBO (2006) mild
55,0,,CBO (2006) mild
56,0,,CBO (2006) mild
61,0,,CBO (2006) mild
62,4,,CBO (2006) mild
71,-20,,CBO (2006) mild
72,-20,,CBO (2006) mild
81,-1,,CBO (2006) mild
92,0,,CBO (2006) mild
)";

inline constexpr const char* keogh_brown_csv = R"(sector_code,shock_pct,postponed,source
"Food, drink, alcohol and tobacco",0,,Keogh-Brown et al. (2010)
Clothing and footwear,-50,yes,Keogh-Brown et al. (2010)
"Housing, heating, etc.",0,,Keogh-Brown et al. (2010)
"Goods and services (furniture, etc.)",-80,yes,Keogh-Brown et al. (2010)
Transport - buying cars,-100,yes,Keogh-Brown et al. (2010)
Transport services and car use,-50,no,Keogh-Brown et al. (2010)
Recreation and culture - durables,-100,yes,Keogh-Brown et al. (2010)
Recreation and culture - games and pets,0,,Keogh-Brown et al. (2010)
Recreation and culture - sport and culture,-100,no,Keogh-Brown et al. (2010)
Recreation and culture - newspapers and books,0,,Keogh-Brown et al. (2010)
"Restaurants, hotels and net tourism",-100,no,Keogh-Brown et al. (2010)
"Miscellaneous (incl health, communication education)",0,,Keogh-Brown et al. (2010)
)";

inline constexpr const char* oecd_isic_csv = R"(sector_code,shock_pct,postponed,source
Manufacturing of transport equipment (29-30),-100,,OECD (2020) ISIC
Construction (VF),-50,,OECD (2020) ISIC
Wholesale and retail trade (VG),-75,,OECD (2020) ISIC
Air transport (V51),-75,,OECD (2020) ISIC
Accommodation and food services (VI),-75,,OECD (2020) ISIC
Real estate services excluding imputed rent (VL-V68A),-75,,OECD (2020) ISIC
Professional service activities (VM),-50,,OECD (2020) ISIC
"Arts, entertainment and recreation (VR)",-75,,OECD (2020) ISIC
Other service activities (VS),-100,,OECD (2020) ISIC
)";

inline constexpr const char* oecd_coicop_csv = R"(sector_code,shock_pct,postponed,source
Clothing and footwear (3),-100,,OECD (2020) COICOP
Furnishings and household equipment (5),-100,,OECD (2020) COICOP
Vehicle purchases (7.1),-100,,OECD (2020) COICOP
Operation of private vehicles (7.2),-50,,OECD (2020) COICOP
Transport services (7.3),-50,,OECD (2020) COICOP
Recreation and culture excluding package holidays (9.1-9.5),-75,,OECD (2020) COICOP
Package holidays (9.6),-100,,OECD (2020) COICOP
Hotels and restaurants (11),-75,,OECD (2020) COICOP
Personal care services (12.1),-100,,OECD (2020) COICOP
)";

inline constexpr const char* muellbauer_csv = R"(sector_code,shock_pct,postponed,source
Restaurants and Hotels,-71,,Muellbauer (2020)
Transport services,-70,,Muellbauer (2020)
Recreation services,-63,,Muellbauer (2020)
Food at home,43,,Muellbauer (2020)
Healthcare,18,,Muellbauer (2020)
)";

// Best-effort category -> NAICS prefix translations for the non-NAICS
// tables. Deliberately coarse; results carry the `approximate` flag.
inline const std::map<std::string, std::map<std::string, std::vector<std::string>>>&
sector_mappings() {
    static const std::map<std::string, std::map<std::string, std::vector<std::string>>> maps = {
        {"keogh_brown",
         {
             {"Food, drink, alcohol and tobacco", {"445"}},
             {"Clothing and footwear", {"448"}},
             {"Housing, heating, etc.", {"22", "531"}},
             {"Goods and services (furniture, etc.)", {"442"}},
             {"Transport - buying cars", {"441"}},
             {"Transport services and car use", {"48", "447"}},
             {"Recreation and culture - durables", {"443"}},
             {"Recreation and culture - games and pets", {"453"}},
             {"Recreation and culture - sport and culture", {"71"}},
             {"Recreation and culture - newspapers and books", {"511"}},
             {"Restaurants, hotels and net tourism", {"72"}},
             {"Miscellaneous (incl health, communication education)", {"62", "61", "517"}},
         }},
        {"oecd_isic",
         {
             {"Manufacturing of transport equipment (29-30)", {"336"}},
             {"Construction (VF)", {"23"}},
             {"Wholesale and retail trade (VG)", {"42", "44", "45"}},
             {"Air transport (V51)", {"481"}},
             {"Accommodation and food services (VI)", {"72"}},
             {"Real estate services excluding imputed rent (VL-V68A)", {"531"}},
             {"Professional service activities (VM)", {"54"}},
             {"Arts, entertainment and recreation (VR)", {"71"}},
             {"Other service activities (VS)", {"81"}},
         }},
        {"oecd_coicop",
         {
             {"Clothing and footwear (3)", {"448"}},
             {"Furnishings and household equipment (5)", {"442"}},
             {"Vehicle purchases (7.1)", {"441"}},
             {"Operation of private vehicles (7.2)", {"447"}},
             {"Transport services (7.3)", {"48"}},
             {"Recreation and culture excluding package holidays (9.1-9.5)", {"71"}},
             {"Package holidays (9.6)", {"5615"}},
             {"Hotels and restaurants (11)", {"72"}},
             {"Personal care services (12.1)", {"812"}},
         }},
        {"muellbauer",
         {
             {"Restaurants and Hotels", {"72"}},
             {"Transport services", {"48"}},
             {"Recreation services", {"71"}},
             {"Food at home", {"445"}},
             {"Healthcare", {"62"}},
         }},
    };
    return maps;
}

inline const std::map<std::string, const char*>& bundled_scenarios() {
    static const std::map<std::string, const char*> bundle = {
        {"cbo_severe", cbo_severe_csv},   {"cbo_mild", cbo_mild_csv},
        {"keogh_brown", keogh_brown_csv}, {"oecd_isic", oecd_isic_csv},
        {"oecd_coicop", oecd_coicop_csv}, {"muellbauer", muellbauer_csv},
    };
    return bundle;
}

inline bool is_sector_prefix(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

inline std::optional<bool> parse_postponed(const std::string& s) {
    if (s.empty() || s == "NA" || s == "na") return std::nullopt;
    if (s == "yes" || s == "true" || s == "1") return true;
    if (s == "no" || s == "false" || s == "0") return false;
    raise(errc::malformed_scenario, "postponed flag '" + s + "' not yes/no/empty");
}

} // namespace detail

struct scenario_load {
    demand_scenario scenario;
    std::vector<std::string> warnings;
};

// Parse scenario CSV text. shock_pct is in percent and becomes a signed
// fraction; prefixes must be unique within the scenario.
inline scenario_load parse_scenario_csv(const std::string& name, const std::string& text) {
    csv_table table = parse_csv(text);
    table.require_columns({"sector_code", "shock_pct"}, "scenario " + name);
    scenario_load out;
    out.scenario.name = name;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < table.row_count(); ++i) {
        demand_scenario::entry ent;
        ent.sector = table.cell(i, "sector_code");
        if (ent.sector.empty())
            raise(errc::malformed_scenario, name + ": empty sector_code in row " + std::to_string(i + 2));
        if (!seen.insert(ent.sector).second)
            raise(errc::malformed_scenario, name + ": duplicate sector '" + ent.sector + "'");
        double pct = table.number(i, "shock_pct");
        ent.shock = pct / 100.0;
        if (ent.shock < -1.0 || ent.shock > 1.0)
            raise(errc::malformed_scenario, name + ": shock " + std::to_string(pct) +
                                                "% for '" + ent.sector + "' outside [-100, 100]");
        if (table.has_column("postponed"))
            ent.postponed = detail::parse_postponed(table.cell(i, "postponed"));
        if (table.has_column("source")) ent.source = table.cell(i, "source");
        out.scenario.entries.push_back(std::move(ent));
    }
    if (out.scenario.entries.empty())
        raise(errc::malformed_scenario, name + ": scenario has no entries");
    return out;
}

// NAICS 2-digit coverage check. Complete coverage is required for the CBO
// scenarios and produces warnings elsewhere.
inline std::vector<std::string> uncovered_sectors(const demand_scenario& scenario) {
    std::vector<std::string> missing;
    for (auto sector : naics2_sectors()) {
        bool covered = false;
        for (const auto& ent : scenario.entries) {
            if (!detail::is_sector_prefix(ent.sector)) continue;
            auto& p = ent.sector;
            if (p.size() <= sector.size() ? sector.compare(0, p.size(), p) == 0
                                          : p.compare(0, sector.size(), sector) == 0) {
                covered = true;
                break;
            }
        }
        if (!covered) missing.emplace_back(sector);
    }
    return missing;
}

// Translate spending-category entries into NAICS prefix entries using the
// bundled mapping (or a caller-supplied one). Categories without a mapping
// are dropped with a warning; the result is flagged approximate.
inline scenario_load resolve_to_sectors(
    const demand_scenario& scenario,
    const std::map<std::string, std::vector<std::string>>& mapping) {
    scenario_load out;
    out.scenario.name = scenario.name;
    std::set<std::string> used;
    bool mapped_any = false;
    for (const auto& ent : scenario.entries) {
        if (detail::is_sector_prefix(ent.sector)) {
            out.scenario.entries.push_back(ent);
            used.insert(ent.sector);
            continue;
        }
        auto it = mapping.find(ent.sector);
        if (it == mapping.end()) {
            out.warnings.push_back("category '" + ent.sector + "' has no sector mapping; dropped");
            continue;
        }
        mapped_any = true;
        for (const auto& prefix : it->second) {
            if (!used.insert(prefix).second)
                raise(errc::malformed_scenario, scenario.name + ": mapping assigns sector '" +
                                                    prefix + "' twice");
            demand_scenario::entry mapped = ent;
            mapped.sector = prefix;
            mapped.source = ent.source.empty() ? "mapped from '" + ent.sector + "'"
                                               : ent.source + "; mapped from '" + ent.sector + "'";
            out.scenario.entries.push_back(std::move(mapped));
        }
    }
    out.scenario.approximate = scenario.approximate || mapped_any;
    return out;
}

// Pad a scenario with zero-shock entries for uncovered NAICS 2-digit
// sectors so every industry resolves; each pad is reported.
inline scenario_load pad_to_full_coverage(const demand_scenario& scenario) {
    scenario_load out{scenario, {}};
    for (const auto& sector : uncovered_sectors(scenario)) {
        out.warnings.push_back("sector " + sector + " not covered by scenario '" + scenario.name +
                               "'; assuming zero demand shock");
        out.scenario.entries.push_back({sector, 0.0, std::nullopt, "assumed (no coverage)"});
    }
    return out;
}

// Load a bundled scenario by name or a CSV file by path. Bundled CBO
// scenarios must cover all 24 sectors; other sources yield coverage
// warnings only.
inline scenario_load load_scenario(const std::string& name_or_path) {
    const auto& bundle = detail::bundled_scenarios();
    std::string text;
    std::string name;
    if (auto it = bundle.find(name_or_path); it != bundle.end()) {
        name = it->first;
        text = it->second;
    } else if (std::filesystem::exists(name_or_path)) {
        name = std::filesystem::path(name_or_path).stem().string();
        text = read_file(name_or_path);
    } else {
        std::string known;
        for (const auto& [k, v] : bundle) known += (known.empty() ? "" : ", ") + k;
        raise(errc::unknown_scenario,
              "'" + name_or_path + "' is neither a bundled scenario (" + known + ") nor a file");
    }
    scenario_load out = parse_scenario_csv(name, text);
    auto missing = uncovered_sectors(out.scenario);
    if (!missing.empty()) {
        if (name == "cbo_severe" || name == "cbo_mild")
            raise(errc::incomplete_coverage, name + " must cover all NAICS 2-digit sectors");
        std::string list;
        for (const auto& s : missing) list += (list.empty() ? "" : ",") + s;
        out.warnings.push_back("scenario '" + name + "' leaves sectors uncovered: " + list);
    }
    return out;
}

inline const std::map<std::string, std::vector<std::string>>* bundled_sector_mapping(
    const std::string& scenario_name) {
    const auto& maps = detail::sector_mappings();
    auto it = maps.find(scenario_name);
    return it == maps.end() ? nullptr : &it->second;
}

inline std::vector<std::string> bundled_scenario_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : detail::bundled_scenarios()) names.push_back(k);
    return names;
}

// Canonical CSV form: fixed header, entries sorted by sector code, shocks
// printed as minimal percent numbers. parse -> serialize is idempotent.
inline std::string serialize_scenario(const demand_scenario& scenario) {
    std::vector<demand_scenario::entry> entries = scenario.entries;
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.sector < b.sector; });
    std::string out = "sector_code,shock_pct,postponed,source\n";
    for (const auto& ent : entries) {
        out += csv_quote(ent.sector);
        out += ',';
        out += format_minimal(ent.shock * 100.0);
        out += ',';
        if (ent.postponed) out += *ent.postponed ? "yes" : "no";
        out += ',';
        out += csv_quote(ent.source);
        out += '\n';
    }
    return out;
}

} // namespace shockgrid
