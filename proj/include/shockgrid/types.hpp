#pragma once

// Shared domain types of the shock pipeline. All of these are plain
// immutable-after-construction value types; axes are kept as sorted code
// lists so that any two objects sharing an axis agree element by element.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shockgrid/codes.hpp"
#include "shockgrid/matrix.hpp"

namespace shockgrid {

// Binary essential flags over the fine industry codes.
struct essential_list {
    struct entry {
        class_code code;
        int essential = 0; // exactly 0 or 1
    };
    std::vector<entry> entries;
};

struct override_entry {
    class_code code;
    double share = 0.0; // replacement essential share in [0,1]
    std::string note;
};
using override_list = std::vector<override_entry>;

struct override_audit {
    class_code code;
    double old_value = 0.0;
    double new_value = 0.0;
    std::string note;
};

// Incidence of analysis industries (rows) versus fine codes (columns).
struct concordance {
    std::vector<class_code> row_codes;
    std::vector<class_code> col_codes;
    std::vector<std::pair<std::size_t, std::size_t>> links; // sorted, unique (row, col)

    matrix incidence() const {
        matrix m(row_codes.size(), col_codes.size());
        for (auto [r, c] : links) m.at(r, c) = 1.0;
        return m;
    }
};

// Jobs per (industry, occupation) cell.
struct employment_matrix {
    std::vector<class_code> industries;
    std::vector<class_code> occupations;
    matrix counts; // N x J, persons
};

// Binary occupation x activity incidence.
struct activity_map {
    std::vector<class_code> occupations;
    std::vector<std::string> activities;
    matrix links; // J x I, entries 0/1
};

struct remotability_vector {
    std::vector<std::string> activities;
    std::vector<int> remote; // 0/1 per activity
};

// Consensus ratings input: one row per activity, one column per rater.
struct ratings_table {
    std::vector<std::string> activity_ids;
    std::vector<std::string> titles;
    matrix ratings; // I x R, entries 0/1
};

enum class shock_kind {
    essential_score, // e (industries) or x (occupations), in [0,1]
    rli,             // r or y, in [0,1]
    supply,          // ISS or OSS, in [-1,0]
    demand,          // IDS or ODS, may be positive
    total,           // min(supply, demand), <= 0
    total_health,    // demand-growth variant, may be positive
};

struct shock_vector {
    std::vector<class_code> entities;
    shock_kind kind = shock_kind::essential_score;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

struct wage_table {
    std::vector<class_code> occupations;
    std::vector<double> employment; // persons
    std::vector<std::optional<double>> mean_wage;
    std::vector<std::optional<double>> median_wage;
    std::vector<std::optional<double>> exposure; // infection-exposure index, 0-100
};

struct value_added_table {
    std::vector<class_code> industries;
    std::vector<double> value_added;
    std::vector<double> gross_output;
};

struct quartile_row {
    std::size_t occupation_count = 0;
    double employment = 0.0;       // persons in this quartile
    double employment_share = 0.0; // of covered employment
    double employment_shock = 0.0; // employment-weighted mean shock
    double wage_bill = 0.0;
    double lost_wage_share = 0.0; // of economy-wide wage loss
};
using quartile_report = std::array<quartile_row, 4>;

struct venn_report {
    double non_essential = 0.0;       // workers in non-essential jobs
    double cannot_remote = 0.0;       // workers who cannot work remotely
    double intersection = 0.0;        // both: workers who cannot work
    double essential_and_remote = 0.0;
};

struct aggregate_cells {
    double employment = 0.0;
    double wages = 0.0;
    double value_added = 0.0;
};

struct aggregate_report {
    aggregate_cells supply;
    aggregate_cells demand;
    aggregate_cells total;
    aggregate_cells total_health;
    quartile_report quartiles{};
    venn_report venn;
};

// One scenario entry: either a numeric sector-code prefix ("48") or a
// spending-category label ("Restaurants and Hotels") that still needs a
// sector mapping before it can drive industry shocks.
struct demand_scenario {
    struct entry {
        std::string sector;
        double shock = 0.0; // signed fraction, -1..+1
        std::optional<bool> postponed;
        std::string source;
    };
    std::string name;
    std::vector<entry> entries;
    bool approximate = false; // true once a best-effort category->sector mapping was applied

    const entry* find(const std::string& sector) const {
        for (const auto& e : entries)
            if (e.sector == sector) return &e;
        return nullptr;
    }
};

struct epidemic_params {
    double attack_rate = 0.0;    // fraction of population infected
    double fatality = 0.0;       // fraction of infected who die
    double weeks_out = 0.0;      // weeks of work lost per surviving case
    double weeks_per_year = 48.0;
};

} // namespace shockgrid
