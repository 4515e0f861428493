#pragma once

// Economy-wide aggregation: inner products of occupation/industry shocks
// with employment, wage-bill and value-added shares, plus the wage-quartile
// and essential/remote (Venn) breakdowns.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "shockgrid/errors.hpp"
#include "shockgrid/shocks.hpp"
#include "shockgrid/types.hpp"

namespace shockgrid {

namespace detail {

inline void require_occupation_axis(const shock_vector& shock, const wage_table& wages) {
    if (shock.entities != wages.occupations)
        raise(errc::axis_misalignment, "shock vector and wage table disagree on occupations");
}

} // namespace detail

// Employment-share weighted shock: sum_j shock_j * L_j.
inline double aggregate_employment(const shock_vector& shock, const wage_table& wages) {
    detail::require_occupation_axis(shock, wages);
    double total = std::accumulate(wages.employment.begin(), wages.employment.end(), 0.0);
    if (total <= 0.0) raise(errc::degenerate_input, "total employment is zero");
    double acc = 0.0;
    for (std::size_t j = 0; j < shock.size(); ++j)
        acc += shock.values[j] * (wages.employment[j] / total);
    return acc;
}

// Wage-bill weighted shock. Occupations without a mean wage are left out
// and the shares are renormalized over the covered ones.
inline double aggregate_wages(const shock_vector& shock, const wage_table& wages) {
    detail::require_occupation_axis(shock, wages);
    double bill = 0.0;
    for (std::size_t j = 0; j < shock.size(); ++j)
        if (wages.mean_wage[j]) bill += wages.employment[j] * *wages.mean_wage[j];
    if (bill <= 0.0) raise(errc::missing_wages, "no occupation has a usable mean wage");
    double acc = 0.0;
    for (std::size_t j = 0; j < shock.size(); ++j)
        if (wages.mean_wage[j])
            acc += shock.values[j] * (wages.employment[j] * *wages.mean_wage[j] / bill);
    return acc;
}

// Value-added share weighted industry shock; GDP is the sum of value added
// over the industries present.
inline double aggregate_value_added(const shock_vector& shock, const value_added_table& va) {
    if (shock.entities != va.industries)
        raise(errc::axis_misalignment, "shock vector and value-added table disagree on industries");
    double gdp = std::accumulate(va.value_added.begin(), va.value_added.end(), 0.0);
    if (gdp <= 0.0) raise(errc::degenerate_input, "total value added is zero");
    double acc = 0.0;
    for (std::size_t n = 0; n < shock.size(); ++n)
        acc += shock.values[n] * (va.value_added[n] / gdp);
    return acc;
}

// Wage quartiles: occupations sorted by mean wage, quartile boundaries at
// 25/50/75% of cumulative employment. A whole occupation goes to the
// quartile containing the midpoint of its cumulative-employment interval,
// with boundary midpoints owned by the lower quartile. Occupations without
// a mean wage are excluded throughout.
inline quartile_report quartile_breakdown(const shock_vector& shock, const wage_table& wages) {
    detail::require_occupation_axis(shock, wages);
    std::vector<std::size_t> covered;
    for (std::size_t j = 0; j < wages.occupations.size(); ++j)
        if (wages.mean_wage[j]) covered.push_back(j);
    if (covered.empty()) raise(errc::missing_wages, "no occupation has a mean wage");
    std::sort(covered.begin(), covered.end(), [&](std::size_t a, std::size_t b) {
        if (*wages.mean_wage[a] != *wages.mean_wage[b])
            return *wages.mean_wage[a] < *wages.mean_wage[b];
        return wages.occupations[a] < wages.occupations[b];
    });
    double total_emp = 0.0;
    for (std::size_t j : covered) total_emp += wages.employment[j];
    if (total_emp <= 0.0) raise(errc::degenerate_input, "covered employment is zero");

    quartile_report report{};
    std::vector<double> weighted_shock(4, 0.0);
    std::vector<double> wage_loss(4, 0.0);
    double economy_wage_loss = 0.0;
    double cum = 0.0;
    for (std::size_t j : covered) {
        double emp = wages.employment[j];
        double midpoint = cum + emp / 2.0;
        cum += emp;
        // smallest q with midpoint <= q * total/4
        int q = static_cast<int>(std::ceil(midpoint * 4.0 / total_emp)) - 1;
        q = std::clamp(q, 0, 3);
        auto& row = report[static_cast<std::size_t>(q)];
        row.occupation_count += 1;
        row.employment += emp;
        weighted_shock[q] += shock.values[j] * emp;
        double bill = emp * *wages.mean_wage[j];
        row.wage_bill += bill;
        wage_loss[q] += shock.values[j] * bill;
        economy_wage_loss += shock.values[j] * bill;
    }
    for (int q = 0; q < 4; ++q) {
        auto& row = report[static_cast<std::size_t>(q)];
        row.employment_share = row.employment / total_emp;
        row.employment_shock = row.employment > 0.0 ? weighted_shock[q] / row.employment : 0.0;
        row.lost_wage_share = economy_wage_loss != 0.0 ? wage_loss[q] / economy_wage_loss : 0.0;
    }
    return report;
}

// Employment decomposition by (non-)essential x (non-)remotable. Shares of
// total employment; a job in industry n and occupation j is non-essential
// with weight (1-e_n) and non-remotable with weight (1-y_j).
inline venn_report venn_decomposition(const employment_matrix& m, const shock_vector& e,
                                      const shock_vector& y) {
    if (e.entities != m.industries)
        raise(errc::axis_misalignment, "e is not aligned with employment industries");
    if (y.entities != m.occupations)
        raise(errc::axis_misalignment, "y is not aligned with employment occupations");
    double total = m.counts.total();
    if (total <= 0.0) raise(errc::degenerate_input, "employment matrix is empty");
    venn_report out;
    for (std::size_t n = 0; n < m.industries.size(); ++n) {
        for (std::size_t j = 0; j < m.occupations.size(); ++j) {
            double w = m.counts.at(n, j) / total;
            if (w == 0.0) continue;
            double non_ess = 1.0 - e.values[n];
            double non_rem = 1.0 - y.values[j];
            out.non_essential += w * non_ess;
            out.cannot_remote += w * non_rem;
            out.intersection += w * non_ess * non_rem;
            out.essential_and_remote += w * e.values[n] * y.values[j];
        }
    }
    return out;
}

// The twelve headline cells plus quartiles and the Venn split.
// `health_growth_quartiles` switches the quartile/lost-wage basis from the
// plain total shock to the health-growth variant.
inline aggregate_report compute_aggregates(const shock_set& shocks, const employment_matrix& m,
                                           const wage_table& wages, const value_added_table& va,
                                           bool health_growth_quartiles = false) {
    aggregate_report out;
    out.supply = {aggregate_employment(shocks.oss, wages), aggregate_wages(shocks.oss, wages),
                  aggregate_value_added(shocks.iss, va)};
    out.demand = {aggregate_employment(shocks.ods, wages), aggregate_wages(shocks.ods, wages),
                  aggregate_value_added(shocks.ids, va)};
    out.total = {aggregate_employment(shocks.ots, wages), aggregate_wages(shocks.ots, wages),
                 aggregate_value_added(shocks.its, va)};
    out.total_health = {aggregate_employment(shocks.ots_h, wages),
                        aggregate_wages(shocks.ots_h, wages),
                        aggregate_value_added(shocks.its_h, va)};
    out.quartiles = quartile_breakdown(health_growth_quartiles ? shocks.ots_h : shocks.ots, wages);
    out.venn = venn_decomposition(m, shocks.e, shocks.y);
    return out;
}

} // namespace shockgrid
