#pragma once

// First-order shock algebra on the four-layer network
//
//   fine codes --S--> industries --M--> occupations --T--> activities
//
// Essential flags (u, over fine codes) and home-feasibility flags (v, over
// activities) propagate inward through normalized incidence matrices:
//
//   e = rownorm(S) u            industry essential score
//   r = rownorm(M) rownorm(T) v industry remote-labor index
//   x = colnorm(M)^T e          occupation essential score
//   y = rownorm(T) v            occupation remote-labor index
//
// Supply shocks treat the two shares as independent probabilities,
// ISS = -(1-e)(1-r) and OSS = -(1-x)(1-y). Demand shocks enter per sector
// prefix and project onto occupations through colnorm(M)^T. Total shocks
// take the worse (minimum); the health variant lets positive demand
// through instead.

#include <algorithm>
#include <string>
#include <vector>

#include "shockgrid/codes.hpp"
#include "shockgrid/errors.hpp"
#include "shockgrid/matrix.hpp"
#include "shockgrid/taxonomy.hpp"
#include "shockgrid/types.hpp"

namespace shockgrid {

namespace detail {

inline void require_same_axis(const shock_vector& a, const shock_vector& b, const char* what) {
    if (a.entities != b.entities)
        raise(errc::axis_misalignment, std::string("entity axes differ in ") + what);
}

} // namespace detail

// e_n: essential share of industry n = mean of u over its linked fine codes.
// Industries without links keep score 0 (callers see them in the
// concordance_build empty-row report).
inline shock_vector essential_score_industries(const concordance& s, const essential_list& u) {
    if (u.entries.size() != s.col_codes.size())
        raise(errc::dimension_mismatch, "essential list length " + std::to_string(u.entries.size()) +
                                            " != fine axis " + std::to_string(s.col_codes.size()));
    for (std::size_t k = 0; k < u.entries.size(); ++k) {
        if (u.entries[k].code != s.col_codes[k])
            raise(errc::axis_misalignment, "essential list not aligned with fine axis at " +
                                               u.entries[k].code.str());
        if (u.entries[k].essential != 0 && u.entries[k].essential != 1)
            raise(errc::schema_error, "essential flag must be binary for " + u.entries[k].code.str());
    }
    std::vector<double> sums(s.row_codes.size(), 0.0);
    std::vector<double> counts(s.row_codes.size(), 0.0);
    for (auto [r, c] : s.links) { // links sorted by (row, col): fixed summation order
        sums[r] += u.entries[c].essential;
        counts[r] += 1.0;
    }
    shock_vector e{s.row_codes, shock_kind::essential_score, {}};
    e.values.resize(s.row_codes.size(), 0.0);
    for (std::size_t n = 0; n < sums.size(); ++n)
        if (counts[n] > 0.0) e.values[n] = sums[n] / counts[n];
    return e;
}

// y_j: fraction of occupation j's activities that can be done from home.
inline shock_vector rli_occupations(const activity_map& t, const remotability_vector& v) {
    if (t.activities != v.activities)
        raise(errc::dimension_mismatch, "activity axes of map and remotability vector differ");
    shock_vector y{t.occupations, shock_kind::rli, {}};
    y.values.resize(t.occupations.size(), 0.0);
    for (std::size_t j = 0; j < t.occupations.size(); ++j) {
        double linked = 0.0, remote = 0.0;
        for (std::size_t i = 0; i < t.links.cols(); ++i) {
            if (t.links.at(j, i) != 0.0) {
                linked += 1.0;
                remote += v.remote[i];
            }
        }
        if (linked > 0.0) y.values[j] = remote / linked;
    }
    return y;
}

// r_n: employment-weighted mean of occupation RLIs within industry n.
// Industries with zero matched employment get r = 0 (reported upstream via
// zero-row diagnostics).
inline shock_vector rli_industries(const employment_matrix& m, const activity_map& t,
                                   const remotability_vector& v) {
    if (m.occupations != t.occupations)
        raise(errc::axis_misalignment, "employment and activity maps disagree on occupations");
    shock_vector y = rli_occupations(t, v);
    shock_vector r{m.industries, shock_kind::rli, {}};
    r.values.resize(m.industries.size(), 0.0);
    for (std::size_t n = 0; n < m.industries.size(); ++n) {
        double total = m.counts.row_sum(n);
        if (total == 0.0) continue;
        double acc = 0.0;
        for (std::size_t j = 0; j < m.occupations.size(); ++j)
            acc += (m.counts.at(n, j) / total) * y.values[j];
        r.values[n] = acc;
    }
    return r;
}

inline shock_vector supply_shock_industries(const shock_vector& e, const shock_vector& r) {
    detail::require_same_axis(e, r, "supply_shock_industries");
    shock_vector iss{e.entities, shock_kind::supply, {}};
    iss.values.resize(e.size());
    for (std::size_t n = 0; n < e.size(); ++n)
        iss.values[n] = -(1.0 - e.values[n]) * (1.0 - r.values[n]);
    return iss;
}

// x_j: share of occupation j's jobs that sit in essential industries.
inline shock_vector essential_score_occupations(const employment_matrix& m, const shock_vector& e) {
    if (m.industries != e.entities)
        raise(errc::axis_misalignment, "industry axes of employment matrix and e differ");
    shock_vector x{m.occupations, shock_kind::essential_score, {}};
    x.values.resize(m.occupations.size(), 0.0);
    for (std::size_t j = 0; j < m.occupations.size(); ++j) {
        double total = m.counts.col_sum(j);
        if (total == 0.0) continue;
        double acc = 0.0;
        for (std::size_t n = 0; n < m.industries.size(); ++n)
            acc += (m.counts.at(n, j) / total) * e.values[n];
        x.values[j] = acc;
    }
    return x;
}

inline shock_vector supply_shock_occupations(const shock_vector& x, const shock_vector& y) {
    detail::require_same_axis(x, y, "supply_shock_occupations");
    shock_vector oss{x.entities, shock_kind::supply, {}};
    oss.values.resize(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        oss.values[j] = -(1.0 - x.values[j]) * (1.0 - y.values[j]);
    return oss;
}

// Longest matching sector prefix wins, so a fine scenario entry ("4853")
// overrides its 2-digit parent. Industries matching no entry are an error;
// pipelines pad scenarios with explicit zeros first when partial coverage
// is acceptable.
inline shock_vector demand_shock_industries(const demand_scenario& scenario,
                                            const std::vector<class_code>& industries) {
    shock_vector ids{industries, shock_kind::demand, {}};
    ids.values.resize(industries.size(), 0.0);
    for (std::size_t n = 0; n < industries.size(); ++n) {
        const demand_scenario::entry* best = nullptr;
        for (const auto& ent : scenario.entries) {
            if (industries[n].digits.size() >= ent.sector.size() &&
                industries[n].digits.compare(0, ent.sector.size(), ent.sector) == 0) {
                if (!best || ent.sector.size() > best->sector.size()) best = &ent;
            }
        }
        if (!best)
            raise(errc::unmapped_industry, "industry " + industries[n].str() +
                                               " matches no sector of scenario '" + scenario.name + "'");
        ids.values[n] = best->shock;
    }
    return ids;
}

inline shock_vector demand_shock_occupations(const employment_matrix& m, const shock_vector& ids) {
    if (m.industries != ids.entities)
        raise(errc::axis_misalignment, "industry axes of employment matrix and IDS differ");
    shock_vector ods{m.occupations, shock_kind::demand, {}};
    ods.values.resize(m.occupations.size(), 0.0);
    for (std::size_t j = 0; j < m.occupations.size(); ++j) {
        double total = m.counts.col_sum(j);
        if (total == 0.0) continue;
        double acc = 0.0;
        for (std::size_t n = 0; n < m.industries.size(); ++n)
            acc += (m.counts.at(n, j) / total) * ids.values[n];
        ods.values[j] = acc;
    }
    return ods;
}

// The binding constraint: whichever of the two shocks is worse.
inline shock_vector total_shock(const shock_vector& supply, const shock_vector& demand) {
    detail::require_same_axis(supply, demand, "total_shock");
    shock_vector total{supply.entities, shock_kind::total, {}};
    total.values.resize(supply.size());
    for (std::size_t i = 0; i < supply.size(); ++i)
        total.values[i] = std::min(supply.values[i], demand.values[i]);
    return total;
}

enum class shock_level { industry, occupation };

// Variant where positive demand is met by extra supply. Industries take the
// demand shock outright when it is positive; occupations add their (zero or
// negative) supply shock on top of positive demand, since only part of an
// occupation's industries may be growing.
inline shock_vector total_shock_health(const shock_vector& supply, const shock_vector& demand,
                                       shock_level level) {
    detail::require_same_axis(supply, demand, "total_shock_health");
    shock_vector total{supply.entities, shock_kind::total_health, {}};
    total.values.resize(supply.size());
    for (std::size_t i = 0; i < supply.size(); ++i) {
        double s = supply.values[i], d = demand.values[i];
        if (d > 0.0)
            total.values[i] = level == shock_level::industry ? d : d + s;
        else
            total.values[i] = std::min(s, d);
    }
    return total;
}

// Everything the pipeline needs for one scenario, computed in one place.
struct shock_set {
    shock_vector e, r, iss, ids, its, its_h;  // industry level
    shock_vector x, y, oss, ods, ots, ots_h;  // occupation level
    std::vector<class_code> industries_no_occupations;
    std::vector<class_code> occupations_no_employment;
    std::vector<override_audit> override_log;
};

inline shock_set compute_shocks(const concordance& s, const essential_list& u,
                                const override_list& overrides, const employment_matrix& m,
                                const activity_map& t, const remotability_vector& v,
                                const demand_scenario& scenario) {
    if (m.industries != s.row_codes)
        raise(errc::axis_misalignment, "employment matrix industries differ from concordance rows");
    shock_set out;
    out.e = essential_score_industries(s, u);
    if (!overrides.empty()) {
        auto res = apply_overrides(out.e.values, out.e.entities, overrides);
        out.e.values = std::move(res.shares);
        out.override_log = std::move(res.audit);
    }
    out.y = rli_occupations(t, v);
    out.r = rli_industries(m, t, v);
    out.iss = supply_shock_industries(out.e, out.r);
    out.x = essential_score_occupations(m, out.e);
    out.oss = supply_shock_occupations(out.x, out.y);
    out.ids = demand_shock_industries(scenario, m.industries);
    out.ods = demand_shock_occupations(m, out.ids);
    out.its = total_shock(out.iss, out.ids);
    out.ots = total_shock(out.oss, out.ods);
    out.its_h = total_shock_health(out.iss, out.ids, shock_level::industry);
    out.ots_h = total_shock_health(out.oss, out.ods, shock_level::occupation);
    for (std::size_t n = 0; n < m.industries.size(); ++n)
        if (m.counts.row_sum(n) == 0.0) out.industries_no_occupations.push_back(m.industries[n]);
    for (std::size_t j = 0; j < m.occupations.size(); ++j)
        if (m.counts.col_sum(j) == 0.0) out.occupations_no_employment.push_back(m.occupations[j]);
    return out;
}

} // namespace shockgrid
