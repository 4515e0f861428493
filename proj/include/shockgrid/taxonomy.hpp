#pragma once

// Crosswalk resolution: build the industry/fine-code incidence matrix,
// expand coarse essential entries over the fine universe, and apply
// manual essential-share overrides with an audit trail.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shockgrid/codes.hpp"
#include "shockgrid/errors.hpp"
#include "shockgrid/types.hpp"

namespace shockgrid {

struct concordance_build {
    concordance table;
    std::vector<class_code> empty_rows; // analysis industries with no linked fine code
};

// Crosswalk endpoints may be coarser than the axes; each endpoint is
// prefix-expanded against its axis. Axes come out sorted by
// (scheme, digits) and links deduplicated, so the result does not depend
// on input order.
inline concordance_build build_concordance(std::vector<class_code> rows,
                                           std::vector<class_code> fine,
                                           const std::vector<std::pair<class_code, class_code>>& crosswalk) {
    sort_codes(rows);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    sort_codes(fine);
    fine.erase(std::unique(fine.begin(), fine.end()), fine.end());

    std::set<std::pair<std::size_t, std::size_t>> links;
    for (const auto& [from, to] : crosswalk) {
        auto matched_rows = expand_prefix(from, rows);
        if (matched_rows.empty())
            raise(errc::unknown_code, "crosswalk source " + from.str() + " matches no industry");
        auto matched_cols = expand_prefix(to, fine);
        if (matched_cols.empty())
            raise(errc::unknown_code, "crosswalk target " + to.str() + " matches no fine code");
        for (const auto& r : matched_rows)
            for (const auto& c : matched_cols)
                links.emplace(static_cast<std::size_t>(find_code(rows, r)),
                              static_cast<std::size_t>(find_code(fine, c)));
    }

    concordance_build out;
    out.table.row_codes = std::move(rows);
    out.table.col_codes = std::move(fine);
    out.table.links.assign(links.begin(), links.end());

    std::vector<bool> linked(out.table.row_codes.size(), false);
    for (auto [r, c] : out.table.links) linked[r] = true;
    for (std::size_t r = 0; r < linked.size(); ++r)
        if (!linked[r]) out.empty_rows.push_back(out.table.row_codes[r]);
    return out;
}

// Expand a mixed-granularity essential list over the fine universe.
// Fine codes not named by any entry default to non-essential. Later
// entries win on overlap (a 4-digit entry refines its 2-digit parent).
// Entries matching nothing are returned so callers can report them.
struct essential_expansion {
    std::vector<int> u; // aligned with `fine`
    std::vector<class_code> unmatched_entries;
    std::size_t covered = 0; // fine codes named by at least one entry
};

inline essential_expansion expand_essential(const essential_list& list,
                                            std::span<const class_code> fine) {
    essential_expansion out;
    out.u.assign(fine.size(), 0);
    std::vector<bool> touched(fine.size(), false);
    for (const auto& ent : list.entries) {
        if (ent.essential != 0 && ent.essential != 1)
            raise(errc::schema_error, "essential flag for " + ent.code.str() + " must be 0 or 1");
        bool any = false;
        for (std::size_t k = 0; k < fine.size(); ++k) {
            if (ent.code.contains(fine[k])) {
                out.u[k] = ent.essential;
                touched[k] = true;
                any = true;
            }
        }
        if (!any) out.unmatched_entries.push_back(ent.code);
    }
    for (bool t : touched)
        if (t) ++out.covered;
    return out;
}

struct override_result {
    std::vector<double> shares;
    std::vector<override_audit> audit;
};

// Replace essential shares for every industry matched by an override code
// (prefix semantics, same as everywhere else). Values are replaced, not
// blended, and reapplying the same list is a no-op.
inline override_result apply_overrides(const std::vector<double>& base_shares,
                                       std::span<const class_code> industries,
                                       const override_list& overrides) {
    if (base_shares.size() != industries.size())
        raise(errc::dimension_mismatch, "share vector does not match industry axis");
    override_result out{base_shares, {}};
    for (const auto& ov : overrides) {
        if (ov.share < 0.0 || ov.share > 1.0)
            raise(errc::schema_error, "override share for " + ov.code.str() + " outside [0,1]");
        bool any = false;
        for (std::size_t n = 0; n < industries.size(); ++n) {
            if (ov.code.contains(industries[n])) {
                out.audit.push_back({industries[n], out.shares[n], ov.share, ov.note});
                out.shares[n] = ov.share;
                any = true;
            }
        }
        if (!any)
            raise(errc::unknown_code, "override code " + ov.code.str() + " matches no industry");
    }
    return out;
}

} // namespace shockgrid
