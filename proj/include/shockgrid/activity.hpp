#pragma once

// Work-activity handling: consensus voting over rater columns and the
// minimum-activity occupation filter.

#include <string>
#include <utility>
#include <vector>

#include "shockgrid/errors.hpp"
#include "shockgrid/types.hpp"

namespace shockgrid {

// An activity counts as remotable when at least `threshold` raters said so.
inline remotability_vector rate_consensus(const ratings_table& ratings, int threshold) {
    const std::size_t raters = ratings.ratings.cols();
    if (raters < 1) raise(errc::bad_threshold, "ratings table has no rater columns");
    if (threshold < 1 || static_cast<std::size_t>(threshold) > raters)
        raise(errc::bad_threshold, "threshold " + std::to_string(threshold) +
                                       " outside [1, " + std::to_string(raters) + "]");
    remotability_vector out;
    out.activities = ratings.activity_ids;
    out.remote.reserve(ratings.activity_ids.size());
    for (std::size_t i = 0; i < ratings.ratings.rows(); ++i) {
        int votes = 0;
        for (std::size_t r = 0; r < raters; ++r) votes += ratings.ratings.at(i, r) != 0.0 ? 1 : 0;
        out.remote.push_back(votes >= threshold ? 1 : 0);
    }
    return out;
}

struct filter_result {
    activity_map map;
    std::vector<std::pair<class_code, int>> excluded; // (occupation, activity count)
};

// Occupations linked to fewer than `min_activities` activities are removed;
// too few activities make the activity-share interpretation meaningless.
inline filter_result filter_occupations(const activity_map& map, int min_activities) {
    if (min_activities < 1) raise(errc::bad_threshold, "min_activities must be >= 1");
    filter_result out;
    out.map.activities = map.activities;
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < map.occupations.size(); ++j) {
        int count = 0;
        for (std::size_t i = 0; i < map.links.cols(); ++i)
            count += map.links.at(j, i) != 0.0 ? 1 : 0;
        if (count < min_activities)
            out.excluded.emplace_back(map.occupations[j], count);
        else
            kept.push_back(j);
    }
    out.map.occupations.reserve(kept.size());
    out.map.links = matrix(kept.size(), map.activities.size());
    for (std::size_t row = 0; row < kept.size(); ++row) {
        out.map.occupations.push_back(map.occupations[kept[row]]);
        for (std::size_t i = 0; i < map.links.cols(); ++i)
            out.map.links.at(row, i) = map.links.at(kept[row], i);
    }
    return out;
}

} // namespace shockgrid
