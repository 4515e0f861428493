#pragma once

// Mortality/morbidity side-calculator: order-of-magnitude labor-supply
// losses from the epidemic itself, for comparison against the social
// distancing shocks.

#include <string>

#include "shockgrid/errors.hpp"
#include "shockgrid/types.hpp"

namespace shockgrid {

inline void check_params(const epidemic_params& p) {
    if (p.attack_rate < 0.0 || p.attack_rate > 1.0)
        raise(errc::bad_share, "attack rate outside [0,1]");
    if (p.fatality < 0.0 || p.fatality > 1.0)
        raise(errc::bad_share, "fatality ratio outside [0,1]");
    if (!(p.weeks_out > 0.0) || p.weeks_out > p.weeks_per_year)
        raise(errc::bad_share, "weeks_out must be in (0, weeks_per_year]");
}

// Permanent labor-force decrease: attack rate times fatality.
inline double labor_loss_mortality(const epidemic_params& p) {
    check_params(p);
    return p.attack_rate * p.fatality;
}

// Annualized loss from survivors staying out `weeks_out` weeks:
// (w/W) * (attack_rate - deaths_share). deaths_share is explicit rather
// than derived so callers can reproduce published round-number variants.
inline double labor_loss_morbidity(const epidemic_params& p, double deaths_share) {
    check_params(p);
    if (deaths_share < 0.0 || deaths_share > p.attack_rate)
        raise(errc::bad_share, "deaths_share must be in [0, attack_rate]");
    return (p.weeks_out / p.weeks_per_year) * (p.attack_rate - deaths_share);
}

// Rough attack-rate projection from confirmed case counts: remaining
// epidemic growth and under-ascertainment enter as multiplicative factors.
inline double attack_rate_estimate(double confirmed, double population, double peak_doubling,
                                   double underascertainment) {
    if (population <= 0.0) raise(errc::bad_count, "population must be positive");
    if (confirmed < 0.0) raise(errc::bad_count, "confirmed cases cannot be negative");
    if (peak_doubling < 1.0 || underascertainment < 1.0)
        raise(errc::bad_count, "scaling factors must be >= 1");
    return confirmed * peak_doubling * underascertainment / population;
}

} // namespace shockgrid
