#pragma once

// Pearson correlation with the usual t-approximated two-sided p-value.

#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "shockgrid/errors.hpp"

namespace shockgrid {

namespace detail {

// Continued-fraction evaluation for the regularized incomplete beta
// function (modified Lentz scheme).
inline double betacf(double a, double b, double x) {
    constexpr int max_iter = 200;
    constexpr double eps = 3.0e-14;
    constexpr double fpmin = 1.0e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

inline double betai(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                   b * std::log(1.0 - x);
    double bt = std::exp(ln_bt);
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

} // namespace detail

// Two-sided tail probability of |T| >= |t| for Student's t with nu dof.
inline double student_t_two_sided(double t, double nu) {
    if (!std::isfinite(t)) return 0.0;
    double x = nu / (nu + t * t);
    return detail::betai(nu / 2.0, 0.5, x);
}

struct pearson_result {
    double rho = 0.0;
    double p_value = 1.0;
    double t = 0.0;
    std::size_t n = 0;
};

inline pearson_result pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        raise(errc::dimension_mismatch, "pearson inputs have different lengths");
    const std::size_t n = xs.size();
    if (n < 3) raise(errc::degenerate_input, "pearson needs at least 3 points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        raise(errc::degenerate_input, "pearson input has zero variance");
    pearson_result out;
    out.n = n;
    out.rho = sxy / std::sqrt(sxx * syy);
    out.rho = std::clamp(out.rho, -1.0, 1.0);
    double nu = static_cast<double>(n - 2);
    if (std::fabs(out.rho) >= 1.0) {
        out.t = std::numeric_limits<double>::infinity();
        out.p_value = 0.0;
    } else {
        out.t = out.rho * std::sqrt(nu / (1.0 - out.rho * out.rho));
        out.p_value = student_t_two_sided(out.t, nu);
    }
    return out;
}

} // namespace shockgrid
