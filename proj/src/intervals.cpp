#include "a3dp/intervals.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace a3dp {

namespace {

// Roots of a u^2 + b u + c = 0 with a > 0 and known-positive discriminant,
// evaluated in the cancellation-free form.
std::pair<double, double> quadratic_roots(double a, double b, double c, double disc) {
    double sq = std::sqrt(disc);
    double q = -0.5 * (b + (b >= 0 ? sq : -sq));
    double r1 = q / a;
    double r2 = (q != 0) ? c / q : -b / a - r1;
    return r1 < r2 ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
}

double bisect_root(const auto& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * (1 + std::abs(lo)); ++i) {
        double mid = 0.5 * (lo + hi);
        if ((f(mid) <= 0) == (flo <= 0)) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

IntervalSet h_slice(double t7, double t6) {
    if (!(t6 > 0) || !(t7 > 0)) throw std::invalid_argument("h_slice: t6, t7 must be positive");
    IntervalSet out;
    if (t6 > 1 || t7 > 1) return out;

    // Condition t7 |t7 - t6 u| <= 1.
    double a_lo = (t7 - 1 / t7) / t6;
    double a_hi = (t7 + 1 / t7) / t6;

    // Q(u) = -t6 t7 u^2 + (t7^2 - t6^2) u + t6 t7.
    const double a = t6 * t7;
    const double b = t7 * t7 - t6 * t6;
    auto Q = [&](double u) { return (t7 - t6 * u) * (t6 + t7 * u); };

    // Q >= -1 between the roots of a u^2 - b u - (a + 1) = 0.
    double d1 = b * b + 4 * a * (a + 1);
    auto [r_lo, r_hi] = quadratic_roots(a, -b, -(a + 1), d1);

    double lo = std::max(a_lo, r_lo);
    double hi = std::min(a_hi, r_hi);
    if (hi <= lo) return out;

    // Q <= 1 outside (w_lo, w_hi); no exclusion when the peak stays below 1.
    double d2 = b * b - 4 * a * (1 - a);
    double w_lo = 0, w_hi = 0;
    bool hole = false;
    if (d2 >= 1e-12) {
        std::tie(w_lo, w_hi) = quadratic_roots(a, -b, 1 - a, d2);
        hole = true;
    } else if (d2 > 0) {
        double peak = b / (2 * a);
        if (Q(peak) > 1) {
            double half = std::sqrt((Q(peak) - 1) / a);
            auto f = [&](double u) { return Q(u) - 1; };
            w_lo = bisect_root(f, peak - 2 * half - 1e-9, peak);
            w_hi = bisect_root(f, peak, peak + 2 * half + 1e-9);
            hole = true;
        }
    }

    if (!hole || w_hi <= lo || w_lo >= hi) {
        out.add(lo, hi);
    } else {
        out.add(lo, std::min(hi, w_lo));
        out.add(std::max(lo, w_hi), hi);
    }
    return out;
}

}  // namespace a3dp
