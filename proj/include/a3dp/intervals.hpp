#pragma once

#include <array>

namespace a3dp {

// Up to three disjoint closed intervals, kept in increasing order.
struct IntervalSet {
    std::array<std::pair<double, double>, 3> parts{};
    int count = 0;

    void add(double lo, double hi) {
        if (hi > lo) parts[count++] = {lo, hi};
    }
    double total_length() const {
        double s = 0;
        for (int i = 0; i < count; ++i) s += parts[i].second - parts[i].first;
        return s;
    }
};

// The u2-slice of the height-condition region:
//   { u2 : t7 |t7 - t6 u2| <= 1  and  |t7 - t6 u2| |t6 + t7 u2| <= 1 }
// for 0 < t6, t7 <= 1 (empty when either exceeds 1). The first condition is
// an interval. The second holds between the roots of Q(u2) = -1 and outside
// the open interval where Q > 1, Q being the downward-opening quadratic
// (t7 - t6 u2)(t6 + t7 u2). Near-degenerate discriminants fall back to
// bisection on Q - 1.
IntervalSet h_slice(double t7, double t6);

}  // namespace a3dp
