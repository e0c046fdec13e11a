#pragma once

#include <functional>
#include <vector>

#include "a3dp/integers.hpp"

namespace a3dp {

// A rational point on the quartic surface
//     x0 x1 - x2^2 = 0,   (x0 + x1 + x3) x3 - x2 x4 = 0
// in P^4, stored as a primitive integer 5-tuple with canonical sign: x0 > 0
// when x0 != 0, otherwise the first nonzero coordinate is positive.
struct SurfacePoint {
    Int x0, x1, x2, x3, x4;

    // Reduce an arbitrary nonzero integer 5-tuple to canonical form.
    static SurfacePoint canonical(Int a0, Int a1, Int a2, Int a3, Int a4);

    bool operator==(const SurfacePoint& o) const = default;
    friend bool operator<(const SurfacePoint& a, const SurfacePoint& b) {
        if (int c = cmp(a.x0, b.x0)) return c < 0;
        if (int c = cmp(a.x1, b.x1)) return c < 0;
        if (int c = cmp(a.x2, b.x2)) return c < 0;
        if (int c = cmp(a.x3, b.x3)) return c < 0;
        return cmp(a.x4, b.x4) < 0;
    }
};

bool on_surface(const Int& x0, const Int& x1, const Int& x2, const Int& x3, const Int& x4);
bool on_surface(const SurfacePoint& p);

// Membership in the counted region: x0 x1 x2 x3 != 0.
bool in_counting_region(const SurfacePoint& p);

// Exponential height: max |x_i| over primitive coordinates.
Int height(const SurfacePoint& p);

struct CountResult {
    i64 B = 0;
    i64 count = 0;          // N_{U,H}(B); always even
    double elapsed = 0.0;   // seconds
};

// Direct count of rational points of height <= B in the counted region,
// via the x0 x1 = x2^2 parametrisation. workers = 0 means use all cores.
CountResult count_direct(i64 B, int workers = 0);

// Representatives with x0, x1, x2 > 0 and x3 != 0 (the full count is twice
// the number of representatives). Intended for small B.
std::vector<SurfacePoint> enumerate_direct(i64 B);

// hist[h] = number of representatives of height exactly h, h = 0..B, so that
// count_direct(b) = 2 * sum_{h <= b} hist[h] for every b <= B.
std::vector<i64> direct_height_histogram(i64 B);

// Diagnostic: number of primitive points on the conic x3 = x4 = 0 of height
// <= B. These avoid the four lines but are excluded from the counted region.
i64 count_conic(i64 B);

}  // namespace a3dp
