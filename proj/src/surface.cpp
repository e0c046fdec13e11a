#include "a3dp/surface.hpp"

#include <chrono>
#include <numeric>
#include <omp.h>

namespace a3dp {

namespace {

// All enumeration arithmetic below runs in 64/128-bit integers. Bound
// analysis for B <= 10^12: coordinates are bounded by B < 2^40, the largest
// intermediate is (x0+x1+x3)*x3 <= 3B^2 < 2^84, and every product of two
// coordinate-sized values stays far below the 127-bit limit. The guard keeps
// the arithmetic exact.
constexpr i64 kMaxB = 1'000'000'000'000;

void check_B(i64 B) {
    if (B < 1) throw std::invalid_argument("count_direct: B must be >= 1");
    if (B > kMaxB) throw std::invalid_argument("count_direct: B exceeds supported bound 10^12");
}

// Walks every representative (x0,x1,x2 > 0, x3 != 0, primitive, height <= B)
// for one cell x0 = y a^2, x1 = y b^2, x2 = y a b of the x0 x1 = x2^2
// parametrisation. The inner scan over x3 keeps (x0+x1+x3) x3 mod x2 updated
// incrementally, so an iteration is a couple of adds and compares.
template <typename Sink>
void scan_cell(i64 B, i64 y, i64 a, i64 b, Sink&& sink) {
    const i64 x0 = y * a * a;
    const i64 x1 = y * b * b;
    const i64 x2 = y * a * b;
    const i64 s = x0 + x1;

    auto emit = [&](i64 x3) {
        i128 num = (i128)(s + x3) * x3;
        i128 x4w = num / x2;  // exact: scan only reaches x3 with x2 | (s+x3)x3
        if (x4w > B || x4w < -(i128)B) return;
        i64 x4 = (i64)x4w;
        i64 g = std::gcd(std::gcd(y, x3 < 0 ? -x3 : x3), x4 < 0 ? -x4 : x4);
        if (g == 1) sink(x0, x1, x2, x3, x4);
    };

    // x3 = 1 .. B
    i64 cur = (s + 1) % x2;
    i64 d = (s + 3) % x2;  // (s + 2 x3 + 1) at x3 = 1
    for (i64 x3 = 1; x3 <= B; ++x3) {
        if (cur == 0) emit(x3);
        cur += d;
        if (cur >= x2) cur -= x2;
        d += 2;
        if (d >= x2) { d -= x2; if (d >= x2) d -= x2; }
    }
    // x3 = -1 .. -B
    cur = (1 - s) % x2;
    if (cur < 0) cur += x2;
    d = (s - 3) % x2;  // (s + 2 x3 - 1) at x3 = -1
    if (d < 0) d += x2;
    for (i64 x3 = -1; x3 >= -B; --x3) {
        if (cur == 0) emit(x3);
        cur -= d;
        if (cur < 0) cur += x2;
        if (d < 2) { d += x2; if (d < 2) d += x2; }
        d -= 2;
    }
}

std::vector<std::pair<i64, i64>> cell_prefixes(i64 B) {
    std::vector<std::pair<i64, i64>> ya;
    for (i64 y = 1; y <= B; ++y)
        for (i64 a = 1; y * a * a <= B; ++a) ya.emplace_back(y, a);
    return ya;
}

}  // namespace

SurfacePoint SurfacePoint::canonical(Int a0, Int a1, Int a2, Int a3, Int a4) {
    Int g = gcd(gcd(gcd(a0, a1), gcd(a2, a3)), a4);
    if (g == 0) throw std::invalid_argument("SurfacePoint: zero tuple");
    a0 /= g; a1 /= g; a2 /= g; a3 /= g; a4 /= g;
    int s = 0;
    for (const Int* c : {&a0, &a1, &a2, &a3, &a4}) {
        if (*c != 0) { s = sgn(*c); break; }
    }
    if (s < 0) { a0 = -a0; a1 = -a1; a2 = -a2; a3 = -a3; a4 = -a4; }
    return SurfacePoint{a0, a1, a2, a3, a4};
}

bool on_surface(const Int& x0, const Int& x1, const Int& x2, const Int& x3, const Int& x4) {
    return x0 * x1 - x2 * x2 == 0 && (x0 + x1 + x3) * x3 - x2 * x4 == 0;
}

bool on_surface(const SurfacePoint& p) { return on_surface(p.x0, p.x1, p.x2, p.x3, p.x4); }

bool in_counting_region(const SurfacePoint& p) {
    return p.x0 != 0 && p.x1 != 0 && p.x2 != 0 && p.x3 != 0;
}

Int height(const SurfacePoint& p) {
    Int h = abs(p.x0);
    for (const Int* c : {&p.x1, &p.x2, &p.x3, &p.x4}) h = std::max(h, Int(abs(*c)));
    return h;
}

CountResult count_direct(i64 B, int workers) {
    check_B(B);
    auto t0 = std::chrono::steady_clock::now();
    auto ya = cell_prefixes(B);
    i64 total = 0;
    if (workers > 0) omp_set_num_threads(workers);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (size_t i = 0; i < ya.size(); ++i) {
        auto [y, a] = ya[i];
        i64 local = 0;
        for (i64 b = 1; y * b * b <= B; ++b) {
            if (std::gcd(a, b) != 1) continue;
            scan_cell(B, y, a, b, [&](i64, i64, i64, i64, i64) { ++local; });
        }
        total += local;
    }
    auto t1 = std::chrono::steady_clock::now();
    return CountResult{B, 2 * total, std::chrono::duration<double>(t1 - t0).count()};
}

std::vector<SurfacePoint> enumerate_direct(i64 B) {
    check_B(B);
    std::vector<SurfacePoint> pts;
    for (auto [y, a] : cell_prefixes(B))
        for (i64 b = 1; y * b * b <= B; ++b) {
            if (std::gcd(a, b) != 1) continue;
            scan_cell(B, y, a, b, [&](i64 x0, i64 x1, i64 x2, i64 x3, i64 x4) {
                pts.push_back(SurfacePoint{Int(x0), Int(x1), Int(x2), Int(x3), Int(x4)});
            });
        }
    return pts;
}

std::vector<i64> direct_height_histogram(i64 B) {
    check_B(B);
    std::vector<i64> hist(B + 1, 0);
    for (auto [y, a] : cell_prefixes(B))
        for (i64 b = 1; y * b * b <= B; ++b) {
            if (std::gcd(a, b) != 1) continue;
            scan_cell(B, y, a, b, [&](i64 x0, i64 x1, i64, i64 x3, i64 x4) {
                i64 h = std::max({x0, x1, x3 < 0 ? -x3 : x3, x4 < 0 ? -x4 : x4});
                ++hist[h];
            });
        }
    return hist;
}

i64 count_conic(i64 B) {
    check_B(B);
    // Points (a^2 : b^2 : ab : 0 : 0), gcd(a,b) = 1, plus their x2-mirrors.
    i64 n = 0;
    for (i64 a = 1; a * a <= B; ++a)
        for (i64 b = 1; b * b <= B; ++b)
            if (std::gcd(a, b) == 1) ++n;
    return 2 * n;
}

}  // namespace a3dp
