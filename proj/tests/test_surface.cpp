#include <doctest.h>

#include <set>

#include "a3dp/surface.hpp"

using namespace a3dp;

namespace {

// Independent oracle: scan every integer 5-tuple with |x_i| <= B, keep
// primitive canonical points on the surface with x0 x1 x2 x3 != 0.
i64 exhaustive_count(i64 B) {
    std::set<SurfacePoint> pts;
    for (i64 a0 = -B; a0 <= B; ++a0)
        for (i64 a1 = -B; a1 <= B; ++a1)
            for (i64 a2 = -B; a2 <= B; ++a2) {
                if (a0 * a1 != a2 * a2) continue;
                for (i64 a3 = -B; a3 <= B; ++a3)
                    for (i64 a4 = -B; a4 <= B; ++a4) {
                        if (a0 == 0 && a1 == 0 && a2 == 0 && a3 == 0 && a4 == 0) continue;
                        if ((a0 + a1 + a3) * a3 != a2 * a4) continue;
                        if (a0 == 0 || a1 == 0 || a2 == 0 || a3 == 0) continue;
                        pts.insert(SurfacePoint::canonical(a0, a1, a2, a3, a4));
                    }
            }
    return static_cast<i64>(pts.size());
}

}  // namespace

TEST_CASE("on_surface examples") {
    CHECK(on_surface(Int(0), Int(0), Int(0), Int(0), Int(1)));   // the singular point
    CHECK(on_surface(Int(1), Int(1), Int(1), Int(1), Int(3)));
    CHECK(!on_surface(Int(1), Int(2), Int(1), Int(0), Int(0)));
}

TEST_CASE("counting region and height") {
    SurfacePoint p{1, 1, 1, -1, -1};
    CHECK(in_counting_region(p));
    CHECK(height(p) == 1);
    SurfacePoint q{0, 1, 0, 0, 1};  // on the line x0 = x2 = x3 = 0
    CHECK(on_surface(q));
    CHECK(!in_counting_region(q));
    SurfacePoint r{1, 1, 1, 0, 0};  // on the conic x3 = x4 = 0
    CHECK(on_surface(r));
    CHECK(!in_counting_region(r));
    CHECK(height(SurfacePoint{1, 1, 1, 1, 3}) == 3);
    CHECK(height(SurfacePoint{0, 0, 0, 0, 1}) == 1);
}

TEST_CASE("canonical form") {
    auto p = SurfacePoint::canonical(-2, -2, -2, 2, 2);
    CHECK(p.x0 == 1);
    CHECK(p.x3 == -1);
    auto q = SurfacePoint::canonical(0, 0, 0, 0, -5);
    CHECK(q.x4 == 1);
}

TEST_CASE("count_direct agrees with the exhaustive oracle") {
    // Oracle values computed by the all-tuples scan above.
    for (i64 B : {1, 2, 3, 4, 5}) {
        i64 expected = exhaustive_count(B);
        CountResult r = count_direct(B);
        INFO("B = ", B);
        CHECK(r.count == expected);
    }
}

TEST_CASE("count_direct basics") {
    CHECK(count_direct(1).count == 2);
    CHECK_THROWS_AS(count_direct(0), std::invalid_argument);
    i64 prev = 0;
    for (i64 B = 1; B <= 40; ++B) {
        i64 c = count_direct(B).count;
        CHECK(c % 2 == 0);
        CHECK(c >= prev);
        prev = c;
    }
}

TEST_CASE("enumerated points lie on the surface and are primitive") {
    for (const SurfacePoint& p : enumerate_direct(60)) {
        REQUIRE(on_surface(p));
        REQUIRE(in_counting_region(p));
        REQUIRE(p.x0 > 0);
        REQUIRE(p.x2 > 0);
        Int g = gcd(gcd(gcd(p.x0, p.x1), gcd(p.x2, p.x3)), p.x4);
        REQUIRE(g == 1);
        REQUIRE(height(p) <= 60);
    }
}

TEST_CASE("height histogram matches per-B counts") {
    auto hist = direct_height_histogram(50);
    i64 cum = 0;
    for (i64 b = 1; b <= 50; b += 7) {
        cum = 0;
        for (i64 h = 0; h <= b; ++h) cum += hist[h];
        CHECK(2 * cum == count_direct(b).count);
    }
}

TEST_CASE("conic diagnostic count") {
    // (1,1,1,0,0) and (1,1,-1,0,0) at B = 1
    CHECK(count_conic(1) == 2);
    // pairs (a,b) coprime with a^2, b^2 <= 4: (1,1),(1,2),(2,1) -> 6 points
    CHECK(count_conic(4) == 6);
    CHECK(count_conic(100) > count_conic(10));
}
