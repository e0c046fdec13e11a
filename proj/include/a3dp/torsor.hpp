#pragma once

#include <array>

#include "a3dp/arith.hpp"
#include "a3dp/surface.hpp"

namespace a3dp {

// Integral point on the torsor chart: eta[0..6] = eta1..eta7 > 0 together
// with (alpha1, alpha2, alpha4), subject to the two torsor equations, the
// coprimality system and alpha1 != 0 (the counted region has x3 != 0).
struct TorsorPoint {
    std::array<Int, 7> eta;
    Int alpha1, alpha2, alpha4;

    bool operator==(const TorsorPoint&) const = default;
    friend bool operator<(const TorsorPoint& a, const TorsorPoint& b) {
        for (int i = 0; i < 7; ++i)
            if (int c = cmp(a.eta[i], b.eta[i])) return c < 0;
        if (int c = cmp(a.alpha1, b.alpha1)) return c < 0;
        if (int c = cmp(a.alpha2, b.alpha2)) return c < 0;
        return cmp(a.alpha4, b.alpha4) < 0;
    }
};

struct EquationDetails {
    bool torsor1 = false;
    bool torsor2 = false;
    bool alpha3_integral = false;  // eta4 | eta2 eta3^2 eta5 eta6^2 + eta7 alpha1
    bool aux2 = false;             // eta1^2 eta2 eta4 eta7^2 + eta5 alpha3 - eta6 alpha4 = 0
    bool aux3 = false;             // eta1^2..eta7 + alpha1 alpha4 - alpha2 alpha3 = 0
    bool auxiliary_ok() const { return alpha3_integral && aux2 && aux3; }
};

// True iff the two torsor equations hold; details (when requested) also
// report integrality of alpha3 and the three auxiliary equations.
bool check_equations(const TorsorPoint& t, EquationDetails* details = nullptr);

// The seven-gcd coprimality system (gcd1)-(gcd7), with gcd(0, m) = m.
bool check_coprimality(const TorsorPoint& t);

// The three-condition summary (coprim1)-(coprim3); equivalent to the
// seven-gcd system on points satisfying the torsor equations.
bool check_coprimality_original(const TorsorPoint& t);

// The four original height conditions at bound B.
bool check_heights(const TorsorPoint& t, const Int& B);

// The monomial map to the surface. Validates the TorsorPoint invariants and
// names the violated one on failure.
SurfacePoint to_point(const TorsorPoint& t);

// Inverse of to_point on the counted region (x0, x1, x2 > 0, x3 != 0),
// following the gcd-extraction chain; throws std::domain_error naming the
// failing divisibility step on non-liftable input.
TorsorPoint lift(const SurfacePoint& p);

// A2 = eta1..eta5; Y6, Y7 have rational squares B / eta^(1,2,3,0,2) and
// B / eta^(3,2,1,2,0) (the bounds themselves are square roots).
struct HeightBounds {
    Int A2;
    Rat Y6_squared, Y7_squared;
    double y6() const { return std::sqrt(Y6_squared.get_d()); }
    double y7() const { return std::sqrt(Y7_squared.get_d()); }
};
HeightBounds height_bounds(const Eta5& eta, i64 B);

struct TorsorCount {
    i64 B = 0;
    i64 count = 0;  // #T(B)
    double elapsed = 0.0;
};

// #T(B) by direct enumeration of the torsor chart. workers = 0 uses all cores.
TorsorCount count(i64 B, int workers = 0);

// Literal loop semantics (alpha1 sweep + divisibility tests, full coprimality
// check per candidate); independent slow path for validating count() at small B.
i64 count_reference(i64 B);

// Materialise T(B) (small B).
std::vector<TorsorPoint> enumerate(i64 B);

// hist[h] = #points of T(B) whose surface image has height exactly h, so
// #T(b) is the prefix sum over h <= b for every b <= B.
std::vector<i64> torsor_height_histogram(i64 B);

}  // namespace a3dp
