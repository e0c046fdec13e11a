#include "a3dp/torsor.hpp"

#include <omp.h>
#include <chrono>
#include <numeric>

namespace a3dp {

namespace {

constexpr i64 kMaxB = 1'000'000'000'000;

void check_B(i64 B, const char* who) {
    if (B < 1) throw std::invalid_argument(std::string(who) + ": B must be >= 1");
    if (B > kMaxB) throw std::invalid_argument(std::string(who) + ": B exceeds supported bound 10^12");
}

Int monomial(const TorsorPoint& t, int a1, int a2, int a3, int a4, int a5, int a6, int a7) {
    Int m = 1;
    int e[7] = {a1, a2, a3, a4, a5, a6, a7};
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < e[i]; ++k) m *= t.eta[i];
    return m;
}

}  // namespace

bool check_equations(const TorsorPoint& t, EquationDetails* details) {
    Int lhs1 = monomial(t, 2, 1, 0, 2, 0, 0, 1) + t.eta[4] * t.alpha1 - t.eta[5] * t.alpha2;
    Int lhs2 = monomial(t, 0, 1, 2, 0, 2, 1, 0) + t.eta[6] * t.alpha2 - t.eta[3] * t.alpha4;
    bool ok = lhs1 == 0 && lhs2 == 0;
    if (details) {
        details->torsor1 = lhs1 == 0;
        details->torsor2 = lhs2 == 0;
        Int a3_num = monomial(t, 0, 1, 2, 0, 1, 2, 0) + t.eta[6] * t.alpha1;
        details->alpha3_integral = a3_num % t.eta[3] == 0;
        if (details->alpha3_integral) {
            Int alpha3 = a3_num / t.eta[3];
            details->aux2 =
                monomial(t, 2, 1, 0, 1, 0, 0, 2) + t.eta[4] * alpha3 - t.eta[5] * t.alpha4 == 0;
            details->aux3 = monomial(t, 2, 2, 2, 1, 1, 1, 1) + t.alpha1 * t.alpha4 -
                                t.alpha2 * alpha3 == 0;
        } else {
            details->aux2 = details->aux3 = false;
        }
    }
    return ok;
}

bool check_coprimality(const TorsorPoint& t) {
    const auto& e = t.eta;
    return gcd(t.alpha1, e[0] * e[1] * e[2] * e[3] * e[5]) == 1 &&  // gcd1
           gcd(t.alpha4, e[0] * e[1] * e[2] * e[4] * e[6]) == 1 &&  // gcd2
           gcd(t.alpha2, e[0] * e[1] * e[2] * e[3] * e[4]) == 1 &&  // gcd3
           gcd(e[6], e[1] * e[2] * e[3] * e[4] * e[5]) == 1 &&      // gcd4
           gcd(e[5], e[0] * e[1] * e[3] * e[4]) == 1 &&             // gcd5
           gcd(e[0] * e[3], e[2] * e[4]) == 1 &&                    // gcd6
           gcd(e[1], e[3] * e[4]) == 1;                             // gcd7
}

bool check_coprimality_original(const TorsorPoint& t) {
    const auto& e = t.eta;
    return gcd(e[2] * e[4] * e[5], e[0] * e[3] * e[6]) == 1 &&  // coprim1
           gcd(e[4] * e[6], e[1] * t.alpha4) == 1 &&            // coprim2
           gcd(e[0] * e[1] * e[2], t.alpha1 * t.alpha4) == 1;   // coprim3
}

bool check_heights(const TorsorPoint& t, const Int& B) {
    return monomial(t, 1, 2, 3, 0, 2, 2, 0) <= B &&                       // condition1
           monomial(t, 3, 2, 1, 2, 0, 0, 2) <= B &&                       // condition2
           abs(monomial(t, 1, 1, 1, 0, 1, 0, 1) * t.alpha1) <= B &&       // condition3
           abs(t.alpha1 * t.alpha4) <= B;                                 // condition4
}

SurfacePoint to_point(const TorsorPoint& t) {
    for (int i = 0; i < 7; ++i)
        if (t.eta[i] < 1)
            throw std::invalid_argument("to_point: eta" + std::to_string(i + 1) +
                                        " must be positive");
    if (t.alpha1 == 0) throw std::invalid_argument("to_point: alpha1 must be nonzero");
    EquationDetails d;
    if (!check_equations(t, &d)) {
        throw std::invalid_argument(std::string("to_point: torsor equation ") +
                                    (d.torsor1 ? "2" : "1") + " violated");
    }
    if (!d.auxiliary_ok()) throw std::invalid_argument("to_point: auxiliary equations violated");
    if (!check_coprimality(t)) throw std::invalid_argument("to_point: coprimality violated");

    SurfacePoint p;
    p.x0 = monomial(t, 1, 2, 3, 0, 2, 2, 0);
    p.x1 = monomial(t, 3, 2, 1, 2, 0, 0, 2);
    p.x2 = monomial(t, 2, 2, 2, 1, 1, 1, 1);
    p.x3 = monomial(t, 1, 1, 1, 0, 1, 0, 1) * t.alpha1;
    p.x4 = t.alpha1 * t.alpha4;
    // The coprimality system is exactly primitivity of the image.
    Int g = gcd(gcd(gcd(p.x0, p.x1), gcd(p.x2, p.x3)), p.x4);
    if (g != 1 || !on_surface(p) || !in_counting_region(p))
        throw std::logic_error("to_point: image invariant violated");
    return p;
}

TorsorPoint lift(const SurfacePoint& p) {
    if (p.x0 <= 0 || p.x1 <= 0 || p.x2 <= 0 || p.x3 == 0)
        throw std::invalid_argument("lift: need x0, x1, x2 > 0 and x3 != 0");
    if (!on_surface(p)) throw std::invalid_argument("lift: point not on the surface");
    Int g = gcd(gcd(gcd(p.x0, p.x1), gcd(p.x2, p.x3)), p.x4);
    if (g != 1) throw std::invalid_argument("lift: coordinates not primitive");

    auto fail = [](const char* step) {
        throw std::domain_error(std::string("lift: non-liftable input (") + step + ")");
    };

    // x0 = y01 x0'^2, x1 = y01 x1'^2, x2 = y01 x0' x1', gcd(x0', x1') = 1.
    Int y01 = gcd(p.x0, p.x1);
    Int q0 = p.x0 / y01, q1 = p.x1 / y01;
    if (mpz_perfect_square_p(q0.get_mpz_t()) == 0) fail("x0/y01 not a square");
    Int x0p = sqrt(q0), x1p = sqrt(q1);
    if (y01 * x0p * x1p != p.x2) fail("x2 mismatch in square decomposition");

    // y01' = gcd(y01, x3), y01 = y01' eta2, x3 = y01' x3'; then eta2 | y01'.
    Int y01p = gcd(y01, p.x3);
    Int eta2 = y01 / y01p;
    Int x3p = p.x3 / y01p;
    if (y01p % eta2 != 0) fail("eta2 does not divide y01'");
    Int y01pp = y01p / eta2;

    // y01'' = eta1 eta3 with eta3 | x0', eta1 | x1'.
    Int eta3 = gcd(y01pp, x0p);
    Int eta1 = y01pp / eta3;
    Int x0pp = x0p / eta3;
    if (x1p % eta1 != 0) fail("eta1 does not divide x1'");
    Int x1pp = x1p / eta1;

    // alpha1 = sign(x3') gcd(x3', x4) so that x3'' > 0.
    Int a1 = gcd(x3p, p.x4);
    if (sgn(x3p) < 0) a1 = -a1;
    Int x3pp = x3p / a1;
    Int alpha4 = p.x4 / a1;

    // x3'' = eta5 eta7, x0'' = eta5 eta6, x1'' = eta4 eta7.
    Int eta5 = gcd(x3pp, x0pp);
    Int eta7 = x3pp / eta5;
    Int eta6 = x0pp / eta5;
    if (x1pp % eta7 != 0) fail("eta7 does not divide x1''");
    Int eta4 = x1pp / eta7;

    TorsorPoint t;
    t.eta = {eta1, eta2, eta3, eta4, eta5, eta6, eta7};
    t.alpha1 = a1;
    t.alpha4 = alpha4;
    Int a2num = monomial(t, 2, 1, 0, 2, 0, 0, 1) + eta5 * a1;
    if (a2num % eta6 != 0) fail("torsor equation 1 has no integral alpha2");
    t.alpha2 = a2num / eta6;

    EquationDetails d;
    if (!check_equations(t, &d) || !d.auxiliary_ok() || !check_coprimality(t))
        fail("lifted point violates torsor invariants");
    return t;
}

HeightBounds height_bounds(const Eta5& eta, i64 B) {
    check_B(B, "height_bounds");
    for (i64 e : eta)
        if (e < 1) throw std::invalid_argument("height_bounds: eta must be positive");
    HeightBounds hb;
    hb.A2 = Int(eta[0]) * eta[1] * eta[2] * eta[3] * eta[4];
    Int m6 = Int(eta[0]) * eta[1] * eta[1];
    for (int k = 0; k < 3; ++k) m6 *= eta[2];
    m6 *= Int(eta[4]) * eta[4];
    Int m7 = Int(eta[0]) * eta[0] * eta[0] * eta[1] * eta[1] * eta[2] * eta[3] * eta[3];
    hb.Y6_squared = Rat(Int(B)) / Rat(m6);
    hb.Y7_squared = Rat(Int(B)) / Rat(m7);
    return hb;
}

// ---------------------------------------------------------------------------
// Enumeration of T(B)
// ---------------------------------------------------------------------------
//
// For fixed eta' the two equations pin alpha2 to a single residue class mod
// eta4*eta5 (torsor 1 mod eta5 and torsor 2 mod eta4, glued by CRT; the
// moduli are coprime by gcd6, and eta6, eta7 are invertible by gcd5, gcd4).
// Height condition 3 is an interval in alpha2; condition 4 holds between the
// roots of the upward parabola F(alpha2) = (eta6 alpha2 - C1)(C2 + eta7 alpha2)
// = eta4 eta5 alpha1 alpha4, minus a possible middle gap where F < -B eta4 eta5.
// Gap endpoints are located from the float roots and then verified exactly;
// convexity of F makes two verified endpoints proof that the whole gap fails.
// Every emitted candidate passes exact 128-bit height checks, so float error
// can only cost a few wasted candidates, never a wrong count.
//
// Bound analysis (B <= 10^12): eta monomials that appear are all <= B by the
// height conditions; |alpha2| <= 2B + slack; eta6|alpha2|, eta7|alpha2| <= 4*10^18;
// F fits in i128 (|F| <= ~1.6*10^37); |alpha1 alpha4| <= ~4*10^30.

namespace {

struct Cell {
    i64 e1, e2, e3, e4;
};

std::vector<Cell> make_cells(i64 B) {
    std::vector<Cell> cells;
    for (i64 e1 = 1; e1 * e1 * e1 <= B; ++e1)
        for (i64 e2 = 1; e1 * e1 * e1 * e2 * e2 <= B; ++e2)
            for (i64 e3 = 1; e1 * e1 * e1 * e2 * e2 * e3 <= B && e1 * e2 * e2 * e3 * e3 * e3 <= B;
                 ++e3) {
                if (std::gcd(e3, e1) != 1) continue;
                for (i64 e4 = 1; e1 * e1 * e1 * e2 * e2 * e3 * e4 * e4 <= B; ++e4) {
                    if (std::gcd(e4, e2) != 1 || std::gcd(e4, e3) != 1) continue;
                    cells.push_back({e1, e2, e3, e4});
                }
            }
    return cells;
}

inline i64 floor_div_i128(i128 a, i64 b) {
    i128 q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return static_cast<i64>(q);
}

inline i64 ceil_div_i128(i128 a, i64 b) {
    i128 q = a / b;
    if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
    return static_cast<i64>(q);
}

// First progression member r (mod m) that is >= lo.
inline i64 first_in_class(i64 lo, i64 r, i64 m) {
    i64 k = (r - lo) % m;
    if (k < 0) k += m;
    return lo + k;
}

// Stable roots of q x^2 + b x + c = 0 (q > 0) with positive discriminant.
inline std::pair<double, double> roots2(double q, double b, double c, double disc) {
    double sq = std::sqrt(disc);
    double w = -0.5 * (b + (b >= 0 ? sq : -sq));
    double r1 = w / q;
    double r2 = (w != 0) ? c / w : r1;
    return r1 <= r2 ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
}

// Walks all points of T(B) within one (e1, e2, e3, e4) cell. The sink gets
// (e1..e7, alpha1, alpha2, alpha4).
template <typename Sink>
void scan_cell(i64 B, const Cell& cell, Sink&& sink) {
    const auto [e1, e2, e3, e4] = cell;
    const i64 cond2_base = e1 * e1 * e1 * e2 * e2 * e3 * e4 * e4;  // <= B
    const i64 K1 = e1 * e1 * e2 * e4 * e4;

    for (i64 e5 = 1; e1 * e2 * e2 * e3 * e3 * e3 * e5 * e5 <= B; ++e5) {
        if (std::gcd(e5, e1) != 1 || std::gcd(e5, e2) != 1 || std::gcd(e5, e4) != 1) continue;
        const i64 m45 = e4 * e5;
        const i64 inv5m4 = mod_inverse(e5 % e4, e4);
        const i64 A2 = e1 * e2 * e3 * e4 * e5;
        const i64 K1m5 = K1 % e5;
        const i64 cond1_base = e1 * e2 * e2 * e3 * e3 * e3 * e5 * e5;  // <= B
        const i64 e6max = isqrt64(B / cond1_base);
        const i64 e7max_all = isqrt64(B / cond2_base);
        const i128 prod_1245 = (i128)e1 * e2 * e4 * e5;

        for (i64 e6 = 1; e6 <= e6max; ++e6) {
            if (!coprime_i128(e6, prod_1245)) continue;  // gcd5
            const i64 C2 = e2 * e3 * e3 * e5 * e5 * e6;  // <= B
            const i64 C2m4 = C2 % e4;
            const i64 inv6m5 = mod_inverse(e6 % e5, e5);
            const i128 P1 = (i128)e1 * e2 * e3 * e4 * e6;
            const i128 prod_23456 = (i128)e2 * e3 * e4 * e5 * e6;

            for (i64 e7 = 1; e7 <= e7max_all; ++e7) {
                if (!coprime_i128(e7, prod_23456)) continue;  // gcd4
                const i64 C1 = K1 * e7;                       // <= B
                const i128 pref3 = (i128)e1 * e2 * e3 * e5 * e7;
                const i64 a1max = static_cast<i64>(B / pref3);
                if (a1max == 0) continue;

                // alpha2 residue class mod m45.
                const i64 r5 = (e5 == 1) ? 0 : (i64)(((i128)inv6m5 * ((K1m5 * (e7 % e5)) % e5)) % e5);
                i64 r4 = 0;
                if (e4 > 1) {
                    const i64 inv7m4 = mod_inverse(e7 % e4, e4);
                    r4 = (e4 - (i64)(((i128)inv7m4 * C2m4) % e4)) % e4;
                }
                i64 tt = (r4 - r5) % e4;
                if (tt < 0) tt += e4;
                const i64 r = r5 + e5 * ((i64)(((i128)tt * inv5m4) % e4));

                // Condition-3 band (exact).
                const i64 loA = ceil_div_i128((i128)C1 - (i128)e5 * a1max, e6);
                const i64 hiA = floor_div_i128((i128)C1 + (i128)e5 * a1max, e6);

                // Condition-4 outer band (float roots, slack 2, exact recheck).
                const i128 T4 = (i128)B * m45;
                const double aq = (double)e6 * e7;
                const i128 bq_exact = (i128)e6 * C2 - (i128)e7 * C1;
                const double bq = (double)bq_exact;
                const double ccV = -((double)C1 * C2 + (double)T4);
                const double discV = bq * bq - 4 * aq * ccV;
                auto [vlo, vhi] = roots2(aq, bq, ccV, discV);
                i64 lo = std::max(loA, (i64)std::floor(vlo) - 2);
                i64 hi = std::min(hiA, (i64)std::ceil(vhi) + 2);
                if (hi < lo) continue;

                auto F = [&](i64 a2) -> i128 {
                    return ((i128)e6 * a2 - C1) * ((i128)C2 + (i128)e7 * a2);
                };
                auto emit_range = [&](i64 first, i64 last) {
                    for (i64 a2 = first; a2 <= last; a2 += m45) {
                        i64 a1 = (i64)(((i128)e6 * a2 - C1) / e5);
                        if (a1 == 0) continue;
                        if (a1 > a1max || a1 < -a1max) continue;       // condition3
                        i128 n4 = (i128)C2 + (i128)e7 * a2;
                        i64 a4 = (i64)(n4 / e4);
                        i128 x4 = (i128)a1 * a4;
                        if (x4 > (i128)B || x4 < -(i128)B) continue;   // condition4
                        if (!coprime_i128(a1, P1)) continue;           // gcd1
                        if (!coprime_i128(a4, pref3)) continue;        // gcd2
                        if (std::gcd(a2 < 0 ? -a2 : a2, A2) != 1) continue;  // gcd3
                        sink(e1, e2, e3, e4, e5, e6, e7, a1, a2, a4);
                    }
                };

                const i64 first = first_in_class(lo, r, m45);

                // Middle gap where F < -B m45 (condition 4 fails): estimate
                // from the float roots, verify both endpoints exactly; by
                // convexity the verified gap is exact.
                const double discH = bq * bq - 4 * aq * ((double)T4 - (double)C1 * C2);
                bool skipped = false;
                if (discH > 0) {
                    auto [hlo, hhi] = roots2(aq, bq, (double)T4 - (double)C1 * C2, discH);
                    if ((hhi - hlo) > 8.0 * m45) {
                        i64 gl = first_in_class(std::max(lo, (i64)std::floor(hlo) - 2), r, m45);
                        i64 gr_last = hi;
                        // first candidate with F < -T4 from the left
                        i64 jl = -1, jr = -1;
                        for (i64 a2 = gl, k = 0; k < 6 && a2 <= hi; a2 += m45, ++k)
                            if (F(a2) < -T4) { jl = a2; break; }
                        if (jl >= 0) {
                            i64 gr0 = first_in_class(std::min((i64)std::ceil(hhi) + 2, gr_last) ,
                                                     r, m45);
                            // walk backwards from just above the estimated gap end
                            for (i64 a2 = gr0, k = 0; k < 6 && a2 >= jl; a2 -= m45, ++k)
                                if (F(a2) < -T4) { jr = a2; break; }
                        }
                        if (jl >= 0 && jr >= jl) {
                            emit_range(first, jl - 1);
                            emit_range(first_in_class(jr + 1, r, m45), hi);
                            skipped = true;
                        }
                    }
                }
                if (!skipped) emit_range(first, hi);
            }
        }
    }
}

}  // namespace

TorsorCount count(i64 B, int workers) {
    check_B(B, "torsor::count");
    auto t0 = std::chrono::steady_clock::now();
    auto cells = make_cells(B);
    if (workers > 0) omp_set_num_threads(workers);
    i64 total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (size_t i = 0; i < cells.size(); ++i) {
        i64 local = 0;
        scan_cell(B, cells[i],
                  [&](i64, i64, i64, i64, i64, i64, i64, i64, i64, i64) { ++local; });
        total += local;
    }
    auto t1 = std::chrono::steady_clock::now();
    return TorsorCount{B, total, std::chrono::duration<double>(t1 - t0).count()};
}

std::vector<TorsorPoint> enumerate(i64 B) {
    check_B(B, "torsor::enumerate");
    std::vector<TorsorPoint> pts;
    for (const Cell& c : make_cells(B))
        scan_cell(B, c, [&](i64 e1, i64 e2, i64 e3, i64 e4, i64 e5, i64 e6, i64 e7, i64 a1,
                            i64 a2, i64 a4) {
            TorsorPoint t;
            t.eta = {Int(e1), Int(e2), Int(e3), Int(e4), Int(e5), Int(e6), Int(e7)};
            t.alpha1 = a1;
            t.alpha2 = a2;
            t.alpha4 = a4;
            pts.push_back(std::move(t));
        });
    return pts;
}

std::vector<i64> torsor_height_histogram(i64 B) {
    check_B(B, "torsor_height_histogram");
    std::vector<i64> hist(B + 1, 0);
    for (const Cell& c : make_cells(B))
        scan_cell(B, c, [&](i64 e1, i64 e2, i64 e3, i64 e4, i64 e5, i64 e6, i64 e7, i64 a1,
                            i64 a2, i64 a4) {
            i64 x0 = e1 * e2 * e2 * e3 * e3 * e3 * e5 * e5 * e6 * e6;
            i64 x1 = e1 * e1 * e1 * e2 * e2 * e3 * e4 * e4 * e7 * e7;
            i64 x3 = std::abs(e1 * e2 * e3 * e5 * e7 * a1);
            i64 x4 = std::abs(a1 * a4);
            ++hist[std::max({x0, x1, x3, x4})];
        });
    return hist;
}

i64 count_reference(i64 B) {
    check_B(B, "count_reference");
    i64 n = 0;
    for (i64 e1 = 1; e1 * e1 * e1 <= B; ++e1)
        for (i64 e2 = 1; e1 * e1 * e1 * e2 * e2 <= B; ++e2)
            for (i64 e3 = 1; e1 * e1 * e1 * e2 * e2 * e3 <= B && e1 * e2 * e2 * e3 * e3 * e3 <= B;
                 ++e3)
                for (i64 e4 = 1; e1 * e1 * e1 * e2 * e2 * e3 * e4 * e4 <= B; ++e4)
                    for (i64 e5 = 1; e1 * e2 * e2 * e3 * e3 * e3 * e5 * e5 <= B; ++e5) {
                        i64 c1b = e1 * e2 * e2 * e3 * e3 * e3 * e5 * e5;
                        i64 c2b = e1 * e1 * e1 * e2 * e2 * e3 * e4 * e4;
                        for (i64 e6 = 1; c1b * e6 * e6 <= B; ++e6)
                            for (i64 e7 = 1; c2b * e7 * e7 <= B; ++e7) {
                                i64 C1 = e1 * e1 * e2 * e4 * e4 * e7;
                                i64 C2 = e2 * e3 * e3 * e5 * e5 * e6;
                                i64 pref3 = e1 * e2 * e3 * e5 * e7;
                                for (i64 a1 = -(B / pref3); a1 <= B / pref3; ++a1) {
                                    if (a1 == 0) continue;
                                    i64 t1 = C1 + e5 * a1;
                                    if (t1 % e6 != 0) continue;
                                    i64 a2 = t1 / e6;
                                    i64 t2 = C2 + e7 * a2;
                                    if (t2 % e4 != 0) continue;
                                    i64 a4 = t2 / e4;
                                    if (std::abs(a1 * a4) > B) continue;
                                    TorsorPoint t;
                                    t.eta = {Int(e1), Int(e2), Int(e3), Int(e4),
                                             Int(e5), Int(e6), Int(e7)};
                                    t.alpha1 = a1;
                                    t.alpha2 = a2;
                                    t.alpha4 = a4;
                                    if (!check_coprimality(t)) continue;
                                    ++n;
                                }
                            }
                    }
    return n;
}

}  // namespace a3dp
