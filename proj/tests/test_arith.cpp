#include <doctest.h>

#include <algorithm>

#include "a3dp/arith.hpp"

using namespace a3dp;

TEST_CASE("phi products") {
    CHECK(phi_star(1) == 1);
    CHECK(phi_circ(2) == 1);
    CHECK(phi_flat(2) == 1);
    CHECK(phi_star(12) == Rat(1, 3));
    CHECK(phi_flat(15) == Rat(64, 45));
    CHECK(phi_dag(6) == Rat(3, 4) * Rat(8, 9));
    CHECK_THROWS_AS(phi_star(0), std::invalid_argument);
}

TEST_CASE("phi_circ * phi_flat vs phi_star (spot)") {
    for (i64 n = 1; n <= 2000; ++n) {
        Rat lhs = phi_circ(n) * phi_flat(n);
        Rat rhs = (n % 2 == 0 ? 2 : 1) * phi_star(n);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("psi values") {
    CHECK(psi(3, 2, 5) == 1);
    CHECK(psi(3, 2, 6) == 0);
    CHECK(psi(5, 1, 10) == Rat(4, 3));
    CHECK(psi_prime(1, 1, 6) == phi_star(6));
}

TEST_CASE("Psi main terms") {
    CHECK(Psi(1, 1) == 1);
    CHECK(Psi(3, 2) == Rat(2, 3));
    auto pp = Psi_prime(1, 1);
    CHECK(pp.cofactor == 1);
    CHECK(pp.zeta2_inverse);
}

TEST_CASE("Mobius convolution: generic equals closed forms (small)") {
    for (i64 a = 1; a <= 25; ++a)
        for (i64 b = 1; b <= 25; ++b)
            for (i64 n = 1; n <= 25; ++n) {
                REQUIRE(convolve_mu([&](i64 m) { return psi(a, b, m); }, n) ==
                        psi_mu(a, b, n));
                REQUIRE(convolve_mu([&](i64 m) { return psi_prime(a, b, m); }, n) ==
                        psi_prime_mu(a, b, n));
            }
}

TEST_CASE("convolution spot values") {
    // psi_{1,1} == 1, so (psi * mu)(n) = [n == 1]
    CHECK(psi_mu(1, 1, 1) == 1);
    CHECK(psi_mu(1, 1, 7) == 0);
    CHECK(psi_mu(1, 1, 12) == 0);
    // (psi_{3,2} * mu)(3) = psi(3) - psi(1) = phi_circ(3)^{-1} - 1 = 1
    CHECK(psi_mu(3, 2, 3) == 1);
    CHECK(convolve_mu([](i64 m) { return psi(3, 2, m); }, 3) == 1);
}

TEST_CASE("Lemma 4 vanishing at even d") {
    for (i64 a = 1; a <= 30; ++a)
        for (i64 b = 1; b <= 30; b += 2)
            for (i64 d = 2; d <= 30; d += 2) {
                REQUIRE(psi_mu(a, b, d) == 0);
                if (a % 2 == 0) REQUIRE(psi_prime_mu(a, b, d) == 0);
            }
}

TEST_CASE("partial sums") {
    CHECK(sum_psi(1, 1, 100) == 100);
    // even-restricted: psi_{1,1} over even n <= 100 counts 50 terms
    CHECK(sum_psi_even(1, 1, 100) == 50);
    // direct check of one nontrivial exact sum
    Rat s(0);
    for (i64 n = 1; n <= 500; ++n) s += psi(3, 2, n);
    CHECK(sum_psi(3, 2, 500) == s);
}

TEST_CASE("weighted sum requires annotation and behaves") {
    WeightFn bad{[](double) { return 1.0; }, -1};
    CHECK_THROWS_AS(weighted_sum_check(3, 2, bad, 1, 100, 0.5), std::invalid_argument);

    WeightFn one{[](double) { return 1.0; }, 0};
    auto r = weighted_sum_check(1, 1, one, 1, 1000, 0.5);
    CHECK(r.sum == doctest::Approx(1000.0));
    CHECK(r.main_term == doctest::Approx(r.integral));
    // g == 1 on [1, X] reduces to sum_psi
    auto r32 = weighted_sum_check(3, 2, one, 1, 1000, 0.5);
    CHECK(r32.sum == doctest::Approx(sum_psi(3, 2, 1000).get_d()));

    WeightFn invt{[](double t) { return 1.0 / t; }, 0};
    auto r2 = weighted_sum_check(3, 2, invt, 1, 10000, 0.5);
    CHECK(r2.integral == doctest::Approx(std::log(10000.0)).epsilon(1e-9));
    CHECK(r2.normalized < 10.0);

    // Lemma 4 preconditions
    CHECK_THROWS_AS(weighted_sum_check(3, 2, one, 1, 100, 0.5, true, false),
                    std::invalid_argument);
    CHECK_THROWS_AS(weighted_sum_check(3, 1, one, 1, 100, 0.5, true, true),
                    std::invalid_argument);
    auto re = weighted_sum_check(3, 1, one, 1, 10000, 0.5, true, false);
    CHECK(re.main_term == doctest::Approx(0.5 * Psi(3, 1).get_d() * re.integral));
}

TEST_CASE("theta functions") {
    CHECK(Theta({1, 1, 1, 1, 1}) == 1);
    // gcd7 violation (eta2 vs eta4 eta5) forces 0
    CHECK(Theta({1, 2, 1, 2, 1}) == 0);
    CHECK(Theta({1, 2, 1, 1, 2}) == 0);
    // gcd6 violation
    CHECK(Theta({2, 3, 2, 1, 1}) == 0);
    // two evaluation paths of the factorized display
    Eta5 e{2, 3, 1, 1, 1};
    Rat lhs = Theta(e);
    auto ps = [&](std::initializer_list<i64> xs) {
        Rat v(1);
        std::vector<i64> seen;
        for (i64 x : xs)
            for (i64 p : prime_divisors(x))
                if (std::find(seen.begin(), seen.end(), p) == seen.end()) {
                    seen.push_back(p);
                    v *= Rat(p - 1, p);
                }
        return v;
    };
    Rat rhs = (phi_star(6) / phi_dag(6)) * ps({3, 1, 1, 1}) * ps({2, 3, 1, 1}) *
              (ps({2, 3}) / ps({3, 1})) * (ps({3, 1}) / ps({3, 1}));
    CHECK(lhs == rhs);

    // theta vs its triple Mobius sum on a few tuples (the suite is exhaustive)
    for (Eta7 etap : {Eta7{1, 1, 1, 1, 1, 1, 1}, Eta7{2, 1, 3, 1, 1, 1, 1},
                      Eta7{6, 1, 1, 1, 1, 1, 5}, Eta7{3, 2, 1, 1, 5, 1, 7}}) {
        REQUIRE(theta(etap) == theta_mobius_sum(etap));
    }
    // theta(eta') = 0 when eta1 is even and eta2 eta4 eta7 odd (p = 2 factor)
    CHECK(theta({2, 1, 1, 1, 1, 1, 1}) == 0);
    CHECK(theta({2, 1, 1, 1, 1, 1, 2}) != 0);
}

TEST_CASE("aggregation identity (spot)") {
    for (i64 a = 1; a <= 20; ++a)
        for (i64 b = 1; b <= 12; ++b)
            for (i64 c = 1; c <= 12; ++c)
                REQUIRE(mobius_phi_sum(a, b, c) == mobius_phi_sum_closed(a, b, c));
}

TEST_CASE("parity sets") {
    CHECK(in_parity_set(1, 1, 1));
    CHECK(in_parity_set(3, 5, 7));
    CHECK(!in_parity_set(2, 1, 1));
    CHECK(in_parity_set(2, 2, 1));
    CHECK(in_parity_set(2, 1, 4));
    for (i64 e1 = 1; e1 <= 30; ++e1)
        for (i64 ea = 1; ea <= 10; ++ea)
            for (i64 eb = 1; eb <= 10; ++eb) {
                i64 g = gcd64(e1, ea * eb);
                Rat lhs = (phi_circ(e1) * phi_flat(e1)) / (phi_circ(g) * phi_flat(g));
                Rat rhs = phi_star(e1) / phi_star(g);
                if (in_parity_set(e1, ea, eb)) REQUIRE(lhs == rhs);
                else REQUIRE(lhs == 2 * rhs);
            }
}
