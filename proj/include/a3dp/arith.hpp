#pragma once

#include <array>
#include <functional>

#include "a3dp/factor.hpp"

namespace a3dp {

using Eta5 = std::array<i64, 5>;  // (eta1, ..., eta5)
using Eta7 = std::array<i64, 7>;  // (eta1, ..., eta7)

inline constexpr double kZeta2 = 1.6449340668482264365;      // zeta(2) = pi^2/6
inline constexpr double kZeta2Inv = 0.6079271018540266287;   // 1/zeta(2)

// The four multiplicative-in-the-radical products:
//   phi_star(n) = prod_{p|n} (1 - 1/p)
//   phi_circ(n) = prod_{p|n, p != 2} (1 - 1/(p-1))
//   phi_dag(n)  = prod_{p|n} (1 - 1/p^2)
//   phi_flat(n) = prod_{p|n, p != 2} (1 + 1/(p(p-2)))
Rat phi_star(i64 n);
Rat phi_circ(i64 n);
Rat phi_dag(i64 n);
Rat phi_flat(i64 n);

// psi_{a,b}(n) = phi_circ(gcd(a,n))^{-1} when gcd(n,b) = 1, else 0.
Rat psi(i64 a, i64 b, i64 n);
// psi'_{a,b}(n) = phi_circ(gcd(a,n))^{-1} phi_star(n) phi_star(gcd(a,n))^{-1}
// when gcd(n,b) = 1, else 0.
Rat psi_prime(i64 a, i64 b, i64 n);

// Mean value of psi_{a,b}:  Psi(a,b) = phi_star(b) phi_flat(a)/phi_flat(gcd(a,b)).
Rat Psi(i64 a, i64 b);

// Mean value of psi'_{a,b} is Psi'(a,b) = cofactor * zeta(2)^{-1}; the
// zeta(2)^{-1} factor is kept symbolic so the cofactor stays rational.
struct ZetaInvScaled {
    Rat cofactor;
    bool zeta2_inverse = true;
    double value() const { return cofactor.get_d() * kZeta2Inv; }
};
ZetaInvScaled Psi_prime(i64 a, i64 b);

// Dirichlet convolution with the Mobius function: (f * mu)(n) = sum_{d|n} f(n/d) mu(d).
Rat convolve_mu(const std::function<Rat(i64)>& f, i64 n);

// Closed forms of (psi_{a,b} * mu)(n) and (psi'_{a,b} * mu)(n).
Rat psi_mu(i64 a, i64 b, i64 n);
Rat psi_prime_mu(i64 a, i64 b, i64 n);

// Exact partial sums sum_{n <= X} psi_{a,b}(n) (and the primed / even-only variants).
Rat sum_psi(i64 a, i64 b, i64 X);
Rat sum_psi_prime(i64 a, i64 b, i64 X);
Rat sum_psi_even(i64 a, i64 b, i64 X);
Rat sum_psi_prime_even(i64 a, i64 b, i64 X);

// A weight for the partial-summation estimates: callable plus the number of
// sign changes of its derivative on the interval of interest. The annotation
// is mandatory; it enters the error normalisation M_I(g) = (1+R) sup|g|.
struct WeightFn {
    std::function<double(double)> f;
    int derivative_sign_changes = -1;
};

struct WeightedSumReport {
    double sum = 0;         // sum of psi_{a,b}(n) g(n) over I (direct)
    double integral = 0;    // quadrature of g over I
    double main_term = 0;   // Psi(a,b) * integral (halved for even-only sums)
    double residual = 0;    // sum - main_term
    double error_scale = 0; // sigma_{-delta}(ab or b) * t2^delta * M_I(g)
    double normalized = 0;  // |residual| / error_scale
};

// Direct check of the weighted summation estimates on I = [t1, t2].
// primed = false: psi_{a,b}, error scale sigma_{-delta}(ab);
// primed = true:  psi'_{a,b}, error scale sigma_{-delta}(b).
// even_only sums over n = 0 mod 2 and requires 2 not dividing b (and 2|a for
// the primed variant); the main term is then halved.
WeightedSumReport weighted_sum_check(i64 a, i64 b, const WeightFn& g, double t1, double t2,
                                     double delta, bool even_only = false, bool primed = false);

// theta-functions feeding the density computation.
Rat theta1(const Eta5& eta, i64 eta6);
Rat theta(const Eta7& etap);
// Triple Mobius-sum oracle for theta (valid under gcd conditions on eta').
Rat theta_mobius_sum(const Eta7& etap);
Rat theta1_prime(const Eta5& eta);
Rat theta2_prime(const Eta5& eta, i64 eta6);
// Theta with the vanishing redefinition when gcd(eta1*eta4, eta3*eta5) > 1 or
// gcd(eta2, eta4*eta5) > 1.
Rat Theta(const Eta5& eta);

// sum_{k|a, gcd(k,c)=1} mu(k)/(k phi_star(k b)), as a direct divisor sum and
// as the closed-form product it aggregates to.
Rat mobius_phi_sum(i64 a, i64 b, i64 c);
Rat mobius_phi_sum_closed(i64 a, i64 b, i64 c);

// Parity set membership: true iff 2 does not divide e1, or 2 divides e2*e4.
// (With arguments (eta1,eta2,eta4) this is the set N; with (eta3,eta2,eta5)
// it is the set M.)
bool in_parity_set(i64 e1, i64 e2, i64 e4);

}  // namespace a3dp
