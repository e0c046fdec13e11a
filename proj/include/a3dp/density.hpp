#pragma once

#include "a3dp/arith.hpp"
#include "a3dp/intervals.hpp"
#include "a3dp/polytope.hpp"
#include "a3dp/rng.hpp"

namespace a3dp {

// h(u2, t7, t6) = max{ t6, t7, t7 |t7 - t6 u2|, |t7 - t6 u2| |t6 + t7 u2| }.
double h_fn(double u2, double t7, double t6);

// g1(t7, t6) = measure{ u2 : h(u2, t7, t6) <= 1 }, in closed form.
double g1(double t7, double t6);

struct QuadResult {
    double value = 0;
    double error = 0;  // quadrature error estimate (conservative)
};

// g2(t6; eta, B) = integral of g1(t7, t6) over t7 Y7 >= 1, and
// g3(eta, B) the further integral over t6 Y6 >= 1. Both require eta in V
// (Y6 >= 1 and Y7 >= 1).
QuadResult g2(double t6, const Eta5& eta, i64 B, double tol = 1e-8);
QuadResult g3(const Eta5& eta, i64 B, double tol = 1e-8);

// omega_infty = 4 * integral of g1 over t6, t7 > 0 (equivalently (0,1]^2).
QuadResult omega_infty(double tol = 1e-8);

// Monte Carlo estimate of the same constant from the untransformed integral
// 2 * int dx0 dx2 dx3 / (x0 x2) over the height-<=1 chart, using an
// exponential importance sampler in (log 1/x0, log 1/x2). Reproducible for
// fixed (samples, seed).
McResult omega_infty_mc(i64 samples, u64 seed);

// omega_p = 1 + 6/p + 1/p^2.
Rat omega_p(i64 p);

struct EulerProduct {
    double value = 0;      // prod_{p <= p_max} (1 - 1/p)^6 omega_p
    double tail_bound = 0; // absolute bound on the remaining factors' effect
    i64 p_max = 0;
};
EulerProduct euler_product(i64 p_max);

// Exact-rational partial product over p <= p_max (cross-check path).
Rat euler_product_exact(i64 p_max);

// Exact check of the local-factor identity
//   sum_k Theta(p^k1,...,p^k5) / p^(k1+...+k5)
//     = (1 - 1/p^2)^{-1} (1 - 1/p) (1 + 6/p + 1/p^2),
// grouped over the {0, >=1}^5 support patterns of the exponent vector, plus
// the bookkeeping form (1-1/p)^5 * lhs = zeta2-local * (1-1/p)^6 omega_p.
bool local_factor_identity(i64 p);
// Both sides, for reporting.
std::pair<Rat, Rat> local_factor_sides(i64 p);

struct PeyreBreakdown {
    Rat alpha_tilde;        // 1/4320
    Rat beta;               // 1
    QuadResult omega_inf;
    EulerProduct euler;
    double c = 0;           // alpha_tilde * beta * omega_infty * euler product
    double c_err = 0;
    double c_proof_side = 0;  // zeta(2)^{-1} (omega_infty/2) * alpha * zeta(2) * euler product
};

PeyreBreakdown peyre_constant(i64 p_max, double quad_tol);

}  // namespace a3dp
