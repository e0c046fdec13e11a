#include "a3dp/density.hpp"

#include <omp.h>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace a3dp {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

// Y6^2 = B / eta^(1,2,3,0,2),  Y7^2 = B / eta^(3,2,1,2,0).
double y6_of(const Eta5& e, i64 B) {
    double m = (double)e[0] * e[1] * e[1] * ((double)e[2] * e[2] * e[2]) * e[4] * e[4];
    return std::sqrt(B / m);
}
double y7_of(const Eta5& e, i64 B) {
    double m = (double)e[0] * e[0] * e[0] * e[1] * e[1] * (double)e[2] * e[3] * e[3];
    return std::sqrt(B / m);
}

bool in_V(const Eta5& e, i64 B) {
    i128 m6 = (i128)e[0] * e[1] * e[1] * e[2] * e[2] * e[2] * e[4] * e[4];
    i128 m7 = (i128)e[0] * e[0] * e[0] * e[1] * e[1] * e[2] * e[3] * e[3];
    return m6 <= B && m7 <= B;
}

}  // namespace

double h_fn(double u2, double t7, double t6) {
    double w = t7 - t6 * u2;
    return std::max(std::max(t6, t7), std::max(t7 * std::abs(w), std::abs(w) * std::abs(t6 + t7 * u2)));
}

double g1(double t7, double t6) {
    if (!(t6 > 0) || !(t7 > 0)) throw std::invalid_argument("g1: t6, t7 must be positive");
    return h_slice(t7, t6).total_length();
}

QuadResult g2(double t6, const Eta5& eta, i64 B, double tol) {
    if (!in_V(eta, B)) throw std::invalid_argument("g2: eta outside V (Y6 >= 1, Y7 >= 1)");
    double y7 = y7_of(eta, B);
    // t7 ranges over [1/Y7, 1]; substitute t7 = s^2 to flatten the
    // t7^{-1/2} growth of g1 near zero.
    double s_lo = std::sqrt(1.0 / y7);
    if (s_lo >= 1) return {0.0, 0.0};
    QuadResult r;
    r.value = GK::integrate([&](double s) { return 2 * s * g1(s * s, t6); },
                            s_lo, 1.0, 15, tol, &r.error);
    return r;
}

QuadResult g3(const Eta5& eta, i64 B, double tol) {
    if (!in_V(eta, B)) throw std::invalid_argument("g3: eta outside V (Y6 >= 1, Y7 >= 1)");
    double y6 = y6_of(eta, B);
    double s_lo = std::sqrt(1.0 / y6);
    if (s_lo >= 1) return {0.0, 0.0};
    QuadResult r;
    // Inner errors enter the outer integrand with the 2s Jacobian weight.
    double inner_err_w = 0;
    r.value = GK::integrate(
        [&](double s) {
            QuadResult inner = g2(s * s, eta, B, tol / (4 * std::max(s, 1e-12)));
            inner_err_w = std::max(inner_err_w, 2 * s * inner.error);
            return 2 * s * inner.value;
        },
        s_lo, 1.0, 15, tol, &r.error);
    r.error += inner_err_w * (1.0 - s_lo);
    return r;
}

QuadResult omega_infty(double tol) {
    QuadResult r;
    double inner_err_w = 0;
    double v = GK::integrate(
        [&](double s6) {
            double ie = 0;
            double inner = GK::integrate(
                [&](double s7) { return 2 * s7 * g1(s7 * s7, s6 * s6); },
                0.0, 1.0, 15, tol / (4 * std::max(s6, 1e-12)), &ie);
            inner_err_w = std::max(inner_err_w, 2 * s6 * ie);
            return 2 * s6 * inner;
        },
        0.0, 1.0, 15, tol, &r.error);
    r.value = 4 * v;
    r.error = 4 * (r.error + inner_err_w);
    return r;
}

McResult omega_infty_mc(i64 samples, u64 seed) {
    if (samples < 1) throw std::invalid_argument("omega_infty_mc: samples must be >= 1");
    const CounterRng rng{seed};
    // Estimate I = int dx0 dx2 dx3/(x0 x2) over {x2^2 <= x0 <= 1, |x3| <= 1,
    // |x4| <= 1} with x0 = e^-a, x2 = e^-c. In (a, c, x3) the integrand is an
    // indicator on {0 <= a <= 2c}; the x3-window shrinks like e^{-c/2}, so
    // drawing c ~ Exp(1/4), a ~ U[0, 2c], x3 ~ U[-1,1] leaves a finite-variance
    // weight 16 c e^{c/4}. Then omega_infty = 2 I.
    const i64 chunk = 1 << 16;
    const i64 nchunks = (samples + chunk - 1) / chunk;
    std::vector<double> sums(nchunks, 0.0), sqs(nchunks, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (i64 ci = 0; ci < nchunks; ++ci) {
        double s = 0, s2 = 0;
        i64 lo = ci * chunk, hi = std::min(samples, lo + chunk);
        for (i64 i = lo; i < hi; ++i) {
            u64 base = 3 * static_cast<u64>(i);
            double u1 = rng.uniform(base);
            double c = -4.0 * std::log1p(-u1);  // Exp(rate 1/4)
            double a = 2.0 * c * rng.uniform(base + 1);
            double x3 = 2.0 * rng.uniform(base + 2) - 1.0;
            double x0 = std::exp(-a);
            double x2 = std::exp(-c);
            double x4 = (x0 * x0 + x2 * x2 + x0 * x3) * x3 / (x0 * x2);
            if (std::abs(x4) <= 1.0) {
                double w = 16.0 * c * std::exp(0.25 * c);
                s += w;
                s2 += w * w;
            }
        }
        sums[ci] = s;
        sqs[ci] = s2;
    }
    double s = 0, s2 = 0;
    for (i64 ci = 0; ci < nchunks; ++ci) { s += sums[ci]; s2 += sqs[ci]; }
    double mean = s / samples;
    double var = std::max(0.0, s2 / samples - mean * mean);
    McResult r;
    r.value = 2 * mean;
    r.std_error = 2 * std::sqrt(var / samples);
    r.samples = samples;
    r.seed = seed;
    return r;
}

Rat omega_p(i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("omega_p: argument must be prime");
    return Rat(p * p + 6 * p + 1, p * p);
}

namespace {

double euler_log_factor(double p) {
    return 6 * std::log1p(-1.0 / p) + std::log1p(6.0 / p + 1.0 / (p * p));
}

}  // namespace

EulerProduct euler_product(i64 p_max) {
    if (p_max < 2) throw std::invalid_argument("euler_product: p_max must be >= 2");
    long double log_sum = 0.0L;
    i64 last = 2;
    for (i64 p : small_primes()) {
        if (p > p_max) break;
        log_sum += euler_log_factor(static_cast<double>(p));
        last = p;
    }
    if (p_max > small_primes().back())
        throw std::invalid_argument("euler_product: p_max beyond prime table");
    EulerProduct r;
    r.value = static_cast<double>(std::exp(log_sum));
    // |log((1-1/p)^6 omega_p)| <= 20/p^2 (the factor is 1 - 20/p^2 + 64/p^3 - ...),
    // so the omitted tail multiplies the value by e^{+-20/p_max}.
    r.tail_bound = r.value * std::expm1(20.0 / static_cast<double>(p_max));
    r.p_max = last;
    return r;
}

Rat euler_product_exact(i64 p_max) {
    if (p_max < 2) throw std::invalid_argument("euler_product_exact: p_max must be >= 2");
    Rat v(1);
    for (i64 p : small_primes()) {
        if (p > p_max) break;
        Rat f(p - 1, p);
        Rat f6 = f * f;
        f6 = f6 * f6 * f6;
        v *= f6 * omega_p(p);
    }
    return v;
}

std::pair<Rat, Rat> local_factor_sides(i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("local_factor_identity: p must be prime");
    // Theta on prime-power tuples depends only on which exponents are
    // positive; each positive slot contributes a geometric series
    // sum_{k>=1} p^-k = 1/(p-1).
    Rat lhs(0);
    Rat geo(1, p - 1);
    for (int mask = 0; mask < 32; ++mask) {
        Eta5 eta;
        Rat weight(1);
        for (int i = 0; i < 5; ++i) {
            if (mask & (1 << i)) {
                eta[i] = p;
                weight *= geo;
            } else {
                eta[i] = 1;
            }
        }
        lhs += Theta(eta) * weight;
    }
    Rat p2(p * p);
    Rat rhs = (p2 / (p2 - 1)) * Rat(p - 1, p) * omega_p(p);
    return {lhs, rhs};
}

bool local_factor_identity(i64 p) {
    auto [lhs, rhs] = local_factor_sides(p);
    if (lhs != rhs) return false;
    // Bookkeeping form behind the Euler product: multiplying by (1-1/p)^5
    // must give the zeta(2) local factor times (1-1/p)^6 omega_p.
    Rat f(p - 1, p);
    Rat f5 = f * f * f * f * f;
    Rat zeta2_local = Rat(p * p) / Rat(p * p - 1);
    return f5 * lhs == zeta2_local * f5 * f * omega_p(p);
}

PeyreBreakdown peyre_constant(i64 p_max, double quad_tol) {
    if (p_max < 2) throw std::invalid_argument("peyre_constant: p_max must be >= 2");
    if (!(quad_tol > 0)) throw std::invalid_argument("peyre_constant: quad_tol must be positive");
    PeyreBreakdown b;
    b.alpha_tilde = Rat(1, 4320);
    b.beta = Rat(1);
    b.omega_inf = omega_infty(quad_tol);
    b.euler = euler_product(p_max);
    double at = b.alpha_tilde.get_d();
    b.c = at * b.omega_inf.value * b.euler.value;
    b.c_err = at * (b.omega_inf.error * b.euler.value +
                    b.omega_inf.value * b.euler.tail_bound +
                    b.omega_inf.error * b.euler.tail_bound);
    // The proof-side assembly: zeta(2)^{-1} (omega_infty/2) B picks up
    // alpha log^5 B with alpha = 2 alpha(V~) and the Theta-sum collapses to
    // zeta(2) prod (1-1/p)^6 omega_p; the zeta(2) factors cancel.
    double alpha = 2 * at;  // 1/2160
    b.c_proof_side = kZeta2Inv * (b.omega_inf.value / 2) * alpha * kZeta2 * b.euler.value;
    return b;
}

}  // namespace a3dp
