#include "a3dp/arith.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace a3dp {

namespace {

void require_positive(i64 n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

// Distinct primes of a product given by its factors, without forming the
// product (the factors may multiply out past 64 bits).
std::vector<i64> union_primes(std::initializer_list<i64> xs) {
    std::vector<i64> ps;
    for (i64 x : xs)
        for (i64 p : prime_divisors(x)) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

Rat phi_star_primes(const std::vector<i64>& ps) {
    Rat v(1);
    for (i64 p : ps) v *= Rat(p - 1, p);
    return v;
}

Rat phi_dag_primes(const std::vector<i64>& ps) {
    Rat v(1);
    for (i64 p : ps) v *= Rat(p * p - 1, p * p);
    return v;
}

// prod over p in ps, p != 2 of (1 - 1/(p-1)).
Rat one_minus_inv_pm1(const std::vector<i64>& ps) {
    Rat v(1);
    for (i64 p : ps)
        if (p != 2) v *= Rat(p - 2, p - 1);
    return v;
}

}  // namespace

Rat phi_star(i64 n) {
    require_positive(n, "phi_star");
    return phi_star_primes(prime_divisors(n));
}

Rat phi_circ(i64 n) {
    require_positive(n, "phi_circ");
    return one_minus_inv_pm1(prime_divisors(n));
}

Rat phi_dag(i64 n) {
    require_positive(n, "phi_dag");
    return phi_dag_primes(prime_divisors(n));
}

Rat phi_flat(i64 n) {
    require_positive(n, "phi_flat");
    Rat v(1);
    for (i64 p : prime_divisors(n))
        if (p != 2) v *= Rat(p * p - 2 * p + 1, p * (p - 2));
    return v;
}

Rat psi(i64 a, i64 b, i64 n) {
    require_positive(a, "psi");
    require_positive(b, "psi");
    require_positive(n, "psi");
    if (gcd64(n, b) != 1) return Rat(0);
    return 1 / phi_circ(gcd64(a, n));
}

Rat psi_prime(i64 a, i64 b, i64 n) {
    require_positive(a, "psi_prime");
    require_positive(b, "psi_prime");
    require_positive(n, "psi_prime");
    if (gcd64(n, b) != 1) return Rat(0);
    i64 g = gcd64(a, n);
    return phi_star(n) / (phi_circ(g) * phi_star(g));
}

Rat Psi(i64 a, i64 b) {
    require_positive(a, "Psi");
    require_positive(b, "Psi");
    return phi_star(b) * phi_flat(a) / phi_flat(gcd64(a, b));
}

ZetaInvScaled Psi_prime(i64 a, i64 b) {
    require_positive(a, "Psi_prime");
    require_positive(b, "Psi_prime");
    Rat cof = Psi(a, b) / phi_dag_primes(union_primes({a, b}));
    return ZetaInvScaled{cof};
}

Rat convolve_mu(const std::function<Rat(i64)>& f, i64 n) {
    require_positive(n, "convolve_mu");
    Rat v(0);
    for (i64 d : squarefree_divisors(n)) v += Rat(mobius(d)) * f(n / d);
    return v;
}

Rat psi_mu(i64 a, i64 b, i64 n) {
    require_positive(n, "psi_mu");
    auto fac = factorize(n);
    for (auto& [p, e] : fac.factors)
        if (e > 1) return Rat(0);
    // Per squarefree prime p | n: mu contributes -1; psi(p)-1 contributes
    // -1/(p-2) when p|a, p != 2, p not dividing b; the factor is 0 unless
    // p | ab (and the p = 2 factor is 0 unless 2 | b).
    Rat v(1);
    for (auto& [p, e] : fac.factors) {
        if (b % p == 0) v *= -1;
        else if (p == 2) return Rat(0);
        else if (a % p == 0) v *= Rat(1, p - 2);
        else return Rat(0);
    }
    return v;
}

Rat psi_prime_mu(i64 a, i64 b, i64 n) {
    require_positive(n, "psi_prime_mu");
    auto fac = factorize(n);
    for (auto& [p, e] : fac.factors)
        if (e > 1) return Rat(0);
    Rat v(1);
    for (auto& [p, e] : fac.factors) {
        if (p == 2) {
            if (b % 2 == 0) v *= -1;
            else if (a % 2 != 0) v *= Rat(-1, 2);
            else return Rat(0);  // 2|a, 2 not | b
        } else if (b % p == 0) {
            v *= -1;
        } else if (a % p == 0) {
            v *= Rat(1, p - 2);
        } else {
            v *= Rat(-1, p);
        }
    }
    return v;
}

namespace {

// Small cache of phi_circ / phi_star over the divisors of a fixed a, used by
// the partial sums (the only lookups are at gcd(a, n)).
struct PsiEvaluator {
    i64 a, b;
    std::vector<i64> ds;
    std::vector<Rat> inv_circ;       // 1/phi_circ(d)
    std::vector<Rat> inv_circ_star;  // 1/(phi_circ(d) phi_star(d))

    PsiEvaluator(i64 a_, i64 b_) : a(a_), b(b_), ds(divisors(a_)) {
        for (i64 d : ds) {
            inv_circ.push_back(1 / phi_circ(d));
            inv_circ_star.push_back(1 / (phi_circ(d) * phi_star(d)));
        }
    }

    size_t index(i64 d) const {
        return std::lower_bound(ds.begin(), ds.end(), d) - ds.begin();
    }

    Rat value(i64 n) const {
        if (gcd64(n, b) != 1) return Rat(0);
        return inv_circ[index(gcd64(a, n))];
    }

    Rat value_prime(i64 n) const {
        if (gcd64(n, b) != 1) return Rat(0);
        return phi_star(n) * inv_circ_star[index(gcd64(a, n))];
    }
};

template <typename F>
Rat sum_over(i64 X, i64 step_start, i64 step, F&& term) {
    Rat s(0);
    for (i64 n = step_start; n <= X; n += step) s += term(n);
    return s;
}

}  // namespace

Rat sum_psi(i64 a, i64 b, i64 X) {
    require_positive(X, "sum_psi");
    PsiEvaluator ev(a, b);
    return sum_over(X, 1, 1, [&](i64 n) { return ev.value(n); });
}

Rat sum_psi_prime(i64 a, i64 b, i64 X) {
    require_positive(X, "sum_psi_prime");
    PsiEvaluator ev(a, b);
    return sum_over(X, 1, 1, [&](i64 n) { return ev.value_prime(n); });
}

Rat sum_psi_even(i64 a, i64 b, i64 X) {
    require_positive(X, "sum_psi_even");
    PsiEvaluator ev(a, b);
    return sum_over(X, 2, 2, [&](i64 n) { return ev.value(n); });
}

Rat sum_psi_prime_even(i64 a, i64 b, i64 X) {
    require_positive(X, "sum_psi_prime_even");
    PsiEvaluator ev(a, b);
    return sum_over(X, 2, 2, [&](i64 n) { return ev.value_prime(n); });
}

WeightedSumReport weighted_sum_check(i64 a, i64 b, const WeightFn& g, double t1, double t2,
                                     double delta, bool even_only, bool primed) {
    require_positive(a, "weighted_sum_check");
    require_positive(b, "weighted_sum_check");
    if (g.derivative_sign_changes < 0)
        throw std::invalid_argument("weighted_sum_check: weight lacks monotonicity annotation");
    if (!(t1 >= 0 && t2 > t1)) throw std::invalid_argument("weighted_sum_check: bad interval");
    if (even_only) {
        if (b % 2 == 0)
            throw std::invalid_argument("weighted_sum_check: even-only sum requires odd b");
        if (primed && a % 2 != 0)
            throw std::invalid_argument("weighted_sum_check: primed even-only sum requires even a");
    }

    PsiEvaluator ev(a, b);
    double sum = 0.0;
    i64 n0 = std::max<i64>(1, static_cast<i64>(std::ceil(t1)));
    for (i64 n = n0; n <= static_cast<i64>(std::floor(t2)); ++n) {
        if (even_only && n % 2 != 0) continue;
        Rat v = primed ? ev.value_prime(n) : ev.value(n);
        sum += v.get_d() * g.f(static_cast<double>(n));
    }

    double quad_err = 0.0;
    double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g.f, t1, t2, 12, 1e-12, &quad_err);

    double mean = primed ? Psi_prime(a, b).value() : Psi(a, b).get_d();
    double main_term = (even_only ? 0.5 : 1.0) * mean * integral;

    // M_I(g) = (1 + R_g(I)) sup |g|; the sup is sampled, which is exact for
    // the piecewise-monotone weights this is used with.
    double sup = 0.0;
    const int kSamples = 512;
    for (int i = 0; i <= kSamples; ++i) {
        double t = t1 + (t2 - t1) * i / kSamples;
        if (t <= 0) continue;
        sup = std::max(sup, std::abs(g.f(t)));
    }
    double m_i = (1 + g.derivative_sign_changes) * sup;
    double scale = sigma_minus(delta, primed ? b : a * b) * std::pow(t2, delta) * m_i;

    WeightedSumReport r;
    r.sum = sum;
    r.integral = integral;
    r.main_term = main_term;
    r.residual = sum - main_term;
    r.error_scale = scale;
    r.normalized = scale > 0 ? std::abs(r.residual) / scale : 0.0;
    return r;
}

// ---------------------------------------------------------------------------
// theta-functions
// ---------------------------------------------------------------------------

Rat theta1(const Eta5& eta, i64 eta6) {
    auto [e1, e2, e3, e4, e5] = eta;
    Rat v = phi_star_primes(union_primes({e1, e2, e3, e4, e5}));
    v *= phi_star(gcd64(e1, e4)) / phi_star(e4);
    v *= phi_star(gcd64(e3, e5)) / phi_star(e5);
    for (i64 p : prime_divisors(e3))
        if (e2 % p != 0 && e5 % p != 0 && eta6 % p != 0) v *= Rat(p - 2, p - 1);
    return v;
}

Rat theta(const Eta7& etap) {
    Eta5 eta{etap[0], etap[1], etap[2], etap[3], etap[4]};
    i64 e6 = etap[5], e7 = etap[6];
    Rat v = theta1(eta, e6);
    for (i64 p : prime_divisors(eta[0]))
        if (eta[1] % p != 0 && eta[3] % p != 0 && e7 % p != 0) v *= Rat(p - 2, p - 1);
    return v;
}

Rat theta_mobius_sum(const Eta7& etap) {
    auto [e1, e2, e3, e4, e5, e6, e7] = etap;
    Rat total(0);
    for (i64 k1 : squarefree_divisors(e3)) {
        if (gcd64(k1, e1) != 1 || gcd64(k1, e2) != 1 || gcd64(k1, e4) != 1 || gcd64(k1, e6) != 1)
            continue;
        Rat w1 = Rat(mobius(k1), k1);
        for (i64 k4 : squarefree_divisors(e1)) {
            if (gcd64(k4, e2) != 1 || gcd64(k4, e3) != 1 || gcd64(k4, e5) != 1 ||
                gcd64(k4, e7) != 1)
                continue;
            Rat w4 = Rat(mobius(k4), k4);
            Rat inner(0);
            // k2 runs over squarefree divisors of e1*e2*e3; enumerate via the
            // union of their primes so the product itself is never formed.
            auto ps = union_primes({e1, e2, e3});
            size_t m = ps.size();
            for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
                i64 k2 = 1;
                int mu = 1;
                bool ok = true;
                for (size_t i = 0; i < m; ++i) {
                    if (!(mask & (size_t(1) << i))) continue;
                    i64 p = ps[i];
                    if (k1 % p == 0 || k4 % p == 0 || e4 % p == 0 || e5 % p == 0) {
                        ok = false;
                        break;
                    }
                    k2 *= p;
                    mu = -mu;
                }
                if (ok) inner += Rat(mu, k2);
            }
            total += w1 * w4 * inner;
        }
    }
    return total;
}

Rat theta1_prime(const Eta5& eta) {
    auto [e1, e2, e3, e4, e5] = eta;
    Rat v = phi_star_primes(union_primes({e1, e2, e3, e4, e5}));
    v *= phi_star_primes(union_primes({e2, e3, e4, e5}));
    v *= phi_star_primes(union_primes({e1, e2})) / phi_star_primes(union_primes({e2, e4}));
    v *= phi_star(gcd64(e3, e5)) / phi_star(e5);
    return v;
}

Rat theta2_prime(const Eta5& eta, i64 eta6) {
    auto [e1, e2, e3, e4, e5] = eta;
    Rat v = phi_star(eta6) / phi_star(gcd64(eta6, e3));
    for (i64 p : prime_divisors(e3))
        if (e2 % p != 0 && e5 % p != 0 && eta6 % p != 0) v *= Rat(p - 2, p - 1);
    return v;
}

Rat Theta(const Eta5& eta) {
    auto [e1, e2, e3, e4, e5] = eta;
    if (gcd64(e1, e3) != 1 || gcd64(e1, e5) != 1 || gcd64(e4, e3) != 1 || gcd64(e4, e5) != 1)
        return Rat(0);
    if (gcd64(e2, e4) != 1 || gcd64(e2, e5) != 1) return Rat(0);
    auto all = union_primes({e1, e2, e3, e4, e5});
    Rat v = phi_star_primes(all) / phi_dag_primes(all);
    v *= phi_star_primes(union_primes({e2, e3, e4, e5}));
    v *= phi_star_primes(union_primes({e1, e2, e4, e5}));
    v *= phi_star_primes(union_primes({e1, e2})) / phi_star_primes(union_primes({e2, e4}));
    v *= phi_star_primes(union_primes({e2, e3})) / phi_star_primes(union_primes({e2, e5}));
    return v;
}

Rat mobius_phi_sum(i64 a, i64 b, i64 c) {
    require_positive(a, "mobius_phi_sum");
    require_positive(b, "mobius_phi_sum");
    require_positive(c, "mobius_phi_sum");
    Rat total(0);
    for (i64 k : squarefree_divisors(a)) {
        if (gcd64(k, c) != 1) continue;
        total += Rat(mobius(k), k) / phi_star_primes(union_primes({k, b}));
    }
    return total;
}

Rat mobius_phi_sum_closed(i64 a, i64 b, i64 c) {
    Rat v = phi_star(gcd64(a, b)) / (phi_star(b) * phi_star(gcd64(gcd64(a, b), c)));
    for (i64 p : prime_divisors(a))
        if (b % p != 0 && c % p != 0) v *= Rat(p - 2, p - 1);
    return v;
}

bool in_parity_set(i64 e1, i64 e2, i64 e4) {
    return e1 % 2 != 0 || e2 % 2 == 0 || e4 % 2 == 0;
}

}  // namespace a3dp
