#include "a3dp/polytope.hpp"

#include <omp.h>
#include <cmath>
#include <stdexcept>

namespace a3dp {

void Poly3::add_term(const Key& k, const Rat& c) {
    auto it = coef_.find(k);
    if (it == coef_.end()) {
        if (c != 0) coef_[k] = c;
    } else {
        it->second += c;
        if (it->second == 0) coef_.erase(it);
    }
}

Poly3 Poly3::operator+(const Poly3& o) const {
    Poly3 r = *this;
    for (auto& [k, c] : o.coef_) r.add_term(k, c);
    return r;
}

Poly3 Poly3::operator-(const Poly3& o) const {
    Poly3 r = *this;
    for (auto& [k, c] : o.coef_) r.add_term(k, -c);
    return r;
}

Poly3 Poly3::operator*(const Poly3& o) const {
    Poly3 r;
    for (auto& [ka, ca] : coef_)
        for (auto& [kb, cb] : o.coef_)
            r.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
    return r;
}

bool Poly3::depends_on(int i) const {
    for (auto& [k, c] : coef_)
        if (k[i] != 0) return true;
    return false;
}

Rat Poly3::constant() const {
    for (auto& [k, c] : coef_)
        if (k != Key{0, 0, 0}) throw std::logic_error("Poly3::constant: not constant");
    auto it = coef_.find({0, 0, 0});
    return it == coef_.end() ? Rat(0) : it->second;
}

Poly3 Poly3::substitute(int i, const Poly3& s) const {
    Poly3 r;
    for (auto& [k, c] : coef_) {
        Key rest = k;
        rest[i] = 0;
        Poly3 term;
        term.add_term(rest, c);
        for (int e = 0; e < k[i]; ++e) term = term * s;
        r = r + term;
    }
    return r;
}

Poly3 Poly3::integrate(int i, const Poly3& lower, const Poly3& upper) const {
    if (lower.depends_on(i) || upper.depends_on(i))
        throw std::invalid_argument("Poly3::integrate: limits involve the variable");
    // Antiderivative in variable i, then evaluate at the limits.
    Poly3 anti;
    for (auto& [k, c] : coef_) {
        Key k2 = k;
        k2[i] += 1;
        anti.add_term(k2, c / (k[i] + 1));
    }
    return anti.substitute(i, upper) - anti.substitute(i, lower);
}

Rat polytope_alpha() {
    // Variables: 0 = t1, 1 = t2, 2 = t3.
    const Poly3 t1 = Poly3::var(0), t2 = Poly3::var(1), t3 = Poly3::var(2);
    const Poly3 one(Rat(1));

    // After integrating out t4 and t5:
    //   vol = (1/4) * Int (d1 - t3)(d2 - 3 t3) dt3 dt2 dt1,
    //   d1 = 1 - 3 t1 - 2 t2, d2 = 1 - t1 - 2 t2,
    // over 0 <= t3 <= min(d1, d2/3), t1, t2 >= 0, d1 >= 0.
    const Poly3 d1 = one - Poly3(Rat(3)) * t1 - Poly3(Rat(2)) * t2;
    const Poly3 d2 = one - t1 - Poly3(Rat(2)) * t2;
    const Poly3 integrand = (d1 - t3) * (d2 - Poly3(Rat(3)) * t3);

    const Poly3 zero(Rat(0));
    // min(d1, d2/3) = d1 iff t2 >= 1/2 - 2 t1 (region A), else d2/3 (region B).
    const Poly3 ia = integrand.integrate(2, zero, d1);
    const Poly3 ib = integrand.integrate(2, zero, d2 * Poly3(Rat(1, 3)));

    const Poly3 split = Poly3(Rat(1, 2)) - Poly3(Rat(2)) * t1;   // t2 = 1/2 - 2 t1
    const Poly3 top = (one - Poly3(Rat(3)) * t1) * Poly3(Rat(1, 2));  // d1 = 0

    // t1 in [0, 1/4]: B on t2 in [0, split], A on [split, top];
    // t1 in [1/4, 1/3]: A on [0, top].
    const Poly3 part1 = ib.integrate(1, zero, split) + ia.integrate(1, split, top);
    const Poly3 part2 = ia.integrate(1, zero, top);

    Rat vol = part1.integrate(0, zero, Poly3(Rat(1, 4))).constant() +
              part2.integrate(0, Poly3(Rat(1, 4)), Poly3(Rat(1, 3))).constant();
    return vol / 4;
}

McResult polytope_alpha_mc(i64 samples, u64 seed) {
    if (samples < 1) throw std::invalid_argument("polytope_alpha_mc: samples must be >= 1");
    const CounterRng rng{seed};
    const double box = (1.0 / 3) * 0.5 * (1.0 / 3) * 0.5 * 0.5;
    i64 hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (i64 i = 0; i < samples; ++i) {
        u64 base = 5 * static_cast<u64>(i);
        double t1 = rng.uniform(base) / 3;
        double t2 = rng.uniform(base + 1) / 2;
        double t3 = rng.uniform(base + 2) / 3;
        double t4 = rng.uniform(base + 3) / 2;
        double t5 = rng.uniform(base + 4) / 2;
        if (t1 + 2 * t2 + 3 * t3 + 2 * t5 <= 1 && 3 * t1 + 2 * t2 + t3 + 2 * t4 <= 1) ++hits;
    }
    double q = static_cast<double>(hits) / samples;
    McResult r;
    r.value = q * box;
    r.std_error = std::sqrt(q * (1 - q) / samples) * box;
    r.samples = samples;
    r.seed = seed;
    return r;
}

}  // namespace a3dp
