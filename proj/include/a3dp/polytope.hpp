#pragma once

#include <map>

#include "a3dp/rng.hpp"

namespace a3dp {

// The polytope in R^5 given by t_i >= 0 and
//     t1 + 2 t2 + 3 t3 + 2 t5 <= 1,
//     3 t1 + 2 t2 + t3 + 2 t4 <= 1.
// Its exact 5-volume is computed by iterated exact integration: t4 and t5
// each occur in a single inequality, so they integrate to piecewise-linear
// lengths; what remains is a piecewise-polynomial integral over (t1,t2,t3)
// done in rational arithmetic.
Rat polytope_alpha();

// Monte Carlo hit-rate cross-check over the bounding box
// [0,1/3] x [0,1/2] x [0,1/3] x [0,1/2] x [0,1/2].
McResult polytope_alpha_mc(i64 samples, u64 seed);

// Exact polynomials in up to three variables over Q; just enough machinery
// for the iterated integration above.
class Poly3 {
public:
    using Key = std::array<int, 3>;

    Poly3() = default;
    explicit Poly3(const Rat& c) { if (c != 0) coef_[{0, 0, 0}] = c; }
    static Poly3 var(int i) {
        Poly3 p;
        Key k{0, 0, 0};
        k[i] = 1;
        p.coef_[k] = 1;
        return p;
    }

    Poly3 operator+(const Poly3& o) const;
    Poly3 operator-(const Poly3& o) const;
    Poly3 operator*(const Poly3& o) const;

    // Definite integral in variable i from lower to upper, both polynomials
    // not involving variable i. The result no longer involves variable i.
    Poly3 integrate(int i, const Poly3& lower, const Poly3& upper) const;

    // Substitute polynomial s for variable i.
    Poly3 substitute(int i, const Poly3& s) const;

    Rat constant() const;
    bool depends_on(int i) const;

private:
    std::map<Key, Rat> coef_;
    void add_term(const Key& k, const Rat& c);
};

}  // namespace a3dp
