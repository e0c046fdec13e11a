#pragma once

#include <utility>
#include <vector>

#include "a3dp/integers.hpp"

namespace a3dp {

// Primes below 10^6, built once and shared read-only; enough to factor any
// n <= 10^12 by trial division, which covers every input in scope.
const std::vector<i64>& small_primes();

struct FactoredInteger {
    i64 value = 1;
    std::vector<std::pair<i64, int>> factors;  // (prime, exponent), primes increasing
};

FactoredInteger factorize(i64 n);

// Distinct primes dividing n, increasing.
std::vector<i64> prime_divisors(i64 n);

// Product of distinct primes dividing n.
i64 radical(i64 n);

int mobius(i64 n);

bool is_prime(i64 n);

// sigma_{-delta}(n) = sum over divisors k of n of k^(-delta).
double sigma_minus(double delta, i64 n);

// All divisors of n, increasing.
std::vector<i64> divisors(i64 n);

// Squarefree divisors of n (the support of any Mobius-weighted divisor sum).
std::vector<i64> squarefree_divisors(i64 n);

}  // namespace a3dp
