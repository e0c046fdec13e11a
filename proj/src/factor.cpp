#include "a3dp/factor.hpp"

#include <algorithm>
#include <mutex>

namespace a3dp {

namespace {

std::vector<i64> build_primes(i64 limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<i64> primes;
    for (i64 p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (i64 q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return primes;
}

}  // namespace

const std::vector<i64>& small_primes() {
    static const std::vector<i64> primes = build_primes(1'000'000);
    return primes;
}

FactoredInteger factorize(i64 n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    FactoredInteger f;
    f.value = n;
    for (i64 p : small_primes()) {
        if (p * p > n) break;
        if (n % p) continue;
        int e = 0;
        do { n /= p; ++e; } while (n % p == 0);
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);  // n is prime here (n <= 10^12)
    return f;
}

std::vector<i64> prime_divisors(i64 n) {
    std::vector<i64> ps;
    for (auto& [p, e] : factorize(n).factors) ps.push_back(p);
    return ps;
}

i64 radical(i64 n) {
    i64 r = 1;
    for (i64 p : prime_divisors(n)) r *= p;
    return r;
}

int mobius(i64 n) {
    auto f = factorize(n);
    for (auto& [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : small_primes()) {
        if (p * p > n) return true;
        if (n % p == 0) return n == p;
    }
    return true;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> ds{1};
    for (auto& [p, e] : factorize(n).factors) {
        size_t m = ds.size();
        i64 q = 1;
        for (int i = 0; i < e; ++i) {
            q *= p;
            for (size_t j = 0; j < m; ++j) ds.push_back(ds[j] * q);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<i64> squarefree_divisors(i64 n) {
    std::vector<i64> ds{1};
    for (i64 p : prime_divisors(n)) {
        size_t m = ds.size();
        for (size_t j = 0; j < m; ++j) ds.push_back(ds[j] * p);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

double sigma_minus(double delta, i64 n) {
    if (n < 1) throw std::invalid_argument("sigma_minus: n must be positive");
    double s = 0.0;
    for (i64 d : divisors(n)) s += std::pow(static_cast<double>(d), -delta);
    return s;
}

}  // namespace a3dp
