#include "gengraph/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gengraph::numtheory {

Factorization factorize(Int n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    f.n = n;
    Int m = n;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

Int euler_phi(Int n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be >= 1");
    Int phi = n;
    for (const auto& [p, e] : factorize(n).factors) phi = phi / p * (p - 1);
    return phi;
}

int mobius(Int n) {
    if (n <= 0) throw std::invalid_argument("mobius: n must be >= 1");
    const auto f = factorize(n);
    for (const auto& [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

RadicalPair radical(Int n) {
    if (n <= 0) throw std::invalid_argument("radical: n must be >= 1");
    Int n0 = 1;
    for (const auto& [p, e] : factorize(n).factors) n0 *= p;
    return {n, n0};
}

std::vector<Int> divisors(Int n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<Int> ds{1};
    for (const auto& [p, e] : factorize(n).factors) {
        const std::size_t base = ds.size();
        Int pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Int ramanujan_sum(Int q, Int j) {
    if (q <= 0) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
    if (j < 0) throw std::invalid_argument("ramanujan_sum: j must be >= 0");
    const Int d = q / std::gcd(q, j % q);
    return mobius(d) * (euler_phi(q) / euler_phi(d));
}

Int least_prime_factor(Int n) {
    if (n <= 1) throw std::invalid_argument("least_prime_factor: n must be >= 2");
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return p;
    return n;
}

bool is_prime(Int n) { return n >= 2 && least_prime_factor(n) == n; }

bool is_power_of_two(Int n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace gengraph::numtheory
