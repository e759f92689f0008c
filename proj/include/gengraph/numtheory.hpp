// Elementary number theory: factorization, totient, Moebius, radical,
// divisors, Ramanujan sums. Everything is exact integer arithmetic; inputs
// are desk scale (n up to ~10^6), so deterministic trial division is enough.
#pragma once

#include <utility>
#include <vector>

#include "gengraph/types.hpp"

namespace gengraph::numtheory {

struct Factorization {
    Int n = 1;
    // (prime, exponent) with strictly increasing primes, exponents >= 1.
    std::vector<std::pair<Int, int>> factors;

    int distinct_primes() const { return static_cast<int>(factors.size()); }
};

struct RadicalPair {
    Int n = 1;
    Int n0 = 1;  // square-free part: product of the distinct primes of n
};

Factorization factorize(Int n);
Int euler_phi(Int n);
int mobius(Int n);
RadicalPair radical(Int n);
std::vector<Int> divisors(Int n);

// c_q(j), the sum of j-th powers of the primitive q-th roots of unity,
// computed by the Moebius closed form mu(d) * phi(q) / phi(d) with
// d = q / gcd(q, j). Periodic in j with period q; j >= q is reduced mod q.
Int ramanujan_sum(Int q, Int j);

Int least_prime_factor(Int n);
bool is_prime(Int n);
bool is_power_of_two(Int n);

}  // namespace gengraph::numtheory
