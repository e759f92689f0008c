// Exact integer linear algebra used as the verification oracle:
// characteristic polynomials with bit-exact arbitrary-precision
// coefficients, factor-multiplicity tests by exact polynomial division,
// and ranks over Q by fraction-free (Bareiss) elimination.
#pragma once

#include <vector>

#include "gengraph/types.hpp"

namespace gengraph::exactlinalg {

// Integer-coefficient polynomial, coefficients ascending by degree.
// The zero polynomial is an empty coefficient vector.
struct BigPolynomial {
    std::vector<BigInt> c;

    static BigPolynomial one() { return {{BigInt(1)}}; }
    Eigen::Index degree() const { return static_cast<Eigen::Index>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();

    friend bool operator==(const BigPolynomial&, const BigPolynomial&) = default;
};

BigPolynomial poly_mul(const BigPolynomial& a, const BigPolynomial& b);
BigInt poly_eval(const BigPolynomial& p, const BigInt& x);

// Quotient and remainder of p by a *monic* divisor, exact over Z.
struct DivisionResult {
    BigPolynomial quotient;
    BigPolynomial remainder;
};
DivisionResult poly_divmod_monic(const BigPolynomial& p, const BigPolynomial& monic);

// det(tI - m), monic, exact. Computed modulo a set of 62-bit primes whose
// product provably exceeds twice the Hadamard bound on any coefficient,
// then reconstructed by CRT; the result is exact, not probabilistic.
BigPolynomial char_poly(const IntMatrix& m, Eigen::Index order_cap = 500);

// Largest k with (t - lambda)^k dividing p.
int root_multiplicity(const BigPolynomial& p, const BigRational& lambda);
int root_multiplicity(const BigPolynomial& p, const BigInt& lambda);

// Largest k with q^k dividing p, q monic of degree 2.
int quadratic_factor_multiplicity(const BigPolynomial& p, const BigPolynomial& q);

// Rank over Q, fraction-free elimination with full pivoting.
Eigen::Index rank_exact(const IntMatrix& m, Eigen::Index order_cap = 500);

}  // namespace gengraph::exactlinalg
