#include <doctest.h>

#include <random>

#include "gengraph/exactlinalg.hpp"
#include "gengraph/graph.hpp"

using namespace gengraph;
using namespace gengraph::exactlinalg;

namespace {

// independent reference: char poly by cofactor expansion over a symbolic
// dense polynomial matrix is overkill; instead expand det(tI - M) from the
// definition via permutations, exact in mpz. Usable up to order ~8.
BigPolynomial char_poly_by_permanent_expansion(const IntMatrix& m) {
    const Eigen::Index order = m.rows();
    std::vector<Eigen::Index> perm(order);
    for (Eigen::Index i = 0; i < order; ++i) perm[i] = i;
    BigPolynomial acc;  // zero
    acc.c.clear();
    do {
        // sign of the permutation
        int sign = 1;
        std::vector<bool> seen(order, false);
        for (Eigen::Index i = 0; i < order; ++i) {
            if (seen[i]) continue;
            Eigen::Index j = i, len = 0;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        // product over i of (tI - M)[i][perm[i]]: entry is (t - m_ii) on the
        // diagonal and -m_ij elsewhere
        BigPolynomial term;
        term.c = {BigInt(sign)};
        for (Eigen::Index i = 0; i < order; ++i) {
            BigPolynomial factor;
            if (perm[i] == i)
                factor.c = {BigInt(-m(i, i)), BigInt(1)};
            else
                factor.c = {BigInt(-m(i, perm[i]))};
            term = poly_mul(term, factor);
        }
        if (acc.c.size() < term.c.size()) acc.c.resize(term.c.size(), BigInt(0));
        for (std::size_t i = 0; i < term.c.size(); ++i) acc.c[i] += term.c[i];
    } while (std::next_permutation(perm.begin(), perm.end()));
    acc.trim();
    return acc;
}

BigPolynomial from_ints(std::vector<long> coeffs) {
    BigPolynomial p;
    for (long c : coeffs) p.c.emplace_back(c);
    p.trim();
    return p;
}

}  // namespace

TEST_CASE("char poly golden cases") {
    // (J-I) of order 3: t^3 - 3t - 2 = (t-2)(t+1)^2
    IntMatrix ji = IntMatrix::Ones(3, 3) - IntMatrix::Identity(3, 3);
    CHECK(char_poly(ji) == from_ints({-2, -3, 0, 1}));
    // zero matrix of order 4: t^4
    CHECK(char_poly(IntMatrix::Zero(4, 4)) == from_ints({0, 0, 0, 0, 1}));
    // A(4): t^5 (t-4) (t+2)^2, checked against the permutation-expansion reference
    const IntMatrix a4 = graph::adjacency_matrix(graph::build_gamma(4));
    const BigPolynomial p = char_poly(a4);
    CHECK(p == char_poly_by_permanent_expansion(a4));
    BigPolynomial expect = from_ints({0, 0, 0, 0, 0, 1});  // t^5
    expect = poly_mul(expect, from_ints({-4, 1}));
    expect = poly_mul(expect, poly_mul(from_ints({2, 1}), from_ints({2, 1})));
    CHECK(p == expect);
    // identity and diagonal
    CHECK(char_poly(IntMatrix::Identity(2, 2)) == from_ints({1, -2, 1}));
    IntMatrix diag = IntMatrix::Zero(3, 3);
    diag(0, 0) = 5;
    diag(1, 1) = -7;
    diag(2, 2) = 0;
    CHECK(char_poly(diag) ==
          poly_mul(from_ints({-5, 1}), poly_mul(from_ints({7, 1}), from_ints({0, 1}))));
    // degenerate orders
    CHECK(char_poly(IntMatrix(0, 0)) == BigPolynomial::one());
    IntMatrix one(1, 1);
    one(0, 0) = -3;
    CHECK(char_poly(one) == from_ints({3, 1}));
    CHECK_THROWS_AS(char_poly(IntMatrix::Zero(4, 4), 3), std::invalid_argument);
    CHECK_THROWS_AS(char_poly(IntMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("char poly on random small matrices matches the expansion reference") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index order = 1 + trial % 7;
        IntMatrix m(order, order);
        for (Eigen::Index i = 0; i < order; ++i)
            for (Eigen::Index j = 0; j < order; ++j) m(i, j) = entry(rng);
        const auto p = char_poly(m);
        CHECK(p == char_poly_by_permanent_expansion(m));
        REQUIRE(p.degree() == order);
        CHECK(p.c.back() == 1);
        // coefficient of t^{order-1} is -trace
        BigInt tr = 0;
        for (Eigen::Index i = 0; i < order; ++i) tr += m(i, i);
        CHECK(p.c[order - 1] == -tr);
    }
}

TEST_CASE("root multiplicity by synthetic division") {
    const auto p = from_ints({-2, -3, 0, 1});  // (t-2)(t+1)^2
    CHECK(root_multiplicity(p, BigInt(-1)) == 2);
    CHECK(root_multiplicity(p, BigInt(2)) == 1);
    CHECK(root_multiplicity(from_ints({0, 0, 0, 0, 1}), BigInt(5)) == 0);
    CHECK(root_multiplicity(from_ints({0, 0, 0, 0, 1}), BigInt(0)) == 4);
    CHECK_THROWS_AS(root_multiplicity(BigPolynomial{}, BigInt(0)), std::invalid_argument);
    // rational root: (2t-1)^2 (t-3) = 4t^3 - 16t^2 + 13t - 3
    const auto q = from_ints({-3, 13, -16, 4});
    CHECK(root_multiplicity(q, BigRational(1, 2)) == 2);
    CHECK(root_multiplicity(q, BigRational(3)) == 1);
    CHECK(root_multiplicity(q, BigRational(1, 3)) == 0);
}

TEST_CASE("quadratic factor multiplicity") {
    const IntMatrix a3 = graph::adjacency_matrix(graph::build_gamma(3));
    const auto p = char_poly(a3);  // t^2 (t+1)^2 (t^2 - 2t - 6)
    CHECK(quadratic_factor_multiplicity(p, from_ints({-6, -2, 1})) == 1);
    CHECK(quadratic_factor_multiplicity(from_ints({0, 0, 0, 0, 1}), from_ints({1, 0, 1})) == 0);
    const auto sq = poly_mul(from_ints({-6, -2, 1}), from_ints({-6, -2, 1}));
    CHECK(quadratic_factor_multiplicity(sq, from_ints({-6, -2, 1})) == 2);
    CHECK_THROWS_AS(quadratic_factor_multiplicity(p, from_ints({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_factor_multiplicity(p, from_ints({1, 1, 2})), std::invalid_argument);
}

TEST_CASE("poly division by a monic divisor") {
    const auto p = poly_mul(from_ints({1, 2, 1}), from_ints({-5, 3, 1}));
    auto [q, r] = poly_divmod_monic(p, from_ints({-5, 3, 1}));
    CHECK(q == from_ints({1, 2, 1}));
    CHECK(r.is_zero());
    auto [q2, r2] = poly_divmod_monic(from_ints({1, 1}), from_ints({0, 0, 1}));
    CHECK(q2.is_zero());
    CHECK(r2 == from_ints({1, 1}));
}

TEST_CASE("rank by fraction-free elimination") {
    CHECK(rank_exact(graph::adjacency_matrix(graph::build_gamma(4))) == 3);
    CHECK(rank_exact(graph::adjacency_matrix(graph::build_gamma(45))) == 16);
    CHECK(rank_exact(IntMatrix::Zero(5, 5)) == 0);
    CHECK(rank_exact(IntMatrix::Identity(6, 6)) == 6);
    IntMatrix m(3, 3);
    m << 1, 2, 3, 2, 4, 6, 1, 1, 1;  // row 2 = 2 * row 1
    CHECK(rank_exact(m) == 2);
    // rank equals order minus multiplicity of the zero root, symmetric case
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index order = 2 + trial % 6;
        IntMatrix s(order, order);
        for (Eigen::Index i = 0; i < order; ++i)
            for (Eigen::Index j = i; j < order; ++j) s(i, j) = s(j, i) = entry(rng);
        const auto p = char_poly(s);
        CHECK(rank_exact(s) == order - root_multiplicity(p, BigInt(0)));
    }
}
