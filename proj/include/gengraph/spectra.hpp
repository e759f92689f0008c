// Closed-form spectral results: the circulant quotient of the reflection
// block, Ramanujan-sum eigenvalues, full adjacency and Laplacian spectra,
// energies, the rank/scaling relation between n and its radical, and the
// Kronecker relabeling of the quotient.
#pragma once

#include <string>
#include <vector>

#include "gengraph/exactlinalg.hpp"
#include "gengraph/types.hpp"

namespace gengraph::spectra {

// Exact algebraic number (a + b*sqrt(D)) / 2 with D square-free, D = 0 and
// b = 0 for integers. Equality is structural on the canonical form.
struct ExactEigenvalue {
    Int a = 0;
    Int b = 0;
    Int D = 0;

    static ExactEigenvalue integer(Int m) { return {2 * m, 0, 0}; }
    // (a + b*sqrt(rad)) / 2 with rad not necessarily square-free
    static ExactEigenvalue surd(Int a, Int b, Int rad);

    bool is_integer() const { return D == 0; }
    Int integer_value() const { return a / 2; }

    friend bool operator==(const ExactEigenvalue&, const ExactEigenvalue&) = default;
};

// -1 / 0 / +1 by exact numeric comparison.
int compare(const ExactEigenvalue& x, const ExactEigenvalue& y);
int sign_of(const ExactEigenvalue& x);
std::string to_string(const ExactEigenvalue& x);

struct SpectrumMultiset {
    std::vector<std::pair<ExactEigenvalue, Int>> entries;  // ascending, merged
    Int dimension = 0;

    Int multiplicity_of(const ExactEigenvalue& v) const;
    friend bool operator==(const SpectrumMultiset&, const SpectrumMultiset&) = default;
};

// Merges duplicates, drops zero multiplicities, sorts ascending.
SpectrumMultiset make_spectrum(std::vector<std::pair<ExactEigenvalue, Int>> raw);

struct EquitablePartition {
    Int n = 0;
    Int n0 = 0;
    Int cell_size = 0;                    // n / n0
    std::vector<std::vector<Int>> cells;  // vertex indices of [s r^i], i = 0..n0-1
};

struct KroneckerFactorization {
    Int scalar = 1;                    // n / n0
    std::vector<Int> permutation;      // cell order after the relabeling steps
    std::vector<Int> factor_orders;    // p_1, p_k, p_{k-1}, ..., p_2
};

// n0 x n0 circulant, first row n/n0 at the unit residues of n0.
IntMatrix quotient_matrix(Int n);

EquitablePartition equitable_partition(Int n);

// Eigenvalues (n/n0) c_{n0}(j) of the quotient, as a merged multiset.
SpectrumMultiset quotient_spectrum_closed(Int n);

SpectrumMultiset adjacency_spectrum_closed(Int n);  // dimension 2n
SpectrumMultiset laplacian_spectrum_closed(Int n);  // dimension 2n

// AE(n) = integer_part + sqrt(radicand), exact.
struct EnergyValue {
    Int integer_part = 0;
    Int radicand = 0;

    friend bool operator==(const EnergyValue&, const EnergyValue&) = default;
};
EnergyValue adjacency_energy(Int n);
Int laplacian_energy(Int n);

// Sum of |eigenvalue| * multiplicity, doubled to stay integral:
// 2 * energy = plain + coeff * sqrt(D).
struct TwiceEnergy {
    BigInt plain = 0;
    BigInt coeff = 0;
    Int D = 0;
};
TwiceEnergy twice_energy_of(const SpectrumMultiset& s);
bool energy_matches(const EnergyValue& closed, const TwiceEnergy& twice);

// True when the two join eigenvalues are integers (radicand a square).
bool integrality_check(Int n);

KroneckerFactorization kronecker_relabel(Int n);
// scalar * (J-I)_{o_1} (x) ... (x) (J-I)_{o_t}
IntMatrix kronecker_matrix(const KroneckerFactorization& f);
// Product-rule spectrum of the factorization.
SpectrumMultiset kronecker_spectrum(const KroneckerFactorization& f);

struct RankScalingReport {
    Int n = 0;
    Int n0 = 0;
    Int rank_n = 0;
    Int rank_n0 = 0;
    bool ranks_ok = false;    // rank A(n) == rank A(n0) == n0 + 1
    bool scaling_ok = false;  // quotient spectrum of n == (n/n0) * that of n0
};
RankScalingReport rank_scaling_check(Int n);

// Monic polynomial with exactly the given roots (conjugate surd pairs are
// combined into integer quadratic factors).
exactlinalg::BigPolynomial spectrum_to_char_poly(const SpectrumMultiset& s);

std::string spectrum_to_json(Int n, const std::string& matrix, const SpectrumMultiset& s,
                             bool verified);

}  // namespace gengraph::spectra
