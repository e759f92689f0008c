// Exact arithmetic in the dihedral group D_n = <r, s | r^n = s^2 = 1,
// s r = r^-1 s>, the generating-pair oracle <x,y> = D_n, and the
// Omega_1 / Omega_2 / Omega_3 split of the elements.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "gengraph/types.hpp"

namespace gengraph::dihedral {

enum class Kind { Rotation, Reflection };

// r^exponent or s*r^exponent, exponent always reduced into [0, n).
struct DihedralElement {
    Kind kind = Kind::Rotation;
    Int exponent = 0;
    Int modulus = 1;

    friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
    // Rotations before reflections, then by exponent; the canonical order
    // used everywhere sets must be iterated deterministically.
    friend auto operator<=>(const DihedralElement& a, const DihedralElement& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.exponent <=> b.exponent;
    }
};

DihedralElement rotation(Int i, Int n);
DihedralElement reflection(Int i, Int n);
DihedralElement identity(Int n);

// "1", "r^i", "s", "s*r^i"
std::string to_string(const DihedralElement& x);

DihedralElement multiply(const DihedralElement& x, const DihedralElement& y);

// All 2n elements in canonical order (rotations ascending, then reflections).
std::vector<DihedralElement> all_elements(Int n);

struct OmegaPartition {
    std::vector<DihedralElement> omega1;  // r^i with gcd(i, n) = 1
    std::vector<DihedralElement> omega2;  // all n reflections
    std::vector<DihedralElement> omega3;  // remaining rotations
};

OmegaPartition omega_partition(Int n);

// B_i = { s r^j : gcd(j - i, n) = 1 }, the reflections adjacent to s r^i.
std::vector<DihedralElement> b_set(Int n, Int i);

// Smallest subset containing gens and the identity, closed under multiply.
std::vector<DihedralElement> subgroup_closure(const std::vector<DihedralElement>& gens, Int n);

bool generates_pair(const DihedralElement& x, const DihedralElement& y, Int n);

using ElementPair = std::pair<DihedralElement, DihedralElement>;

// Gen(n) by the closed-form decomposition
// (Omega1 x Omega2) u (Omega2 x Omega1) u union_i {s r^i} x B_i.
std::set<ElementPair> enumerate_gen(Int n);

// Gen(n) by brute-force closure over all (2n)^2 ordered pairs; the ground
// truth the closed form is checked against.
std::set<ElementPair> enumerate_gen_brute(Int n);

// |Gen(n)| / (2n)^2, reduced.
BigRational generation_probability(Int n);

}  // namespace gengraph::dihedral
