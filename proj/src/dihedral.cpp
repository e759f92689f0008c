#include "gengraph/dihedral.hpp"

#include <numeric>
#include <stdexcept>

#include "gengraph/numtheory.hpp"

namespace gengraph::dihedral {

namespace {

Int reduce_mod(Int i, Int n) {
    Int r = i % n;
    return r < 0 ? r + n : r;
}

void require_n2(Int n, const char* op) {
    if (n < 2) throw std::invalid_argument(std::string(op) + ": n must be >= 2");
}

}  // namespace

DihedralElement rotation(Int i, Int n) {
    if (n < 1) throw std::invalid_argument("rotation: n must be >= 1");
    return {Kind::Rotation, reduce_mod(i, n), n};
}

DihedralElement reflection(Int i, Int n) {
    if (n < 1) throw std::invalid_argument("reflection: n must be >= 1");
    return {Kind::Reflection, reduce_mod(i, n), n};
}

DihedralElement identity(Int n) { return rotation(0, n); }

std::string to_string(const DihedralElement& x) {
    if (x.kind == Kind::Rotation)
        return x.exponent == 0 ? "1" : "r^" + std::to_string(x.exponent);
    return x.exponent == 0 ? "s" : "s*r^" + std::to_string(x.exponent);
}

// r^i r^j = r^{i+j};  r^i (s r^j) = s r^{j-i};  (s r^i) r^j = s r^{i+j};
// (s r^i)(s r^j) = r^{j-i}.
DihedralElement multiply(const DihedralElement& x, const DihedralElement& y) {
    if (x.modulus != y.modulus)
        throw std::invalid_argument("multiply: mismatched moduli");
    const Int n = x.modulus;
    if (x.kind == Kind::Rotation && y.kind == Kind::Rotation)
        return rotation(x.exponent + y.exponent, n);
    if (x.kind == Kind::Rotation && y.kind == Kind::Reflection)
        return reflection(y.exponent - x.exponent, n);
    if (x.kind == Kind::Reflection && y.kind == Kind::Rotation)
        return reflection(x.exponent + y.exponent, n);
    return rotation(y.exponent - x.exponent, n);
}

std::vector<DihedralElement> all_elements(Int n) {
    std::vector<DihedralElement> out;
    out.reserve(2 * n);
    for (Int i = 0; i < n; ++i) out.push_back(rotation(i, n));
    for (Int i = 0; i < n; ++i) out.push_back(reflection(i, n));
    return out;
}

OmegaPartition omega_partition(Int n) {
    require_n2(n, "omega_partition");
    OmegaPartition p;
    for (Int i = 0; i < n; ++i) {
        if (std::gcd(n, i) == 1)
            p.omega1.push_back(rotation(i, n));
        else
            p.omega3.push_back(rotation(i, n));
        p.omega2.push_back(reflection(i, n));
    }
    return p;
}

std::vector<DihedralElement> b_set(Int n, Int i) {
    require_n2(n, "b_set");
    if (i < 0 || i >= n) throw std::invalid_argument("b_set: i out of range [0, n)");
    std::vector<DihedralElement> out;
    for (Int j = 0; j < n; ++j)
        if (std::gcd(reduce_mod(j - i, n), n) == 1) out.push_back(reflection(j, n));
    return out;
}

std::vector<DihedralElement> subgroup_closure(const std::vector<DihedralElement>& gens, Int n) {
    if (n < 1) throw std::invalid_argument("subgroup_closure: n must be >= 1");
    for (const auto& g : gens)
        if (g.modulus != n)
            throw std::invalid_argument("subgroup_closure: generator modulus mismatch");

    // index = exponent for rotations, n + exponent for reflections
    auto index_of = [n](const DihedralElement& x) {
        return (x.kind == Kind::Rotation ? 0 : n) + x.exponent;
    };
    std::vector<char> seen(2 * n, 0);
    std::vector<DihedralElement> members;
    std::vector<DihedralElement> work;
    auto push = [&](const DihedralElement& x) {
        if (!seen[index_of(x)]) {
            seen[index_of(x)] = 1;
            members.push_back(x);
            work.push_back(x);
        }
    };
    push(identity(n));
    for (const auto& g : gens) push(g);
    while (!work.empty()) {
        const DihedralElement x = work.back();
        work.pop_back();
        // closing under products with current members covers inverses too,
        // since every element of a finite group has finite order
        for (std::size_t i = 0; i < members.size(); ++i) {
            push(multiply(x, members[i]));
            push(multiply(members[i], x));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool generates_pair(const DihedralElement& x, const DihedralElement& y, Int n) {
    return static_cast<Int>(subgroup_closure({x, y}, n).size()) == 2 * n;
}

std::set<ElementPair> enumerate_gen(Int n) {
    require_n2(n, "enumerate_gen");
    const auto om = omega_partition(n);
    std::set<ElementPair> gen;
    for (const auto& x : om.omega1)
        for (const auto& y : om.omega2) {
            gen.insert({x, y});
            gen.insert({y, x});
        }
    for (Int i = 0; i < n; ++i) {
        const auto sri = reflection(i, n);
        for (const auto& y : b_set(n, i)) gen.insert({sri, y});
    }
    return gen;
}

std::set<ElementPair> enumerate_gen_brute(Int n) {
    require_n2(n, "enumerate_gen_brute");
    const auto elems = all_elements(n);
    std::set<ElementPair> gen;
    for (const auto& x : elems)
        for (const auto& y : elems)
            if (generates_pair(x, y, n)) gen.insert({x, y});
    return gen;
}

BigRational generation_probability(Int n) {
    require_n2(n, "generation_probability");
    const Int size = 3 * n * numtheory::euler_phi(n);
    BigRational p(size, 4 * n * n);
    p.canonicalize();
    return p;
}

}  // namespace gengraph::dihedral
