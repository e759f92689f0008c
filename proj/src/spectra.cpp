#include "gengraph/spectra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gengraph/graph.hpp"
#include "gengraph/numtheory.hpp"

namespace gengraph::spectra {

namespace nt = gengraph::numtheory;

namespace {

void require_n2(Int n, const char* op) {
    if (n < 2) throw std::invalid_argument(std::string(op) + ": n must be >= 2");
}

// largest s with s^2 | m, so m = s^2 * squarefree
Int square_part(Int m) {
    Int s = 1;
    for (const auto& [p, e] : nt::factorize(m).factors) {
        for (int i = 0; i + 1 < e; i += 2) s *= p;
    }
    return s;
}

// sign of u + v * sqrt(D), exact
int sign_single_radical(const BigInt& u, const BigInt& v, Int D) {
    if (D == 0 || v == 0) return sgn(u);
    if (v > 0 && u >= 0) return 1;
    if (v < 0 && u <= 0) return -1;
    const int c = cmp(v * v * D, u * u);
    return v > 0 ? c : -c;
}

}  // namespace

ExactEigenvalue ExactEigenvalue::surd(Int a, Int b, Int rad) {
    if (rad < 0) throw std::invalid_argument("ExactEigenvalue::surd: negative radicand");
    const Int s = square_part(rad);
    Int D = rad / (s * s);
    Int bb = b * s;
    if (D <= 1 || bb == 0) {  // collapses to an integer
        const Int whole = a + bb * (D == 1 ? 1 : 0);
        if (whole % 2 != 0)
            throw std::invalid_argument("ExactEigenvalue: non-integral rational value");
        return {whole, 0, 0};
    }
    return {a, bb, D};
}

int sign_of(const ExactEigenvalue& x) { return sign_single_radical(BigInt(x.a), BigInt(x.b), x.D); }

int compare(const ExactEigenvalue& x, const ExactEigenvalue& y) {
    // sign of (x.a - y.a) + x.b sqrt(Dx) - y.b sqrt(Dy)
    const BigInt c(x.a - y.a);
    if (x.D == y.D || x.b == 0 || y.b == 0) {
        // one effective radical at most
        if (x.b == 0 && y.b != 0) return sign_single_radical(c, BigInt(-y.b), y.D);
        if (x.b != 0 && y.b == 0) return sign_single_radical(c, BigInt(x.b), x.D);
        return sign_single_radical(c, BigInt(x.b - y.b), x.D);
    }
    // t = c + x.b sqrt(Dx), u = y.b sqrt(Dy); want sign(t - u)
    const int st = sign_single_radical(c, BigInt(x.b), x.D);
    const int su = sgn(BigInt(y.b));
    if (st >= 0 && su <= 0) return (st == 0 && su == 0) ? 0 : 1;
    if (st <= 0 && su >= 0) return (st == 0 && su == 0) ? 0 : -1;
    // same strict sign: compare squares; t^2 - u^2 = (c^2 + b^2 Dx - yb^2 Dy) + 2 c b sqrt(Dx)
    const BigInt u0 = c * c + BigInt(x.b) * x.b * x.D - BigInt(y.b) * y.b * y.D;
    const BigInt v0 = 2 * c * BigInt(x.b);
    const int sq = sign_single_radical(u0, v0, x.D);
    return st > 0 ? sq : -sq;
}

std::string to_string(const ExactEigenvalue& x) {
    if (x.is_integer()) return std::to_string(x.integer_value());
    std::ostringstream out;
    out << "(" << x.a << (x.b < 0 ? " - " : " + ") << std::abs(x.b) << "*sqrt(" << x.D << "))/2";
    return out.str();
}

Int SpectrumMultiset::multiplicity_of(const ExactEigenvalue& v) const {
    for (const auto& [val, mult] : entries)
        if (val == v) return mult;
    return 0;
}

SpectrumMultiset make_spectrum(std::vector<std::pair<ExactEigenvalue, Int>> raw) {
    auto less = [](const ExactEigenvalue& x, const ExactEigenvalue& y) {
        return compare(x, y) < 0;
    };
    std::map<ExactEigenvalue, Int, decltype(less)> acc(less);
    Int dim = 0;
    for (auto& [val, mult] : raw) {
        if (mult < 0) throw std::invalid_argument("make_spectrum: negative multiplicity");
        if (mult == 0) continue;
        acc[val] += mult;
        dim += mult;
    }
    SpectrumMultiset s;
    s.dimension = dim;
    s.entries.assign(acc.begin(), acc.end());
    return s;
}

IntMatrix quotient_matrix(Int n) {
    require_n2(n, "quotient_matrix");
    const Int n0 = nt::radical(n).n0;
    const Int scale = n / n0;
    IntMatrix q = IntMatrix::Zero(n0, n0);
    for (Int r = 0; r < n0; ++r)
        for (Int c = 0; c < n0; ++c) {
            const Int diff = ((c - r) % n0 + n0) % n0;
            q(r, c) = std::gcd(diff, n0) == 1 ? scale : 0;
        }
    return q;
}

EquitablePartition equitable_partition(Int n) {
    require_n2(n, "equitable_partition");
    EquitablePartition p;
    p.n = n;
    p.n0 = nt::radical(n).n0;
    p.cell_size = n / p.n0;
    p.cells.resize(p.n0);
    for (Int i = 0; i < p.n0; ++i)
        for (Int t = 0; t < p.cell_size; ++t) p.cells[i].push_back(i + t * p.n0);
    return p;
}

SpectrumMultiset quotient_spectrum_closed(Int n) {
    require_n2(n, "quotient_spectrum_closed");
    const Int n0 = nt::radical(n).n0;
    const Int phi = nt::euler_phi(n);
    std::vector<std::pair<ExactEigenvalue, Int>> raw;
    for (Int d : nt::divisors(n0))
        raw.push_back({ExactEigenvalue::integer(nt::mobius(d) * (phi / nt::euler_phi(d))),
                       nt::euler_phi(d)});
    return make_spectrum(std::move(raw));
}

SpectrumMultiset adjacency_spectrum_closed(Int n) {
    require_n2(n, "adjacency_spectrum_closed");
    const Int n0 = nt::radical(n).n0;
    const Int phi = nt::euler_phi(n);
    std::vector<std::pair<ExactEigenvalue, Int>> raw;
    raw.push_back({ExactEigenvalue::integer(0), 2 * n - (n0 + 1)});
    for (Int d : nt::divisors(n0)) {
        if (d == 1) continue;  // the Perron value phi(n) is absorbed by the join pair
        raw.push_back({ExactEigenvalue::integer(nt::mobius(d) * (phi / nt::euler_phi(d))),
                       nt::euler_phi(d)});
    }
    const Int rad = phi * phi + 4 * n * phi;
    raw.push_back({ExactEigenvalue::surd(phi, 1, rad), 1});
    raw.push_back({ExactEigenvalue::surd(phi, -1, rad), 1});
    return make_spectrum(std::move(raw));
}

SpectrumMultiset laplacian_spectrum_closed(Int n) {
    require_n2(n, "laplacian_spectrum_closed");
    const Int n0 = nt::radical(n).n0;
    const Int phi = nt::euler_phi(n);
    std::vector<std::pair<ExactEigenvalue, Int>> raw;
    raw.push_back({ExactEigenvalue::integer(0), n - phi + 1});
    for (Int d : nt::divisors(n0)) {
        if (d == 1) continue;
        raw.push_back(
            {ExactEigenvalue::integer(2 * phi - nt::mobius(d) * (phi / nt::euler_phi(d))),
             nt::euler_phi(d)});
    }
    raw.push_back({ExactEigenvalue::integer(2 * phi), n - n0});
    raw.push_back({ExactEigenvalue::integer(n), phi - 1});
    raw.push_back({ExactEigenvalue::integer(n + phi), 1});
    return make_spectrum(std::move(raw));
}

EnergyValue adjacency_energy(Int n) {
    require_n2(n, "adjacency_energy");
    const Int phi = nt::euler_phi(n);
    const int k = nt::factorize(n).distinct_primes();
    return {phi * ((Int(1) << k) - 1), phi * phi + 4 * n * phi};
}

Int laplacian_energy(Int n) {
    require_n2(n, "laplacian_energy");
    return 3 * n * nt::euler_phi(n);
}

TwiceEnergy twice_energy_of(const SpectrumMultiset& s) {
    TwiceEnergy e;
    for (const auto& [val, mult] : s.entries) {
        const int sg = sign_of(val);
        // |val| = sg * (a + b sqrt(D)) / 2
        e.plain += BigInt(sg) * val.a * mult;
        if (val.D != 0) {
            if (e.D != 0 && val.D != e.D)
                throw std::invalid_argument("twice_energy_of: mixed radicands");
            e.D = val.D;
            e.coeff += BigInt(sg) * val.b * mult;
        }
    }
    if (e.coeff == 0) e.D = 0;
    return e;
}

bool energy_matches(const EnergyValue& closed, const TwiceEnergy& twice) {
    // closed value is integer_part + sqrt(radicand); doubled: 2*ip + 2*sqrt(rad)
    const Int s = square_part(closed.radicand);
    const Int d = closed.radicand / (s * s);
    if (d <= 1) {
        // perfect square radicand: purely integer energy
        const Int root = s * (d == 1 ? 1 : 0);
        return twice.D == 0 && twice.coeff == 0 &&
               twice.plain == 2 * BigInt(closed.integer_part) + 2 * BigInt(root);
    }
    return twice.D == d && twice.coeff == 2 * BigInt(s) &&
           twice.plain == 2 * BigInt(closed.integer_part);
}

bool integrality_check(Int n) {
    require_n2(n, "integrality_check");
    const Int phi = nt::euler_phi(n);
    const BigInt rad = BigInt(phi) * phi + BigInt(4) * n * phi;
    return mpz_perfect_square_p(rad.get_mpz_t()) != 0;
}

KroneckerFactorization kronecker_relabel(Int n) {
    require_n2(n, "kronecker_relabel");
    const auto fact = nt::factorize(n);
    const Int n0 = nt::radical(n).n0;
    KroneckerFactorization f;
    f.scalar = n / n0;
    f.factor_orders.push_back(fact.factors.front().first);  // p_1
    for (std::size_t i = fact.factors.size(); i-- > 1;)
        f.factor_orders.push_back(fact.factors[i].first);  // p_k, p_{k-1}, ..., p_2

    // order cells by residues (l mod p_1, l mod p_k, ..., l mod p_2)
    f.permutation.resize(n0);
    std::iota(f.permutation.begin(), f.permutation.end(), Int(0));
    std::stable_sort(f.permutation.begin(), f.permutation.end(), [&](Int a, Int b) {
        for (Int q : f.factor_orders) {
            const Int ra = a % q, rb = b % q;
            if (ra != rb) return ra < rb;
        }
        return false;
    });
    return f;
}

IntMatrix kronecker_matrix(const KroneckerFactorization& f) {
    IntMatrix acc(1, 1);
    acc(0, 0) = f.scalar;
    for (Int o : f.factor_orders) {
        const IntMatrix block = IntMatrix::Ones(o, o) - IntMatrix::Identity(o, o);
        IntMatrix next(acc.rows() * o, acc.cols() * o);
        for (Eigen::Index i = 0; i < acc.rows(); ++i)
            for (Eigen::Index j = 0; j < acc.cols(); ++j)
                next.block(i * o, j * o, o, o) = acc(i, j) * block;
        acc = std::move(next);
    }
    return acc;
}

SpectrumMultiset kronecker_spectrum(const KroneckerFactorization& f) {
    std::map<Int, Int> values{{f.scalar, 1}};
    for (Int o : f.factor_orders) {
        std::map<Int, Int> next;
        for (const auto& [v, m] : values) {
            next[v * (o - 1)] += m;
            next[-v] += m * (o - 1);
        }
        values = std::move(next);
    }
    std::vector<std::pair<ExactEigenvalue, Int>> raw;
    for (const auto& [v, m] : values) raw.push_back({ExactEigenvalue::integer(v), m});
    return make_spectrum(std::move(raw));
}

RankScalingReport rank_scaling_check(Int n) {
    require_n2(n, "rank_scaling_check");
    const Int n0 = nt::radical(n).n0;
    if (n == n0)
        throw std::invalid_argument("rank_scaling_check: n equals its radical (vacuous)");
    RankScalingReport rep;
    rep.n = n;
    rep.n0 = n0;
    rep.rank_n = exactlinalg::rank_exact(graph::adjacency_matrix(graph::build_gamma(n)));
    rep.rank_n0 = exactlinalg::rank_exact(graph::adjacency_matrix(graph::build_gamma(n0)));
    rep.ranks_ok = rep.rank_n == rep.rank_n0 && rep.rank_n == n0 + 1;

    const auto base = quotient_spectrum_closed(n0);
    std::vector<std::pair<ExactEigenvalue, Int>> scaled;
    for (const auto& [val, mult] : base.entries)
        scaled.push_back({ExactEigenvalue::integer(val.integer_value() * (n / n0)), mult});
    rep.scaling_ok = make_spectrum(std::move(scaled)) == quotient_spectrum_closed(n);
    return rep;
}

exactlinalg::BigPolynomial spectrum_to_char_poly(const SpectrumMultiset& s) {
    using exactlinalg::BigPolynomial;
    BigPolynomial acc = BigPolynomial::one();
    std::vector<std::pair<ExactEigenvalue, Int>> surds;
    for (const auto& [val, mult] : s.entries) {
        if (val.is_integer()) {
            BigPolynomial lin;
            lin.c = {BigInt(-val.integer_value()), BigInt(1)};
            for (Int i = 0; i < mult; ++i) acc = poly_mul(acc, lin);
        } else {
            surds.push_back({val, mult});
        }
    }
    // conjugate pairs (a +- b sqrt(D))/2 combine into t^2 - a t + (a^2 - b^2 D)/4
    std::vector<char> used(surds.size(), 0);
    for (std::size_t i = 0; i < surds.size(); ++i) {
        if (used[i]) continue;
        const auto& [v, mult] = surds[i];
        bool paired = false;
        for (std::size_t j = i + 1; j < surds.size(); ++j) {
            if (used[j]) continue;
            const auto& [w, wmult] = surds[j];
            if (w.a == v.a && w.D == v.D && w.b == -v.b && wmult == mult) {
                const BigInt prod = (BigInt(v.a) * v.a - BigInt(v.b) * v.b * v.D) / 4;
                BigPolynomial quad;
                quad.c = {prod, BigInt(-v.a), BigInt(1)};
                for (Int r = 0; r < mult; ++r) acc = poly_mul(acc, quad);
                used[i] = used[j] = 1;
                paired = true;
                break;
            }
        }
        if (!paired)
            throw std::invalid_argument("spectrum_to_char_poly: unpaired irrational eigenvalue");
    }
    return acc;
}

std::string spectrum_to_json(Int n, const std::string& matrix, const SpectrumMultiset& s,
                             bool verified) {
    nlohmann::json j;
    j["n"] = n;
    j["matrix"] = matrix;
    j["dimension"] = s.dimension;
    j["entries"] = nlohmann::json::array();
    for (const auto& [val, mult] : s.entries)
        j["entries"].push_back({{"a", val.a}, {"b", val.b}, {"D", val.D}, {"mult", mult}});
    j["verified"] = verified;
    return j.dump(2) + "\n";
}

}  // namespace gengraph::spectra
