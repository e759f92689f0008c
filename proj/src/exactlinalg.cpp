#include "gengraph/exactlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace gengraph::exactlinalg {

void BigPolynomial::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

BigPolynomial poly_mul(const BigPolynomial& a, const BigPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BigPolynomial out;
    out.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    out.trim();
    return out;
}

BigInt poly_eval(const BigPolynomial& p, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

DivisionResult poly_divmod_monic(const BigPolynomial& p, const BigPolynomial& monic) {
    if (monic.is_zero() || monic.c.back() != 1)
        throw std::invalid_argument("poly_divmod_monic: divisor must be monic");
    DivisionResult res;
    res.remainder = p;
    res.remainder.trim();
    const auto dd = monic.degree();
    if (res.remainder.degree() < dd) return res;
    res.quotient.c.assign(res.remainder.c.size() - dd, BigInt(0));
    for (auto k = res.remainder.degree(); k >= dd; --k) {
        BigInt f = res.remainder.c[k];
        if (f == 0) continue;
        res.quotient.c[k - dd] = f;
        for (Eigen::Index j = 0; j <= dd; ++j) res.remainder.c[k - dd + j] -= f * monic.c[j];
    }
    res.quotient.trim();
    res.remainder.trim();
    return res;
}

int root_multiplicity(const BigPolynomial& p, const BigInt& lambda) {
    if (p.is_zero()) throw std::invalid_argument("root_multiplicity: zero polynomial");
    // repeated synthetic division, stopping at the first nonzero remainder
    std::vector<BigInt> cur = p.c;
    int mult = 0;
    while (cur.size() > 1) {
        std::vector<BigInt> next(cur.size() - 1);
        BigInt carry = 0;  // Horner pass: carry ends as the remainder p(lambda)
        for (std::size_t i = cur.size(); i-- > 1;) {
            carry = carry * lambda + cur[i];
            next[i - 1] = carry;
        }
        if (carry * lambda + cur[0] != 0) break;
        ++mult;
        cur = std::move(next);
    }
    return mult;
}

int root_multiplicity(const BigPolynomial& p, const BigRational& lambda) {
    if (p.is_zero()) throw std::invalid_argument("root_multiplicity: zero polynomial");
    if (lambda.get_den() == 1) return root_multiplicity(p, BigInt(lambda.get_num()));
    // general rational root: repeated synthetic division over Q
    std::vector<BigRational> cur(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) cur[i] = BigRational(p.c[i]);
    int mult = 0;
    while (cur.size() > 1) {
        std::vector<BigRational> next(cur.size() - 1);
        BigRational carry = 0;
        for (std::size_t i = cur.size(); i-- > 1;) {
            carry = carry * lambda + cur[i];
            next[i - 1] = carry;
        }
        if (carry * lambda + cur[0] != 0) break;
        ++mult;
        cur = std::move(next);
    }
    return mult;
}

int quadratic_factor_multiplicity(const BigPolynomial& p, const BigPolynomial& q) {
    if (q.degree() != 2 || q.c.back() != 1)
        throw std::invalid_argument("quadratic_factor_multiplicity: q must be monic of degree 2");
    BigPolynomial cur = p;
    cur.trim();
    if (cur.is_zero()) throw std::invalid_argument("quadratic_factor_multiplicity: zero polynomial");
    int mult = 0;
    while (cur.degree() >= 2) {
        auto [quot, rem] = poly_divmod_monic(cur, q);
        if (!rem.is_zero()) break;
        ++mult;
        cur = std::move(quot);
    }
    return mult;
}

// ---------------------------------------------------------------------------
// char_poly: CRT over word-size primes
// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_slow(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod_slow(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (a %= p; e; e >>= 1, a = mulmod_slow(a, a, p))
        if (e & 1) r = mulmod_slow(r, a, p);
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1)) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_slow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_slow(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Montgomery arithmetic modulo an odd prime p < 2^62.
struct Mont {
    u64 p;
    u64 ninv;  // -p^{-1} mod 2^64
    u64 r2;    // (2^64)^2 mod p
    u64 one;   // 2^64 mod p

    explicit Mont(u64 prime) : p(prime) {
        u64 inv = p;  // Newton: inv *= 2 - p*inv, doubles correct bits
        for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
        ninv = ~inv + 1;
        r2 = static_cast<u64>((u128(1) << 64) % p);
        r2 = mulmod_slow(r2, r2, p);  // 2^128 mod p
        one = static_cast<u64>((u128(1) << 64) % p);
    }
    inline u64 redc(u128 t) const {
        u64 m = static_cast<u64>(t) * ninv;
        u64 r = static_cast<u64>((t + u128(m) * p) >> 64);
        return r >= p ? r - p : r;
    }
    inline u64 mul(u64 a, u64 b) const { return redc(u128(a) * b); }
    inline u64 add(u64 a, u64 b) const {
        u64 r = a + b;
        return r >= p ? r - p : r;
    }
    inline u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 to(u64 x) const { return mul(x % p, r2); }
    u64 from(u64 x) const { return redc(u128(x)); }
    u64 pow(u64 a, u64 e) const {
        u64 r = one;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

std::vector<u64> prime_table(std::size_t need) {
    static std::vector<u64> primes;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    static u64 candidate = (u64(1) << 62) - 1;
    while (primes.size() < need) {
        while (!is_prime_u64(candidate)) candidate -= 2;
        primes.push_back(candidate);
        candidate -= 2;
    }
    return {primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(need)};
}

// char poly of m reduced mod p, coefficients ascending in the standard
// (non-Montgomery) domain. Hessenberg similarity reduction followed by the
// leading-principal-minor recurrence.
std::vector<u64> char_poly_mod(const IntMatrix& mat, const Mont& M) {
    const Eigen::Index m = mat.rows();
    const u64 p = M.p;
    std::vector<u64> H(static_cast<std::size_t>(m) * m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) {
            Int v = mat(i, j) % static_cast<Int>(p);
            if (v < 0) v += static_cast<Int>(p);
            H[i * m + j] = M.to(static_cast<u64>(v));
        }
    auto at = [&H, m](Eigen::Index i, Eigen::Index j) -> u64& { return H[i * m + j]; };

    // reduce to upper Hessenberg by similarity transforms
    for (Eigen::Index k = 0; k + 2 < m; ++k) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = k + 1; i < m; ++i)
            if (at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != k + 1) {
            for (Eigen::Index j = 0; j < m; ++j) std::swap(at(piv, j), at(k + 1, j));
            for (Eigen::Index i = 0; i < m; ++i) std::swap(at(i, piv), at(i, k + 1));
        }
        const u64 pivinv = M.inv(at(k + 1, k));
        for (Eigen::Index i = k + 2; i < m; ++i) {
            const u64 f = M.mul(at(i, k), pivinv);
            if (f == 0) continue;
            // R_i -= f * R_{k+1}, then C_{k+1} += f * C_i
            u64* ri = &at(i, 0);
            const u64* rk = &at(k + 1, 0);
            for (Eigen::Index j = k; j < m; ++j) ri[j] = M.sub(ri[j], M.mul(f, rk[j]));
            for (Eigen::Index r = 0; r < m; ++r)
                at(r, k + 1) = M.add(at(r, k + 1), M.mul(f, at(r, i)));
        }
    }

    // p_k(t) = (t - H[k][k]) p_{k-1}(t)
    //          - sum_{i<k} H[i][k] * (prod_{j=i+1..k} H[j][j-1]) * p_{i-1}(t)
    // (1-based k over leading principal minors; coefficients in Montgomery)
    std::vector<std::vector<u64>> P(static_cast<std::size_t>(m) + 1);
    P[0] = {M.one};
    for (Eigen::Index k = 1; k <= m; ++k) {
        auto& pk = P[k];
        pk.assign(static_cast<std::size_t>(k) + 1, 0);
        const auto& pk1 = P[k - 1];
        const u64 hkk = at(k - 1, k - 1);
        for (Eigen::Index c = 0; c < k; ++c) {
            pk[c + 1] = M.add(pk[c + 1], pk1[c]);               // t * p_{k-1}
            pk[c] = M.sub(pk[c], M.mul(hkk, pk1[c]));           // -h_kk * p_{k-1}
        }
        u64 prod = M.one;
        for (Eigen::Index i = k - 1; i >= 1; --i) {
            prod = M.mul(prod, at(i, i - 1));  // h_{i+1,i}
            if (prod == 0) break;
            const u64 coef = M.mul(at(i - 1, k - 1), prod);
            if (coef == 0) continue;
            const auto& pi = P[i - 1];
            for (Eigen::Index c = 0; c < i; ++c) pk[c] = M.sub(pk[c], M.mul(coef, pi[c]));
        }
    }

    std::vector<u64> out(static_cast<std::size_t>(m) + 1);
    for (Eigen::Index c = 0; c <= m; ++c) out[c] = M.from(P[m][c]);
    return out;
}

// Upper bound (in bits) on |coefficient| of det(tI - M): the coefficient of
// t^{m-k} is +-(sum of principal k x k minors), each bounded via Hadamard by
// the product of the k largest column 2-norms, and there are binom(m,k) of
// them.
long coefficient_bound_bits(const IntMatrix& mat) {
    const Eigen::Index m = mat.rows();
    if (m == 0) return 2;
    std::vector<long double> lognorm(m);
    for (Eigen::Index j = 0; j < m; ++j) {
        long double s = 0;
        for (Eigen::Index i = 0; i < m; ++i)
            s += static_cast<long double>(mat(i, j)) * static_cast<long double>(mat(i, j));
        lognorm[j] = s > 0 ? 0.5L * std::log2(s) : 0.0L;
    }
    std::sort(lognorm.begin(), lognorm.end(), std::greater<>());
    long double best = 0, prefix = 0;
    for (Eigen::Index k = 1; k <= m; ++k) {
        prefix += lognorm[k - 1];
        const long double logbinom =
            (std::lgammal(static_cast<long double>(m) + 1) -
             std::lgammal(static_cast<long double>(k) + 1) -
             std::lgammal(static_cast<long double>(m - k) + 1)) /
            std::log(2.0L);
        best = std::max(best, logbinom + prefix);
    }
    return static_cast<long>(best) + 8;  // slack over float rounding
}

}  // namespace

BigPolynomial char_poly(const IntMatrix& mat, Eigen::Index order_cap) {
    if (mat.rows() != mat.cols()) throw std::invalid_argument("char_poly: matrix must be square");
    if (mat.rows() > order_cap) throw std::invalid_argument("char_poly: order cap exceeded");
    const Eigen::Index m = mat.rows();
    if (m == 0) return BigPolynomial::one();

    const long bits = coefficient_bound_bits(mat);
    const std::size_t nprimes = static_cast<std::size_t>(bits / 61 + 2);
    const auto primes = prime_table(nprimes);  // copy: the table may grow later

    std::vector<std::vector<u64>> residues(nprimes);
    for (std::size_t t = 0; t < nprimes; ++t) residues[t] = char_poly_mod(mat, Mont(primes[t]));

    // Garner-style incremental CRT per coefficient, then symmetric lift.
    BigPolynomial out;
    out.c.assign(static_cast<std::size_t>(m) + 1, BigInt(0));
    BigInt modulus = 1;
    for (std::size_t t = 0; t < nprimes; ++t) {
        const BigInt p(static_cast<unsigned long>(primes[t]));
        const BigInt minv = [&] {
            BigInt inv;
            mpz_invert(inv.get_mpz_t(), BigInt(modulus % p).get_mpz_t(), p.get_mpz_t());
            return inv;
        }();
        for (std::size_t c = 0; c <= static_cast<std::size_t>(m); ++c) {
            BigInt cur = out.c[c] % p;
            BigInt target(static_cast<unsigned long>(residues[t][c]));
            BigInt delta = ((target - cur) * minv) % p;
            if (delta < 0) delta += p;
            out.c[c] += modulus * delta;
        }
        modulus *= p;
    }
    const BigInt half = modulus / 2;
    for (auto& coef : out.c)
        if (coef > half) coef -= modulus;
    out.trim();
    return out;
}

Eigen::Index rank_exact(const IntMatrix& mat, Eigen::Index order_cap) {
    if (mat.rows() > order_cap || mat.cols() > order_cap)
        throw std::invalid_argument("rank_exact: order cap exceeded");
    const Eigen::Index rows = mat.rows(), cols = mat.cols();
    BigMatrix w(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) w(i, j) = BigInt(mat(i, j));

    BigInt prev = 1;
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < std::min(rows, cols); ++k) {
        // full pivoting, smallest nonzero magnitude to limit growth
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = k; i < rows; ++i)
            for (Eigen::Index j = k; j < cols; ++j) {
                if (w(i, j) == 0) continue;
                if (pi < 0 || mpz_cmpabs(w(i, j).get_mpz_t(), w(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != k) w.row(pi).swap(w.row(k));
        if (pj != k) w.col(pj).swap(w.col(k));
        for (Eigen::Index i = k + 1; i < rows; ++i) {
            for (Eigen::Index j = k + 1; j < cols; ++j) {
                BigInt num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
        ++rank;
    }
    return rank;
}

}  // namespace gengraph::exactlinalg
