#include "gengraph/indices.hpp"

#include <stdexcept>

#include "gengraph/numtheory.hpp"

namespace gengraph::indices {

namespace nt = gengraph::numtheory;

namespace {

BigRational ratio(const BigInt& num, const BigInt& den) {
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

IndexReport make_report(Int n, std::string name, BigRational paper, BigRational brute) {
    IndexReport r;
    r.n = n;
    r.index_name = std::move(name);
    r.paper_closed_form = std::move(paper);
    r.brute_force = std::move(brute);
    r.agrees = r.paper_closed_form == r.brute_force;
    return r;
}

// ---- brute sums over the shared BFS table --------------------------------

BigRational brute_distance_sum(const IndexContext& ctx) {
    BigInt acc = 0;
    const Int m = ctx.delta.vertex_count();
    for (Int u = 0; u < m; ++u)
        for (Int v = u + 1; v < m; ++v) acc += ctx.dist[u][v];
    return BigRational(acc);
}

BigRational brute_distance_square_sum(const IndexContext& ctx) {
    BigInt acc = 0;
    const Int m = ctx.delta.vertex_count();
    for (Int u = 0; u < m; ++u)
        for (Int v = u + 1; v < m; ++v) acc += BigInt(ctx.dist[u][v]) * ctx.dist[u][v];
    return BigRational(acc);
}

BigRational brute_m1_sum(const IndexContext& ctx) {
    BigInt acc = 0;
    for (Int v = 0; v < ctx.delta.vertex_count(); ++v)
        acc += BigInt(ctx.delta.degree(v)) * ctx.delta.degree(v);
    return BigRational(acc);
}

BigRational brute_m2_sum(const IndexContext& ctx) {
    BigInt acc = 0;
    for (Int u = 0; u < ctx.delta.vertex_count(); ++u)
        for (Int v : ctx.delta.adjacency[u])
            if (u < v) acc += BigInt(ctx.delta.degree(u)) * ctx.delta.degree(v);
    return BigRational(acc);
}

BigRational brute_mti_sum(const IndexContext& ctx) {
    BigInt acc = 0;
    const Int m = ctx.delta.vertex_count();
    for (Int u = 0; u < m; ++u)
        for (Int v = u + 1; v < m; ++v)
            acc += BigInt(ctx.dist[u][v]) * (ctx.delta.degree(u) + ctx.delta.degree(v));
    return BigRational(acc);
}

BigRational brute_gutman_sum(const IndexContext& ctx) {
    BigInt acc = 0;
    const Int m = ctx.delta.vertex_count();
    for (Int u = 0; u < m; ++u)
        for (Int v = u + 1; v < m; ++v)
            acc += BigInt(ctx.dist[u][v]) * ctx.delta.degree(u) * ctx.delta.degree(v);
    return BigRational(acc);
}

// ---- general closed forms --------------------------------------------------

BigRational published_wiener(Int n) {
    const Int phi = nt::euler_phi(n);
    return ratio(BigInt(phi) * (2 * phi + n - 2), 2) + BigRational(BigInt(n) * (n - 1));
}

BigRational published_hyper_wiener(Int n) {
    const Int phi = nt::euler_phi(n);
    return ratio(BigInt(3) * (BigInt(phi) * phi - phi + BigInt(n) * (n - 1)), 2);
}

BigRational published_m1(Int n) {
    const Int phi = nt::euler_phi(n);
    return BigRational(BigInt(n) * n * phi + BigInt(4) * n * phi * phi);
}

BigRational published_m2(Int n) {
    const Int phi = nt::euler_phi(n);
    return BigRational(BigInt(2) * n * phi * phi * (n + phi));
}

BigRational published_mti(Int n) {
    const Int phi = nt::euler_phi(n);
    return BigRational(BigInt(n) * phi * (2 * phi + 5 * n - 6));
}

BigRational published_gutman(Int n) {
    const Int phi = nt::euler_phi(n);
    return BigRational(BigInt(n) * phi * ((7 * n - 6) * phi - n));
}

}  // namespace

IndexContext make_context(Int n) {
    if (n < 2) throw std::invalid_argument("indices: n must be >= 2");
    IndexContext ctx;
    ctx.n = n;
    ctx.delta = graph::build_delta(n);
    ctx.dist.reserve(ctx.delta.vertex_count());
    for (Int v = 0; v < ctx.delta.vertex_count(); ++v)
        ctx.dist.push_back(graph::bfs_distances(ctx.delta, v));
    return ctx;
}

DistanceClassSums distance_class_sums(Int n) {
    if (n < 2) throw std::invalid_argument("distance_class_sums: n must be >= 2");
    const Int phi = nt::euler_phi(n);
    return {phi * (phi - 1), n * phi, (n * phi + 2 * n * (n - phi - 1)) / 2};
}

DistanceClassSums distance_class_sums_brute(const IndexContext& ctx) {
    // vertex order in delta is Omega_2 (indices 0..n-1) then Omega_1
    const Int n = ctx.n;
    DistanceClassSums sums;
    const Int m = ctx.delta.vertex_count();
    for (Int u = 0; u < m; ++u)
        for (Int v = u + 1; v < m; ++v) {
            const bool u2 = u < n, v2 = v < n;
            if (u2 && v2)
                sums.sum_omega2_pairs += ctx.dist[u][v];
            else if (!u2 && !v2)
                sums.sum_omega1_pairs += ctx.dist[u][v];
            else
                sums.sum_cross_pairs += ctx.dist[u][v];
        }
    return sums;
}

std::vector<IndexReport> index_reports(const IndexContext& ctx) {
    const Int n = ctx.n;
    const BigRational w = brute_distance_sum(ctx);
    const BigRational ww = (w + brute_distance_square_sum(ctx)) / 2;
    return {
        make_report(n, "Wiener", published_wiener(n), w),
        make_report(n, "HyperWiener", published_hyper_wiener(n), ww),
        make_report(n, "ZagrebM1", published_m1(n), brute_m1_sum(ctx)),
        make_report(n, "ZagrebM2", published_m2(n), brute_m2_sum(ctx)),
        make_report(n, "SchultzMTI", published_mti(n), brute_mti_sum(ctx)),
        make_report(n, "Gutman", published_gutman(n), brute_gutman_sum(ctx)),
    };
}

std::vector<IndexReport> index_reports(Int n) { return index_reports(make_context(n)); }

IndexReport wiener(Int n) { return index_reports(n)[0]; }
IndexReport hyper_wiener(Int n) { return index_reports(n)[1]; }
IndexReport zagreb_m1(Int n) { return index_reports(n)[2]; }
IndexReport zagreb_m2(Int n) { return index_reports(n)[3]; }
IndexReport schultz_mti(Int n) { return index_reports(n)[4]; }
IndexReport gutman(Int n) { return index_reports(n)[5]; }

std::vector<IndexReport> special_case_reports(const IndexContext& ctx) {
    const Int n = ctx.n;
    std::vector<IndexReport> out;
    const BigRational w = brute_distance_sum(ctx);
    const BigRational ww = (w + brute_distance_square_sum(ctx)) / 2;
    if (nt::is_prime(n)) {
        const BigInt p = n;
        out.push_back(make_report(n, "Wiener[n=p]", ratio((5 * p - 4) * (p - 1), 2), w));
        out.push_back(make_report(n, "HyperWiener[n=p]", BigRational(3 * (p - 1) * (p - 1)), ww));
        out.push_back(make_report(n, "ZagrebM1[n=p]", BigRational(p * (p - 1) * (5 * p - 4)),
                                  brute_m1_sum(ctx)));
        out.push_back(make_report(n, "ZagrebM2[n=p]",
                                  BigRational(2 * p * (p - 1) * (p - 1) * (2 * p - 1)),
                                  brute_m2_sum(ctx)));
        out.push_back(make_report(n, "SchultzMTI[n=p]", BigRational(p * (p - 1) * (7 * p - 8)),
                                  brute_mti_sum(ctx)));
        out.push_back(make_report(n, "Gutman[n=p]",
                                  BigRational(p * (p - 1) * (7 * (p - 1) * (p - 1) - 1)),
                                  brute_gutman_sum(ctx)));
    }
    if (nt::is_power_of_two(n)) {
        int alpha = 0;
        for (Int v = n; v > 1; v >>= 1) ++alpha;
        auto pow2 = [](int e) {
            BigInt r;
            mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
            return r;
        };
        out.push_back(
            make_report(n, "Wiener[n=2^a]", BigRational(3 * pow2(alpha - 1) * (pow2(alpha) - 1)), w));
        out.push_back(make_report(
            n, "HyperWiener[n=2^a]",
            ratio(3 * (pow2(alpha - 1) * (pow2(alpha - 1) - 1) + pow2(alpha) * (pow2(alpha) - 1)),
                  2),
            ww));
        out.push_back(make_report(n, "ZagrebM1[n=2^a]", BigRational(3 * pow2(3 * alpha - 1)),
                                  brute_m1_sum(ctx)));
        out.push_back(make_report(n, "ZagrebM2[n=2^a]", BigRational(3 * pow2(2 * (2 * alpha - 1))),
                                  brute_m2_sum(ctx)));
        out.push_back(make_report(n, "SchultzMTI[n=2^a]",
                                  BigRational(3 * pow2(alpha) * (pow2(alpha) - 1)),
                                  brute_mti_sum(ctx)));
        out.push_back(make_report(n, "Gutman[n=2^a]",
                                  BigRational(pow2(2 * alpha) * (7 * pow2(alpha - 1) - 4)),
                                  brute_gutman_sum(ctx)));
    }
    return out;
}

std::vector<IndexReport> special_case_reports(Int n) { return special_case_reports(make_context(n)); }

std::vector<IndexReport> errata_report(Int n_min, Int n_max) {
    if (n_min < 2 || n_min > n_max) throw std::invalid_argument("errata_report: bad range");
    std::vector<IndexReport> out;
    for (Int n = n_min; n <= n_max; ++n) {
        const auto ctx = make_context(n);
        for (auto& r : index_reports(ctx))
            if (!r.agrees) out.push_back(std::move(r));
        for (auto& r : special_case_reports(ctx))
            if (!r.agrees) out.push_back(std::move(r));
    }
    return out;
}

bool expected_errata(const IndexReport& report) {
    const Int n = report.n;
    if (report.index_name == "Gutman") return n >= 3;
    if (report.index_name == "Gutman[n=p]") return n >= 3;
    if (report.index_name == "SchultzMTI[n=2^a]") return n >= 2;
    if (report.index_name == "Gutman[n=2^a]") return n >= 4;
    return false;
}

std::string value_to_string(const BigRational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace gengraph::indices
