#include "gengraph/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "gengraph/numtheory.hpp"

namespace gengraph::invariants {

namespace nt = gengraph::numtheory;
using dihedral::DihedralElement;
using graph::GraphStructure;
using u64 = std::uint64_t;

namespace {

void require_n2(Int n, const char* op) {
    if (n < 2) throw std::invalid_argument(std::string(op) + ": n must be >= 2");
}

// adjacency as one 64-bit row mask per vertex
std::vector<u64> bitset_adjacency(const GraphStructure& g) {
    if (g.vertex_count() > 64)
        throw std::invalid_argument("exhaustive solver: graph exceeds 64 vertices");
    std::vector<u64> adj(g.vertex_count(), 0);
    for (Int u = 0; u < g.vertex_count(); ++u)
        for (Int v : g.adjacency[u]) adj[u] |= u64(1) << v;
    return adj;
}

}  // namespace

nlohmann::json InvariantReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["name"] = name;
    j["closed_form"] = closed_form;
    j["brute_force"] = brute_force;
    j["agrees"] = agrees.has_value() ? nlohmann::json(*agrees) : nlohmann::json();
    return j;
}

bool is_regular(Int n) {
    require_n2(n, "is_regular");
    return nt::is_power_of_two(n);
}

bool is_eulerian(Int n) {
    require_n2(n, "is_eulerian");
    return n % 2 == 0;
}

bool planarity_class(Int n) {
    require_n2(n, "planarity_class");
    return n == 2 || n == 3 || n == 4 || n == 6;
}

std::pair<Int, Int> domination_numbers(Int n) {
    require_n2(n, "domination_numbers");
    return {nt::is_prime(n) ? 1 : 2, 2};
}

Int clique_number(Int n) {
    require_n2(n, "clique_number");
    return nt::least_prime_factor(n) + 1;
}

Int chromatic_number(Int n) { return clique_number(n); }

Int independence_number(Int n) {
    require_n2(n, "independence_number");
    return std::max(nt::euler_phi(n), n / nt::least_prime_factor(n));
}

Int paper_independence_number(Int n) {
    require_n2(n, "paper_independence_number");
    const auto f = nt::factorize(n);
    return f.distinct_primes() >= 2 ? n / f.factors.front().first : nt::euler_phi(n);
}

std::vector<DihedralElement> hamiltonian_cycle(Int n) {
    require_n2(n, "hamiltonian_cycle");
    std::vector<Int> units;
    for (Int a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) units.push_back(a);
    // s, then for each unit a ascending: r^a, s r^a, and the run of
    // consecutive reflections up to the next unit; the last unit is n-1,
    // whose reflection closes back to s
    std::vector<DihedralElement> walk{dihedral::reflection(0, n)};
    for (std::size_t t = 0; t < units.size(); ++t) {
        walk.push_back(dihedral::rotation(units[t], n));
        const Int upto = t + 1 < units.size() ? units[t + 1] : n;
        for (Int j = units[t]; j < upto; ++j) walk.push_back(dihedral::reflection(j, n));
    }
    return walk;
}

bool validate_hamiltonian_cycle(Int n, const std::vector<DihedralElement>& cycle) {
    const auto g = graph::build_delta(n);
    if (static_cast<Int>(cycle.size()) != g.vertex_count()) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Int u = g.index_of(cycle[i]);
        const Int v = g.index_of(cycle[(i + 1) % cycle.size()]);
        if (u < 0 || v < 0 || !g.has_edge(u, v)) return false;
        if (seen[u]) return false;
        seen[u] = 1;
    }
    return true;
}

bool clique_witness_ok(Int n) {
    require_n2(n, "clique_witness_ok");
    const Int p = nt::least_prime_factor(n);
    const auto g = graph::build_delta(n);
    std::vector<Int> ids;
    for (Int j = 0; j < p; ++j) ids.push_back(g.index_of(dihedral::reflection(j, n)));
    ids.push_back(g.index_of(dihedral::rotation(1, n)));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (ids[i] < 0 || ids[j] < 0 || !g.has_edge(ids[i], ids[j])) return false;
    return static_cast<Int>(ids.size()) == p + 1;
}

bool independent_witness_ok(Int n) {
    require_n2(n, "independent_witness_ok");
    const Int p = nt::least_prime_factor(n);
    const auto g = graph::build_delta(n);
    std::vector<Int> ids;
    for (Int t = 0; t < n / p; ++t) ids.push_back(g.index_of(dihedral::reflection(t * p, n)));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (ids[i] < 0 || ids[j] < 0 || g.has_edge(ids[i], ids[j])) return false;
    return static_cast<Int>(ids.size()) == n / p;
}

bool planarity_witness_check(Int n) {
    require_n2(n, "planarity_witness_check");
    const auto g = graph::build_delta(n);
    const Int phi = nt::euler_phi(n);
    if (phi >= 3) {
        // three generating rotations vs three reflections give a K_{3,3}
        const auto om = dihedral::omega_partition(n);
        bool witness = true;
        for (int i = 0; i < 3 && witness; ++i)
            for (int j = 0; j < 3 && witness; ++j) {
                const Int u = g.index_of(om.omega1[i]);
                const Int v = g.index_of(om.omega2[j]);
                witness = g.has_edge(u, v);
            }
        if (witness) return false;  // nonplanar
    }
    // no K_{3,3} of the witness shape; sanity-check the planar edge bound
    const Int v = g.vertex_count(), e = g.edge_count();
    return e <= 3 * v - 6;
}

bool pancyclic_check(Int n, Int cutoff) {
    require_n2(n, "pancyclic_check");
    if (n > cutoff) throw std::invalid_argument("pancyclic_check: n exceeds the search cutoff");
    const auto g = graph::build_delta(n);
    const Int m = g.vertex_count();
    // subset DP allocates 4 bytes per vertex subset
    if (m > 26) throw std::invalid_argument("pancyclic_check: graph too large for subset DP");
    const auto adjIdx = g.adjacency;
    std::vector<std::uint32_t> adj(m, 0);
    for (Int u = 0; u < m; ++u)
        for (Int v : adjIdx[u]) adj[u] |= std::uint32_t(1) << v;

    const Int s = g.index_of(dihedral::reflection(0, n));
    // reach[mask] = endpoints v of simple paths from s visiting exactly mask
    std::vector<std::uint32_t> reach(std::size_t(1) << m, 0);
    reach[std::uint32_t(1) << s] = std::uint32_t(1) << s;
    std::vector<char> length_seen(m + 1, 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        const int len = std::popcount(mask);
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            if (len >= 3 && (adj[v] >> s & 1)) length_seen[len] = 1;
            std::uint32_t nxt = adj[v] & ~mask;
            while (nxt) {
                const int w = std::countr_zero(nxt);
                nxt &= nxt - 1;
                reach[mask | (std::uint32_t(1) << w)] |= std::uint32_t(1) << w;
            }
        }
    }
    for (Int len = 3; len <= m; ++len)
        if (!length_seen[len]) return false;
    return true;
}

namespace {

// exact max clique, branch and bound with a greedy-coloring upper bound
Int max_clique_bitset(const std::vector<u64>& adj, u64 start) {
    Int best = 0;
    auto expand = [&](auto&& self, u64 cand, Int size) -> void {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        // color cand greedily; color classes are independent sets, so
        // size + color(v) bounds any clique extending through v
        std::array<int, 64> order{}, color_of{};
        int cnt = 0, color = 0;
        u64 uncolored = cand;
        while (uncolored) {
            ++color;
            u64 avail = uncolored;
            while (avail) {
                const int v = std::countr_zero(avail);
                avail &= avail - 1;
                avail &= ~adj[v];
                uncolored &= ~(u64(1) << v);
                order[cnt] = v;
                color_of[cnt] = color;
                ++cnt;
            }
        }
        u64 local = cand;
        for (int i = cnt - 1; i >= 0; --i) {
            if (size + color_of[i] <= best) return;
            const int v = order[i];
            self(self, local & adj[v], size + 1);
            local &= ~(u64(1) << v);
        }
        best = std::max(best, size);
    };
    expand(expand, start, 0);
    return best;
}

}  // namespace

Int solve_max_clique(const GraphStructure& g) {
    const auto adj = bitset_adjacency(g);
    const Int m = g.vertex_count();
    return max_clique_bitset(adj, m >= 64 ? ~u64(0) : (u64(1) << m) - 1);
}

Int solve_max_independent(const GraphStructure& g) {
    // max independent set = max clique of the complement
    const auto adj = bitset_adjacency(g);
    const Int m = g.vertex_count();
    const u64 full = m >= 64 ? ~u64(0) : (u64(1) << m) - 1;
    std::vector<u64> co(m);
    for (Int v = 0; v < m; ++v) co[v] = full & ~adj[v] & ~(u64(1) << v);
    return max_clique_bitset(co, full);
}

namespace {

// smallest k such that some k-subset satisfies `covered(set) == all`
Int smallest_cover(const std::vector<u64>& closed, u64 all, Int m) {
    for (Int k = 1; k <= m; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            u64 cov = 0;
            for (int i : idx) cov |= closed[i];
            if (cov == all) return k;
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == m - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return m;
}

}  // namespace

Int solve_min_domination(const GraphStructure& g) {
    const auto adj = bitset_adjacency(g);
    const Int m = g.vertex_count();
    const u64 all = m >= 64 ? ~u64(0) : (u64(1) << m) - 1;
    std::vector<u64> closed(m);
    for (Int v = 0; v < m; ++v) closed[v] = adj[v] | (u64(1) << v);
    return smallest_cover(closed, all, m);
}

Int solve_min_total_domination(const GraphStructure& g) {
    const auto adj = bitset_adjacency(g);
    const Int m = g.vertex_count();
    const u64 all = m >= 64 ? ~u64(0) : (u64(1) << m) - 1;
    return smallest_cover(adj, all, m);
}

Int solve_chromatic(const GraphStructure& g) {
    const auto adj = bitset_adjacency(g);
    const Int m = g.vertex_count();
    if (m == 0) return 0;

    // order vertices so a maximum clique comes first: k < omega then fails
    // immediately, and chromatic >= omega lets the search start at omega
    const Int omega = solve_max_clique(g);
    std::vector<int> order;
    u64 clique = 0;
    {
        // rebuild one maximum clique greedily from the solver bound
        auto rec = [&](auto&& self, u64 cand, u64 cur) -> bool {
            if (std::popcount(cur) == omega) {
                clique = cur;
                return true;
            }
            while (cand) {
                if (std::popcount(cur) + std::popcount(cand) < omega) return false;
                const int v = std::countr_zero(cand);
                cand &= cand - 1;
                if (self(self, cand & adj[v], cur | (u64(1) << v))) return true;
            }
            return false;
        };
        rec(rec, m >= 64 ? ~u64(0) : (u64(1) << m) - 1, 0);
    }
    for (Int v = 0; v < m; ++v)
        if (clique >> v & 1) order.push_back(static_cast<int>(v));
    for (Int v = 0; v < m; ++v)
        if (!(clique >> v & 1)) order.push_back(static_cast<int>(v));

    std::vector<int> color(m, -1);
    auto feasible = [&](auto&& self, Int pos, Int k, Int used) -> bool {
        if (pos == m) return true;
        const int v = order[pos];
        u64 neighbors = adj[v];
        u64 taken = 0;
        for (Int u = 0; u < m; ++u)
            if (color[u] >= 0 && (neighbors >> u & 1)) taken |= u64(1) << color[u];
        const Int limit = std::min<Int>(k, used + 1);  // new colors in canonical order
        for (Int c = 0; c < limit; ++c) {
            if (taken >> c & 1) continue;
            color[v] = static_cast<int>(c);
            if (self(self, pos + 1, k, std::max<Int>(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    for (Int k = omega; k <= m; ++k) {
        std::fill(color.begin(), color.end(), -1);
        if (feasible(feasible, 0, k, 0)) return k;
    }
    return m;
}

std::vector<InvariantReport> invariant_reports(Int n, const SolverCutoffs& cutoffs) {
    require_n2(n, "invariant_reports");
    std::vector<InvariantReport> out;
    const auto g = graph::build_delta(n);
    const bool solver_ok = g.vertex_count() <= 64;

    auto add = [&](const std::string& name, nlohmann::json closed, nlohmann::json brute) {
        InvariantReport r;
        r.n = n;
        r.name = name;
        r.closed_form = std::move(closed);
        r.brute_force = std::move(brute);
        if (!r.brute_force.is_null()) r.agrees = r.closed_form == r.brute_force;
        out.push_back(std::move(r));
    };

    // degree-based checks are cheap at any n
    {
        bool regular = true, all_even = true;
        for (Int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != g.degree(0)) regular = false;
            if (g.degree(v) % 2 != 0) all_even = false;
        }
        add("regular", is_regular(n), regular);
        add("eulerian", is_eulerian(n), all_even);
    }
    add("hamiltonian", true, validate_hamiltonian_cycle(n, hamiltonian_cycle(n)));
    add("planar", planarity_class(n),
        n <= 12 ? nlohmann::json(planarity_witness_check(n)) : nlohmann::json());
    if (n <= cutoffs.pancyclic)
        add("pancyclic", true, pancyclic_check(n, cutoffs.pancyclic));
    else
        add("pancyclic", true, nlohmann::json());

    const auto [dom, tdom] = domination_numbers(n);
    if (n <= cutoffs.domination && solver_ok) {
        add("domination", dom, solve_min_domination(g));
        add("total_domination", tdom, solve_min_total_domination(g));
    } else {
        add("domination", dom, nlohmann::json());
        add("total_domination", tdom, nlohmann::json());
    }
    if (n <= cutoffs.clique && solver_ok)
        add("clique", clique_number(n), solve_max_clique(g));
    else
        add("clique", clique_number(n), nlohmann::json());
    if (n <= cutoffs.independence && solver_ok)
        add("independence", independence_number(n), solve_max_independent(g));
    else
        add("independence", independence_number(n), nlohmann::json());
    // the literal published value, for the errata report
    if (n <= cutoffs.independence && solver_ok)
        add("independence_paper", paper_independence_number(n), solve_max_independent(g));
    else
        add("independence_paper", paper_independence_number(n), nlohmann::json());
    if (n <= cutoffs.chromatic && solver_ok)
        add("chromatic", chromatic_number(n), solve_chromatic(g));
    else
        add("chromatic", chromatic_number(n), nlohmann::json());
    return out;
}

}  // namespace gengraph::invariants
