#include "gengraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gengraph/numtheory.hpp"
#include "gengraph/version.hpp"

namespace gengraph::graph {

using dihedral::Kind;

Int GraphStructure::edge_count() const {
    Int twice = 0;
    for (const auto& nbrs : adjacency) twice += static_cast<Int>(nbrs.size());
    return twice / 2;
}

bool GraphStructure::has_edge(Int u, Int v) const {
    const auto& nbrs = adjacency[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Int GraphStructure::index_of(const DihedralElement& x) const {
    const auto it = std::find(vertices.begin(), vertices.end(), x);
    return it == vertices.end() ? -1 : static_cast<Int>(it - vertices.begin());
}

namespace {

// Vertex order Omega_2, Omega_1, Omega_3; reflections are adjacent when
// their exponents differ by a unit, rotations in Omega_1 are adjacent to
// every reflection, Omega_3 is isolated.
GraphStructure build(Int n, bool delta_only) {
    if (n < 2) throw std::invalid_argument("build_gamma/build_delta: n must be >= 2");
    GraphStructure g;
    g.n = n;
    g.delta_only = delta_only;
    const auto om = dihedral::omega_partition(n);
    g.vertices = om.omega2;
    g.vertices.insert(g.vertices.end(), om.omega1.begin(), om.omega1.end());
    if (!delta_only) g.vertices.insert(g.vertices.end(), om.omega3.begin(), om.omega3.end());

    const Int phi = static_cast<Int>(om.omega1.size());
    g.adjacency.assign(g.vertices.size(), {});
    // reflection-reflection edges
    for (Int i = 0; i < n; ++i)
        for (Int j = i + 1; j < n; ++j)
            if (std::gcd(j - i, n) == 1) {
                g.adjacency[i].push_back(j);
                g.adjacency[j].push_back(i);
            }
    // rotation-reflection edges (Omega_1 indices are n .. n+phi-1)
    for (Int a = 0; a < phi; ++a)
        for (Int i = 0; i < n; ++i) {
            g.adjacency[n + a].push_back(i);
            g.adjacency[i].push_back(n + a);
        }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

}  // namespace

GraphStructure build_gamma(Int n) { return build(n, false); }
GraphStructure build_delta(Int n) { return build(n, true); }

DegreeSummary degree_summary(Int n) {
    if (n < 2) throw std::invalid_argument("degree_summary: n must be >= 2");
    return {n, 2 * numtheory::euler_phi(n), 0};
}

std::vector<DihedralElement> closed_form_neighbors(Int n, const DihedralElement& x) {
    if (n < 2) throw std::invalid_argument("closed_form_neighbors: n must be >= 2");
    const auto om = dihedral::omega_partition(n);
    if (x.kind == Kind::Reflection) {
        auto out = om.omega1;
        const auto bi = dihedral::b_set(n, x.exponent);
        out.insert(out.end(), bi.begin(), bi.end());
        std::sort(out.begin(), out.end());
        return out;
    }
    if (std::gcd(x.exponent, n) == 1) return om.omega2;  // x in Omega_1
    return {};                                           // x in Omega_3
}

std::vector<Int> bfs_distances(const GraphStructure& g, Int src) {
    std::vector<Int> dist(g.vertices.size(), -1);
    std::deque<Int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const Int u = queue.front();
        queue.pop_front();
        for (Int v : g.adjacency[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

std::optional<Int> pairwise_distance(const GraphStructure& g, Int u, Int v) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw std::invalid_argument("pairwise_distance: vertex out of range");
    const Int d = bfs_distances(g, u)[v];
    if (d < 0) return std::nullopt;
    return d;
}

Int connected_components(const GraphStructure& g) {
    std::vector<char> seen(g.vertices.size(), 0);
    Int components = 0;
    for (Int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        ++components;
        std::deque<Int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            const Int u = queue.front();
            queue.pop_front();
            for (Int v : g.adjacency[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
        }
    }
    return components;
}

std::optional<Int> girth(const GraphStructure& g) {
    // BFS from every vertex; a non-tree edge closing at depths d(u), d(v)
    // witnesses a cycle of length d(u)+d(v)+1 through the root
    Int best = -1;
    const Int m = g.vertex_count();
    std::vector<Int> dist(m), parent(m);
    for (Int s = 0; s < m; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<Int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            const Int u = queue.front();
            queue.pop_front();
            for (Int v : g.adjacency[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    const Int cycle = dist[u] + dist[v] + 1;
                    if (best < 0 || cycle < best) best = cycle;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

IntMatrix adjacency_matrix(const GraphStructure& g) {
    const Int m = g.vertex_count();
    IntMatrix a = IntMatrix::Zero(m, m);
    for (Int u = 0; u < m; ++u)
        for (Int v : g.adjacency[u]) a(u, v) = 1;
    return a;
}

IntMatrix laplacian_matrix(const GraphStructure& g) {
    const Int m = g.vertex_count();
    IntMatrix l = IntMatrix::Zero(m, m);
    for (Int u = 0; u < m; ++u) {
        l(u, u) = g.degree(u);
        for (Int v : g.adjacency[u]) l(u, v) = -1;
    }
    return l;
}

std::string to_dot(const GraphStructure& g, bool meta) {
    std::ostringstream out;
    if (meta) out << "// generated by gengraph " << kVersion << "\n";
    out << "graph " << (g.delta_only ? "delta_" : "gamma_") << g.n << " {\n";
    for (Int v = 0; v < g.vertex_count(); ++v)
        out << "  v" << v << " [label=\"" << dihedral::to_string(g.vertices[v]) << "\"];\n";
    for (Int u = 0; u < g.vertex_count(); ++u)
        for (Int v : g.adjacency[u])
            if (u < v) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const GraphStructure& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back(dihedral::to_string(v));
    j["edges"] = nlohmann::json::array();
    for (Int u = 0; u < g.vertex_count(); ++u)
        for (Int v : g.adjacency[u])
            if (u < v) j["edges"].push_back({u, v});
    return j.dump(2) + "\n";
}

}  // namespace gengraph::graph
