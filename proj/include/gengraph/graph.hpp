// Materialization of the generating graph of D_n: the full graph on all 2n
// elements and the induced graph on the non-isolated vertices, in the fixed
// block order Omega_2, Omega_1, Omega_3 (each ascending by exponent).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gengraph/dihedral.hpp"
#include "gengraph/types.hpp"

namespace gengraph::graph {

using dihedral::DihedralElement;

struct GraphStructure {
    Int n = 0;
    bool delta_only = false;  // true when Omega_3 was dropped
    std::vector<DihedralElement> vertices;
    std::vector<std::vector<Int>> adjacency;  // sorted neighbor index lists

    Int vertex_count() const { return static_cast<Int>(vertices.size()); }
    Int edge_count() const;
    Int degree(Int v) const { return static_cast<Int>(adjacency[v].size()); }
    bool has_edge(Int u, Int v) const;
    // position of an element in the fixed vertex order, -1 if absent
    Int index_of(const DihedralElement& x) const;
};

struct DegreeSummary {
    Int degree_of_omega1 = 0;  // n
    Int degree_of_omega2 = 0;  // 2 phi(n)
    Int degree_of_omega3 = 0;  // 0
};

// Full generating graph on 2n vertices.
GraphStructure build_gamma(Int n);
// Generating graph restricted to Omega_2 u Omega_1 (isolated vertices removed).
GraphStructure build_delta(Int n);

DegreeSummary degree_summary(Int n);

// Neighborhood by the case formula: Omega_2 / Omega_1 u B_i / empty.
std::vector<DihedralElement> closed_form_neighbors(Int n, const DihedralElement& x);

// BFS distances from src; -1 marks unreachable vertices.
std::vector<Int> bfs_distances(const GraphStructure& g, Int src);
// Shortest-path length, std::nullopt when u and v are in different components.
std::optional<Int> pairwise_distance(const GraphStructure& g, Int u, Int v);

Int connected_components(const GraphStructure& g);

// Length of a shortest cycle, std::nullopt for forests.
std::optional<Int> girth(const GraphStructure& g);

IntMatrix adjacency_matrix(const GraphStructure& g);
IntMatrix laplacian_matrix(const GraphStructure& g);

std::string to_dot(const GraphStructure& g, bool meta = false);
std::string to_json(const GraphStructure& g);

}  // namespace gengraph::graph
