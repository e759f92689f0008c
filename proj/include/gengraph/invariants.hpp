// Structural invariants of the non-isolated component: closed forms paired
// with exact exhaustive solvers (bitset branch-and-bound / subset search)
// for small n, plus the explicit witness constructions.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gengraph/dihedral.hpp"
#include "gengraph/graph.hpp"
#include "gengraph/types.hpp"

namespace gengraph::invariants {

struct InvariantReport {
    Int n = 0;
    std::string name;
    nlohmann::json closed_form;
    nlohmann::json brute_force;  // null when n is beyond the solver cutoff
    std::optional<bool> agrees;

    nlohmann::json to_json() const;
};

// Solver cutoffs are configuration, not constants.
struct SolverCutoffs {
    Int clique = 30;
    Int independence = 30;
    Int domination = 30;
    Int chromatic = 20;
    Int pancyclic = 12;
};

// ---- closed forms -------------------------------------------------------
bool is_regular(Int n);       // n a power of two
bool is_eulerian(Int n);      // n even
bool planarity_class(Int n);  // n in {2, 3, 4, 6}
std::pair<Int, Int> domination_numbers(Int n);  // (1 if prime else 2, 2)
Int clique_number(Int n);                       // p + 1, p least prime of n
Int chromatic_number(Int n);                    // equals clique number
// max(phi(n), n/p_1); the larger of the two maximal independent families
Int independence_number(Int n);
// the literal case split printed in the source result (n/p_1 when n has
// >= 2 distinct primes), kept separately because it is wrong for odd such n
Int paper_independence_number(Int n);

// ---- constructions and witnesses ----------------------------------------
// Closed Hamiltonian walk through s, all n + phi(n) vertices once.
std::vector<dihedral::DihedralElement> hamiltonian_cycle(Int n);
bool validate_hamiltonian_cycle(Int n, const std::vector<dihedral::DihedralElement>& cycle);

// {s, sr, ..., sr^{p-1}, r} is a clique of size p+1.
bool clique_witness_ok(Int n);
// {s, sr^{p_1}, sr^{2 p_1}, ...} is independent of size n/p_1.
bool independent_witness_ok(Int n);
// Witness-based planarity verdict: false when a K_{3,3} subgraph on three
// rotations and three reflections exists, otherwise the E <= 3V - 6 bound.
bool planarity_witness_check(Int n);

// Exhaustive check that cycles through s of every length 3..n+phi(n) exist.
bool pancyclic_check(Int n, Int cutoff);

// ---- exhaustive solvers (exact, graphs up to 64 vertices) ----------------
Int solve_max_clique(const graph::GraphStructure& g);
Int solve_max_independent(const graph::GraphStructure& g);
Int solve_min_domination(const graph::GraphStructure& g);
Int solve_min_total_domination(const graph::GraphStructure& g);
Int solve_chromatic(const graph::GraphStructure& g);

// All invariant reports for one n, brute columns filled within cutoffs.
std::vector<InvariantReport> invariant_reports(Int n, const SolverCutoffs& cutoffs);

}  // namespace gengraph::invariants
