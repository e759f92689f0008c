// Distance- and degree-based topological indices of the non-isolated
// component, with the published closed forms evaluated against BFS/degree
// brute force. Brute force is authoritative; disagreements are reported,
// not patched.
#pragma once

#include <string>
#include <vector>

#include "gengraph/graph.hpp"
#include "gengraph/types.hpp"

namespace gengraph::indices {

struct IndexReport {
    Int n = 0;
    std::string index_name;
    BigRational paper_closed_form;
    BigRational brute_force;
    bool agrees = false;
};

struct DistanceClassSums {
    Int sum_omega1_pairs = 0;
    Int sum_cross_pairs = 0;
    Int sum_omega2_pairs = 0;

    friend bool operator==(const DistanceClassSums&, const DistanceClassSums&) = default;
};

// One all-pairs BFS shared by all index computations for a given n.
struct IndexContext {
    Int n = 0;
    graph::GraphStructure delta;
    std::vector<std::vector<Int>> dist;
};
IndexContext make_context(Int n);

DistanceClassSums distance_class_sums(Int n);  // closed forms
DistanceClassSums distance_class_sums_brute(const IndexContext& ctx);

IndexReport wiener(Int n);
IndexReport hyper_wiener(Int n);
IndexReport zagreb_m1(Int n);
IndexReport zagreb_m2(Int n);
IndexReport schultz_mti(Int n);
IndexReport gutman(Int n);

// The six general-form reports, sharing one BFS.
std::vector<IndexReport> index_reports(Int n);
std::vector<IndexReport> index_reports(const IndexContext& ctx);

// Special-case closed forms (prime n and n = 2^alpha); empty otherwise.
// Report names carry a [n=p] / [n=2^a] suffix.
std::vector<IndexReport> special_case_reports(Int n);
std::vector<IndexReport> special_case_reports(const IndexContext& ctx);

// Every report with agrees == false over the range, ascending n.
std::vector<IndexReport> errata_report(Int n_min, Int n_max);

// Whether a report is a *known* discrepancy of the published closed forms
// (the Gutman column for n >= 3, the special-case MTI/Gutman power-of-two
// entries, the special-case Gutman prime entries for p >= 3).
bool expected_errata(const IndexReport& report);

std::string value_to_string(const BigRational& v);

}  // namespace gengraph::indices
