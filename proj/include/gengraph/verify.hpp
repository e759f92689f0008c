// Sweep driver: runs the selected check families over a range of n,
// comparing every closed form against its independent oracle, and collects
// pass / fail / errata rows. Known discrepancies of the published formulas
// count as errata when (and only when) they are correctly flagged.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gengraph/invariants.hpp"
#include "gengraph/types.hpp"

namespace gengraph::verify {

enum class Status { Pass, Fail, Errata };

struct CheckResult {
    Int n = 0;
    std::string check;  // family: gen, graph, invariants, adjacency-spectrum, ...
    std::string name;   // individual item
    Status status = Status::Fail;
    std::string detail;
    // filled for index-report rows; feeds the documented indices CSV schema
    std::string paper_value;
    std::string brute_value;
    std::optional<bool> agrees;
};

struct SweepConfig {
    Int n_min = 2;
    Int n_max = 64;
    std::set<std::string> checks;  // empty means all families
    invariants::SolverCutoffs cutoffs;
    int workers = 0;  // <= 0 means hardware concurrency
};

struct SweepOutcome {
    std::vector<CheckResult> results;  // ascending n, deterministic order
    Int pass = 0;
    Int fail = 0;
    Int errata = 0;

    bool ok() const { return fail == 0; }
};

const std::vector<std::string>& known_check_families();

std::vector<CheckResult> run_checks_for_n(Int n, const std::set<std::string>& families,
                                          const invariants::SolverCutoffs& cutoffs);

SweepOutcome run_sweep(const SweepConfig& config);

// CSV with a "# schema=1" header line. indices_schema selects the documented
// n,index_name,paper_value,brute_value,agrees column set (index rows only);
// otherwise a generic n,check,name,status,detail table is written.
std::string results_to_csv(const SweepOutcome& outcome, bool indices_schema, bool meta,
                           const std::string& command);
std::string results_to_json(const SweepOutcome& outcome);
std::string status_to_string(Status s);

}  // namespace gengraph::verify
