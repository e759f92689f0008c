// Acceptance suite: every criterion at its stated range, all comparisons
// exact. Prints one pass/fail line per criterion and exits nonzero if any
// criterion fails.
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gengraph/dihedral.hpp"
#include "gengraph/exactlinalg.hpp"
#include "gengraph/graph.hpp"
#include "gengraph/indices.hpp"
#include "gengraph/invariants.hpp"
#include "gengraph/numtheory.hpp"
#include "gengraph/spectra.hpp"
#include "gengraph/verify.hpp"

using namespace gengraph;
namespace nt = gengraph::numtheory;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& note = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << title;
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

double run_family(const std::string& family, Int n_min, Int n_max, verify::SweepOutcome& outcome) {
    verify::SweepConfig config;
    config.n_min = n_min;
    config.n_max = n_max;
    config.checks = {family};
    config.workers = 0;  // all cores
    const auto t0 = std::chrono::steady_clock::now();
    outcome = verify::run_sweep(config);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void print_failures(const verify::SweepOutcome& outcome) {
    for (const auto& r : outcome.results)
        if (r.status == verify::Status::Fail)
            std::cout << "       n=" << r.n << " " << r.name << " " << r.detail << "\n";
}

}  // namespace

int main() {
    std::cout << "acceptance suite: generating graphs of dihedral groups\n";

    // 1. Gen(n) oracle equivalence, 2 <= n <= 64, expected < 30 s
    {
        verify::SweepOutcome outcome;
        const double secs = run_family("gen", 2, 64, outcome);
        std::ostringstream note;
        note << outcome.pass << " checks, " << secs << " s";
        report(1, "Gen(n) closed form = brute-force closure, |Gen| = 3n*phi(n), n = 2..64",
               outcome.fail == 0 && secs < 30.0, note.str());
        print_failures(outcome);
    }

    // 2. n = 45 golden example, exact match
    {
        const IntMatrix q = spectra::quotient_matrix(45);
        const std::vector<Int> row{0, 3, 3, 0, 3, 0, 0, 3, 3, 0, 0, 3, 0, 3, 3};
        bool ok = q.rows() == 15;
        for (Int c = 0; ok && c < 15; ++c) ok = q(0, c) == row[c];
        auto expected = spectra::make_spectrum({{spectra::ExactEigenvalue::integer(24), 1},
                                                {spectra::ExactEigenvalue::integer(3), 8},
                                                {spectra::ExactEigenvalue::integer(-6), 4},
                                                {spectra::ExactEigenvalue::integer(-12), 2}});
        ok = ok && spectra::quotient_spectrum_closed(45) == expected;
        report(2, "n = 45 golden: quotient first row and spectrum {24:1, 3:8, -6:4, -12:2}", ok);
    }

    // 3. adjacency spectrum closed form, 2 <= n <= 200, exact, < 10 min
    {
        verify::SweepOutcome outcome;
        const double secs = run_family("adjacency-spectrum", 2, 200, outcome);
        std::ostringstream note;
        note << outcome.pass << " checks, " << outcome.errata
             << " integrality errata (see criterion 5), " << secs << " s";
        report(3,
               "adjacency spectrum = exact char poly of A(n), multiplicities by synthetic "
               "division, quadratic factor once, rank = n0+1, n = 2..200",
               outcome.fail == 0 && secs < 600.0, note.str());
        print_failures(outcome);
    }

    // 4. Laplacian spectrum closed form, 2 <= n <= 200, exact
    {
        verify::SweepOutcome outcome;
        const double secs = run_family("laplacian-spectrum", 2, 200, outcome);
        std::ostringstream note;
        note << outcome.pass << " checks, " << secs << " s";
        report(4, "Laplacian spectrum = exact char poly of L(n), mult(0) = n-phi+1, LE = 3n*phi",
               outcome.fail == 0, note.str());
        print_failures(outcome);
    }

    // 5. energies exact for 2..200; integrality iff n = 2^a for n <= 10^3
    {
        bool energies_ok = true;
        for (Int n = 2; n <= 200; ++n)
            if (!spectra::energy_matches(
                    spectra::adjacency_energy(n),
                    spectra::twice_energy_of(spectra::adjacency_spectrum_closed(n))))
                energies_ok = false;
        std::vector<Int> counterexamples;
        for (Int n = 2; n <= 1000; ++n)
            if (spectra::integrality_check(n) != nt::is_power_of_two(n))
                counterexamples.push_back(n);
        const bool iff_ok = counterexamples.empty();
        std::ostringstream note;
        if (!iff_ok) {
            note << "AE exact for all n; the published \"integral iff n = 2^a\" is false at n = ";
            for (std::size_t i = 0; i < counterexamples.size(); ++i)
                note << (i ? "," : "") << counterexamples[i];
            note << " -- spectra verified exactly by the oracle (criterion 3); the artifact "
                    "flags these as errata; see the decisions ledger";
        }
        report(5, "AE(n) = sum |lambda| exactly for n = 2..200; integral iff n = 2^a for n <= 1000",
               energies_ok && iff_ok, note.str());
    }

    // 6. Kronecker relabeling, every n <= 200 (k >= 2 and the degenerate k = 1)
    {
        verify::SweepOutcome outcome;
        run_family("kronecker", 2, 200, outcome);
        report(6,
               "Kronecker relabeling factorizes the quotient entrywise; product-rule "
               "spectrum = Ramanujan spectrum, n = 2..200",
               outcome.fail == 0);
        print_failures(outcome);
    }

    // 7. invariants vs exhaustive solvers (cutoffs 30/20), Hamiltonian cycle
    //    validates to 200, planarity witnesses to 12
    {
        verify::SweepOutcome outcome;
        const double secs = run_family("invariants", 2, 200, outcome);
        std::ostringstream note;
        note << outcome.pass << " checks, " << outcome.errata
             << " published-independence errata, " << secs << " s";
        report(7,
               "clique p+1, independence, domination (1|2, 2), chromatic = clique vs exact "
               "solvers (n <= 30, chromatic <= 20); Hamiltonian cycle n = 2..200; planarity "
               "witness n <= 12",
               outcome.fail == 0, note.str());
        print_failures(outcome);
    }

    // 8. indices: the five sound closed forms match brute force for 2..100
    {
        verify::SweepOutcome outcome;
        const double secs = run_family("indices", 2, 100, outcome);
        const bool spot = indices::wiener(3).brute_force == 11 &&
                          indices::schultz_mti(3).brute_force == 78 &&
                          indices::wiener(4).brute_force == 18;
        std::ostringstream note;
        note << outcome.pass << " checks, " << outcome.errata << " errata rows, " << secs << " s";
        report(8,
               "Wiener, hyper-Wiener, M1, M2, MTI closed forms = brute force for n = 2..100; "
               "spot values W(3)=11, MTI(3)=78, W(4)=18",
               outcome.fail == 0 && spot, note.str());
        print_failures(outcome);
    }

    // 9. errata detection with independently computed brute values
    {
        const auto g3 = indices::gutman(3);
        const auto g4 = indices::gutman(4);
        bool ok = g3.brute_force == 138 && g3.paper_closed_form == 162 && !g3.agrees;
        ok = ok && g4.brute_force == 288 && g4.paper_closed_form == 320 && !g4.agrees;
        bool saw_mti = false, saw_gut160 = false;
        for (const auto& r : indices::special_case_reports(4)) {
            if (r.index_name == "SchultzMTI[n=2^a]")
                saw_mti = r.paper_closed_form == 36 && r.brute_force == 144 && !r.agrees;
            if (r.index_name == "Gutman[n=2^a]")
                saw_gut160 = r.paper_closed_form == 160 && r.brute_force == 288 && !r.agrees;
        }
        ok = ok && saw_mti && saw_gut160;
        for (Int p : {3, 5, 7})
            for (const auto& r : indices::special_case_reports(p))
                if (r.index_name != "Gutman[n=p]") ok = ok && r.agrees;
        report(9,
               "errata flagged: Gutman n=3 (162 vs 138), n=4 (320/160 vs 288), special-case "
               "MTI at 2^2 (36 vs 144); special-case prime column confirmed for p = 3, 5, 7",
               ok);
    }

    // 10. primitivity: A(Delta_n)^2 entrywise positive for 2 <= n <= 64
    {
        bool ok = true;
        for (Int n = 2; n <= 64 && ok; ++n) {
            const IntMatrix a = graph::adjacency_matrix(graph::build_delta(n));
            ok = ((a * a).array() > 0).all();
        }
        report(10, "A(Delta_n)^2 entrywise positive (exponent 2), n = 2..64", ok);
    }

    if (failures == 0) {
        std::cout << "all acceptance criteria satisfied\n";
        return 0;
    }
    std::cout << failures
              << " criterion(s) failed; criterion 5's integrality clause restates a published "
                 "claim that is exactly false (see notes above)\n";
    return 1;
}
