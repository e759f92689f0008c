// Command-line front end: build/export graphs, print spectrum and index
// reports, run verification sweeps.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gengraph/dihedral.hpp"
#include "gengraph/graph.hpp"
#include "gengraph/indices.hpp"
#include "gengraph/invariants.hpp"
#include "gengraph/numtheory.hpp"
#include "gengraph/spectra.hpp"
#include "gengraph/verify.hpp"
#include "gengraph/version.hpp"

namespace {

using gengraph::Int;
namespace nt = gengraph::numtheory;

// relative output paths may be redirected by GENGRAPH_OUT_DIR
std::filesystem::path resolve_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* base = std::getenv("GENGRAPH_OUT_DIR")) p = std::filesystem::path(base) / p;
    }
    return p;
}

void write_or_print(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    const auto p = resolve_out(out_path);
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot open output file: " + p.string());
    f << content;
}

int cmd_graph(Int n, bool delta, const std::string& format, const std::string& out, bool meta) {
    const auto g = delta ? gengraph::graph::build_delta(n) : gengraph::graph::build_gamma(n);
    write_or_print(out, format == "dot" ? gengraph::graph::to_dot(g, meta)
                                        : gengraph::graph::to_json(g));
    return 0;
}

int cmd_spectrum(Int n, const std::string& matrix, const std::string& out, bool json) {
    const std::string family = matrix + "-spectrum";
    const auto rows = gengraph::verify::run_checks_for_n(n, {family}, {});
    bool verified = true;
    for (const auto& r : rows)
        if (r.status == gengraph::verify::Status::Fail) verified = false;

    const auto spectrum_data = matrix == "adjacency" ? gengraph::spectra::adjacency_spectrum_closed(n)
                                            : gengraph::spectra::laplacian_spectrum_closed(n);
    const std::string j = gengraph::spectra::spectrum_to_json(n, matrix, spectrum_data, verified);
    if (json || !out.empty()) {
        write_or_print(out, j);
    }
    if (!json) {
        std::cout << matrix << " spectrum of Gamma_" << n << "  (dimension " << spectrum_data.dimension
                  << ")\n";
        for (const auto& [val, mult] : spectrum_data.entries)
            std::cout << "  " << gengraph::spectra::to_string(val) << " : " << mult << "\n";
        if (matrix == "adjacency")
            std::cout << "integral: " << (gengraph::spectra::integrality_check(n) ? "true" : "false")
                      << "\n";
        std::cout << "verified against exact characteristic polynomial: "
                  << (verified ? "yes" : "NO") << "\n";
        if (!verified)
            for (const auto& r : rows)
                if (r.status == gengraph::verify::Status::Fail)
                    std::cout << "  FAILED: " << r.name << " " << r.detail << "\n";
    }
    return verified ? 0 : 1;
}

int cmd_indices(Int n, const std::string& out, bool json, bool special) {
    const auto ctx = gengraph::indices::make_context(n);
    auto reports = gengraph::indices::index_reports(ctx);
    if (special) {
        for (auto& r : gengraph::indices::special_case_reports(ctx)) reports.push_back(std::move(r));
    }
    std::ostringstream table;
    table << "topological indices of Delta_" << n << "\n";
    table << "  index          paper           brute           agree\n";
    for (const auto& r : reports) {
        std::ostringstream line;
        line << "  " << r.index_name;
        for (std::size_t i = r.index_name.size(); i < 13; ++i) line << ' ';
        const std::string p = gengraph::indices::value_to_string(r.paper_closed_form);
        const std::string b = gengraph::indices::value_to_string(r.brute_force);
        line << "  " << p;
        for (std::size_t i = p.size(); i < 14; ++i) line << ' ';
        line << "  " << b;
        for (std::size_t i = b.size(); i < 14; ++i) line << ' ';
        line << "  " << (r.agrees ? "yes" : "NO") << "\n";
        table << line.str();
    }
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports)
            arr.push_back({{"n", r.n},
                           {"index_name", r.index_name},
                           {"paper_value", gengraph::indices::value_to_string(r.paper_closed_form)},
                           {"brute_value", gengraph::indices::value_to_string(r.brute_force)},
                           {"agrees", r.agrees}});
        write_or_print(out, arr.dump(2) + "\n");
    } else {
        write_or_print(out, table.str());
    }
    return 0;
}

int cmd_invariants(Int n, const gengraph::invariants::SolverCutoffs& cutoffs,
                   const std::string& out, bool json) {
    const auto reports = gengraph::invariants::invariant_reports(n, cutoffs);
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        write_or_print(out, arr.dump(2) + "\n");
        return 0;
    }
    std::ostringstream table;
    table << "invariants of Delta_" << n << "\n";
    table << "  name                    closed      brute       agrees\n";
    for (const auto& r : reports) {
        std::ostringstream line;
        line << "  " << r.name;
        for (std::size_t i = r.name.size(); i < 22; ++i) line << ' ';
        const std::string c = r.closed_form.dump();
        const std::string b = r.brute_force.dump();
        line << "  " << c;
        for (std::size_t i = c.size(); i < 10; ++i) line << ' ';
        line << "  " << b;
        for (std::size_t i = b.size(); i < 10; ++i) line << ' ';
        line << "  " << (r.agrees.has_value() ? (*r.agrees ? "yes" : "NO") : "-") << "\n";
        table << line.str();
    }
    write_or_print(out, table.str());
    return 0;
}

int cmd_verify(const gengraph::verify::SweepConfig& config, const std::string& format,
               const std::string& out, bool meta, const std::string& command) {
    const auto outcome = gengraph::verify::run_sweep(config);
    const bool indices_only =
        config.checks.size() == 1 && config.checks.count("indices") == 1;
    const std::string payload =
        format == "json" ? gengraph::verify::results_to_json(outcome)
                         : gengraph::verify::results_to_csv(outcome, indices_only, meta, command);
    std::ostringstream summary;
    summary << "checked n in [" << config.n_min << ", " << config.n_max << "]: " << outcome.pass
            << " pass, " << outcome.fail << " fail, " << outcome.errata
            << " errata (expected discrepancies correctly flagged)\n";
    if (!out.empty()) {
        write_or_print(out, payload);
        std::cout << summary.str();
    } else {
        std::cout << payload;
        std::cerr << summary.str();
    }
    if (outcome.fail > 0) {
        for (const auto& r : outcome.results)
            if (r.status == gengraph::verify::Status::Fail)
                std::cerr << "FAIL n=" << r.n << " [" << r.check << "] " << r.name << " "
                          << r.detail << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exactly verified computations on generating graphs of dihedral groups"};
    app.set_version_flag("--version", gengraph::kVersion);
    app.require_subcommand(1);

    std::string out, format = "dot", matrix = "adjacency";
    bool delta = false, meta = false, json = false, special = false;
    Int n = 2;
    gengraph::verify::SweepConfig sweep;
    std::string sweep_format = "csv";
    std::vector<std::string> checks;

    auto* g = app.add_subcommand("graph", "export Gamma_n (or Delta_n) as DOT or JSON");
    g->add_option("n", n, "group parameter, n >= 2")->required();
    g->add_flag("--delta", delta, "drop the isolated vertices");
    g->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    g->add_option("--out", out, "output file (default stdout)");
    g->add_flag("--meta", meta, "include provenance header in DOT output");

    auto* s = app.add_subcommand("spectrum", "closed-form spectrum, oracle-verified");
    s->add_option("n", n, "group parameter, n >= 2")->required();
    s->add_option("--matrix", matrix, "adjacency or laplacian")
        ->check(CLI::IsMember({"adjacency", "laplacian"}));
    s->add_option("--out", out, "write the JSON report to a file");
    s->add_flag("--json", json, "print JSON instead of the table");

    auto* ix = app.add_subcommand("indices", "topological index table, paper vs brute force");
    ix->add_option("n", n, "group parameter, n >= 2")->required();
    ix->add_option("--out", out, "output file (default stdout)");
    ix->add_flag("--json", json, "emit JSON");
    ix->add_flag("--special", special, "include the n=p / n=2^a special-case rows");

    auto* iv = app.add_subcommand("invariants", "closed forms vs exhaustive solvers");
    iv->add_option("n", n, "group parameter, n >= 2")->required();
    iv->add_option("--out", out, "output file (default stdout)");
    iv->add_flag("--json", json, "emit JSON");
    iv->add_option("--cutoff-clique", sweep.cutoffs.clique, "clique solver cutoff");
    iv->add_option("--cutoff-independence", sweep.cutoffs.independence,
                   "independent-set solver cutoff");
    iv->add_option("--cutoff-domination", sweep.cutoffs.domination, "domination solver cutoff");
    iv->add_option("--cutoff-chromatic", sweep.cutoffs.chromatic, "chromatic solver cutoff");
    iv->add_option("--cutoff-pancyclic", sweep.cutoffs.pancyclic, "pancyclicity search cutoff");

    auto* v = app.add_subcommand("verify", "run check families over a range of n");
    v->add_option("--from", sweep.n_min, "first n (>= 2)");
    v->add_option("--to", sweep.n_max, "last n");
    v->add_option("--checks", checks,
                  "families: gen, graph, invariants, adjacency-spectrum, laplacian-spectrum, "
                  "kronecker, indices (default all)")
        ->delimiter(',');
    v->add_option("--workers", sweep.workers, "worker threads (default hardware)");
    v->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    v->add_option("--out", out, "output file (default stdout)");
    v->add_flag("--meta", meta, "include provenance header in CSV output");
    v->add_option("--cutoff-clique", sweep.cutoffs.clique, "clique solver cutoff");
    v->add_option("--cutoff-independence", sweep.cutoffs.independence,
                  "independent-set solver cutoff");
    v->add_option("--cutoff-domination", sweep.cutoffs.domination, "domination solver cutoff");
    v->add_option("--cutoff-chromatic", sweep.cutoffs.chromatic, "chromatic solver cutoff");
    v->add_option("--cutoff-pancyclic", sweep.cutoffs.pancyclic, "pancyclicity search cutoff");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are exit code 2
    }

    try {
        if (g->parsed()) return cmd_graph(n, delta, format, out, meta);
        if (s->parsed()) return cmd_spectrum(n, matrix, out, json);
        if (ix->parsed()) return cmd_indices(n, out, json, special);
        if (iv->parsed()) return cmd_invariants(n, sweep.cutoffs, out, json);
        if (v->parsed()) {
            sweep.checks = std::set<std::string>(checks.begin(), checks.end());
            std::ostringstream cmdline;
            for (int i = 0; i < argc; ++i) cmdline << (i ? " " : "") << argv[i];
            return cmd_verify(sweep, sweep_format, out, meta, cmdline.str());
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
