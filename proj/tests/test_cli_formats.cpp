#include <doctest.h>

#include <nlohmann/json.hpp>

#include "gengraph/graph.hpp"
#include "gengraph/verify.hpp"

using namespace gengraph;

TEST_CASE("graph JSON matches the documented schema") {
    const auto g = gengraph::graph::build_gamma(3);
    const auto j = nlohmann::json::parse(gengraph::graph::to_json(g));
    CHECK(j["n"] == 3);
    REQUIRE(j["vertices"].is_array());
    CHECK(j["vertices"].size() == 6);
    CHECK(j["vertices"][0] == "s");
    CHECK(j["edges"].size() == 9);
    for (const auto& e : j["edges"]) {
        REQUIRE(e.size() == 2);
        CHECK(e[0].get<Int>() < e[1].get<Int>());
    }
}

TEST_CASE("verify sweep outcome and CSV") {
    verify::SweepConfig config;
    config.n_min = 2;
    config.n_max = 10;
    config.checks = {"indices"};
    config.workers = 2;
    const auto outcome = verify::run_sweep(config);
    CHECK(outcome.fail == 0);
    CHECK(outcome.errata > 0);  // Gutman rows
    CHECK(outcome.ok());

    const std::string csv = verify::results_to_csv(outcome, true, false, "");
    CHECK(csv.rfind("# schema=1\n", 0) == 0);
    CHECK(csv.find("n,index_name,paper_value,brute_value,agrees\n") != std::string::npos);
    CHECK(csv.find("3,Gutman,162,138,no") != std::string::npos);
    CHECK(csv.find("3,Wiener,11,11,yes") != std::string::npos);

    // deterministic byte-for-byte on a rerun
    const auto outcome2 = verify::run_sweep(config);
    CHECK(verify::results_to_csv(outcome2, true, false, "") == csv);

    // meta adds provenance but no timestamps
    const std::string metacsv = verify::results_to_csv(outcome, true, true, "verify --checks indices");
    CHECK(metacsv.find("# gengraph ") != std::string::npos);
    CHECK(metacsv.find("# command: verify --checks indices") != std::string::npos);

    const auto arr = nlohmann::json::parse(verify::results_to_json(outcome));
    REQUIRE(arr.is_array());
    CHECK(arr.size() == outcome.results.size());
    CHECK(arr[0].contains("status"));
}

TEST_CASE("generic CSV schema for mixed families") {
    verify::SweepConfig config;
    config.n_min = 2;
    config.n_max = 6;
    config.checks = {"gen", "graph"};
    config.workers = 1;
    const auto outcome = verify::run_sweep(config);
    CHECK(outcome.fail == 0);
    const std::string csv = verify::results_to_csv(outcome, false, false, "");
    CHECK(csv.find("n,check,name,status,detail\n") != std::string::npos);
    CHECK(csv.find("2,gen,") != std::string::npos);
}

TEST_CASE("unknown check family is rejected") {
    verify::SweepConfig config;
    config.checks = {"spectra"};
    CHECK_THROWS_AS(verify::run_sweep(config), std::invalid_argument);
    verify::SweepConfig bad_range;
    bad_range.n_min = 1;
    CHECK_THROWS_AS(verify::run_sweep(bad_range), std::invalid_argument);
}
