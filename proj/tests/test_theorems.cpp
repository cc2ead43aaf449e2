#include "doctest.h"
#include "glpdom/graph_io.hpp"
#include "glpdom/theorems.hpp"

#include <sstream>

using namespace glpdom;

TEST_CASE("theorem id parsing") {
    CHECK(parse_theorem("T2") == TheoremId::T2);
    CHECK(parse_theorem("t17") == TheoremId::T17);
    CHECK(theorem_name(TheoremId::T9) == "T9");
    CHECK(all_theorems().size() == 17);
    CHECK_THROWS_AS(parse_theorem("T18"), InvalidParameter);
    CHECK_THROWS_AS(parse_theorem(""), InvalidParameter);
}

TEST_CASE("checkers on hand-picked instances") {
    Factors k2x3 = {complete_graph(2), complete_graph(2), complete_graph(2)};
    Verdict t2 = check(TheoremId::T2, path_graph(3), k2x3);
    CHECK(t2.status == Verdict::Status::Holds);
    CHECK(t2.details["gamma_t_base"] == 2);
    CHECK(t2.details["gamma_t_product"] == 2);

    Verdict t12 = check(TheoremId::T12, complete_graph(2), {complete_graph(1), complete_graph(1)});
    CHECK(t12.status == Verdict::Status::Holds);

    Verdict t15 = check(TheoremId::T15, complete_graph(2), {path_graph(4), path_graph(4)});
    CHECK(t15.status == Verdict::Status::Holds);

    Verdict t6 = check(TheoremId::T6, path_graph(3),
                       {complete_graph(1), complete_graph(2), complete_graph(2)});
    CHECK(t6.status == Verdict::Status::NotApplicable);

    Verdict t1 = check(TheoremId::T1, cycle_graph(4),
                       {path_graph(2), empty_graph(2), complete_graph(3), path_graph(2)});
    CHECK(t1.status == Verdict::Status::Holds);

    Verdict t3 = check(TheoremId::T3, path_graph(3),
                       {complete_graph(2), complete_graph(2), complete_graph(2)});
    CHECK(t3.status == Verdict::Status::Holds);
}

TEST_CASE("T17 on the circulant family") {
    for (int k = 1; k <= 3; ++k) {
        std::vector<int> jumps;
        for (int j = 1; j <= k; ++j) {
            jumps.push_back(j);
            jumps.push_back(4 * k + 2 - j);
        }
        Graph g = circulant_graph(4 * k + 2, jumps);
        Verdict v = check(TheoremId::T17, g, {});
        CHECK(v.status == Verdict::Status::Holds);
        CHECK(v.details["gamma_t"] == 4);
        CHECK(v.details["k"] == k);
        CHECK(v.details.contains("eds"));
    }
    CHECK(check(TheoremId::T17, cycle_graph(4), {}).status == Verdict::Status::NotApplicable);
}

TEST_CASE("oversized instances come back not-applicable") {
    Guards tight;
    tight.subset = 4;
    Factors fs = {complete_graph(2), complete_graph(2), complete_graph(2)};
    Verdict v = check(TheoremId::T2, path_graph(3), fs, tight);
    CHECK(v.status == Verdict::Status::NotApplicable);
}

TEST_CASE("pools and base generation") {
    CHECK_FALSE(named_pool("default").empty());
    CHECK_FALSE(named_pool("tiny").empty());
    CHECK_THROWS_AS(named_pool("nope"), InvalidParameter);

    auto bases = connected_bases_upto(4);
    // 1 + 2 + 6 connected graphs on 2..4 vertices
    CHECK(bases.size() == 9);
    for (const Graph& g : bases) CHECK(is_connected(g));
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = i + 1; j < bases.size(); ++j)
            CHECK_FALSE(are_isomorphic(bases[i], bases[j]));
}

TEST_CASE("sweep is deterministic and seed-sensitive") {
    SweepConfig cfg;
    cfg.bmax = 3;
    cfg.fmax = 2;
    cfg.samples = 12;
    cfg.seed = 7;

    auto run = [&](int jobs) {
        SweepConfig c = cfg;
        c.jobs = jobs;
        std::vector<std::string> lines;
        SweepSummary s = sweep(TheoremId::T4, c,
                               [&](const SweepRecord& r) { lines.push_back(r.to_json().dump()); });
        return std::pair{s, lines};
    };

    auto [s1, l1] = run(1);
    auto [s4, l4] = run(4);
    CHECK(s1.violated == 0);
    CHECK(s1.holds == s4.holds);
    CHECK(s1.not_applicable == s4.not_applicable);
    CHECK(l1 == l4);
    CHECK((long)l1.size() == s1.holds + s1.violated + s1.not_applicable);

    SweepConfig other = cfg;
    other.seed = 8;
    std::vector<std::string> l8;
    sweep(TheoremId::T4, other, [&](const SweepRecord& r) { l8.push_back(r.to_json().dump()); });
    CHECK(l1 != l8);
}

TEST_CASE("sweep records carry reproducible instances") {
    SweepConfig cfg;
    cfg.bmax = 2;
    cfg.fmax = 2;
    cfg.samples = 5;
    cfg.seed = 3;
    sweep(TheoremId::T2, cfg, [&](const SweepRecord& r) {
        Graph base = parse_graph6(r.base_g6);
        Factors fs;
        for (const std::string& s : r.factors_g6) fs.push_back(parse_graph6(s));
        Verdict again = check(TheoremId::T2, base, fs, cfg.guards);
        CHECK(again.status == r.verdict.status);
    });
}

TEST_CASE("hunt smoke") {
    HuntConfig eff;
    eff.target = "eff-gt-half";
    eff.budget = 20;
    eff.seed = 1;
    std::ostringstream out;
    long finds = hunt(eff, out);
    // the catalog circulants alone give three finds
    CHECK(finds >= 3);
    CHECK(out.str().find("circulant-catalog") != std::string::npos);

    HuntConfig well;
    well.target = "well-mu-glp:gamma";
    well.budget = 15;
    well.seed = 2;
    std::ostringstream out2;
    long n = hunt(well, out2);
    CHECK(n >= 0);

    HuntConfig bad;
    bad.target = "nope";
    std::ostringstream out3;
    CHECK_THROWS_AS(hunt(bad, out3), InvalidParameter);
}
