// Acceptance gate: one line per criterion, exit 0 only if all ten pass.
#include <chrono>
#include <cstdio>
#include <random>
#include <thread>
#include <vector>

#include "glpdom/theorems.hpp"
#include "oracle.hpp"

using namespace glpdom;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const char* what) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, what);
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Graph random_graph(std::mt19937_64& rng, int nmin, int nmax) {
    int n = nmin + (int)(rng() % (std::uint64_t)(nmax - nmin + 1));
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 2) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

struct Instance {
    Graph base;
    Factors factors;
};

// The shared base-2..4 x 100-seeded-factor grid used by criteria 2-7.
std::vector<Instance> grid() {
    std::vector<Instance> out;
    auto bases = connected_bases_upto(4);
    for (std::size_t b = 0; b < bases.size(); ++b) {
        std::mt19937_64 rng(1000 + b);
        for (int s = 0; s < 100; ++s) {
            Factors fs;
            for (int i = 0; i < bases[b].order(); ++i) fs.push_back(random_graph(rng, 1, 3));
            out.push_back({bases[b], std::move(fs)});
        }
    }
    return out;
}

struct Tally {
    long holds = 0;
    long violated = 0;
    long na = 0;
};

Tally run_all(TheoremId id, const std::vector<Instance>& instances) {
    Tally t;
    for (const Instance& inst : instances) {
        Verdict v = check(id, inst.base, inst.factors);
        if (v.status == Verdict::Status::Holds) ++t.holds;
        else if (v.status == Verdict::Status::Violated) ++t.violated;
        else ++t.na;
    }
    return t;
}

void criterion1() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(2024);
    long mismatches = 0;
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(rng, 1, 10);
        for (const ParamName& pn : named_pairs()) {
            if (gamma_ab(g, pn.pair).value != oracle::gamma(g, pn.pair)) ++mismatches;
            if (Gamma_ab(g, pn.pair).value != oracle::Gamma(g, pn.pair)) ++mismatches;
        }
    }
    double dt = seconds_since(t0);
    report(1, mismatches == 0 && dt < 60.0, "pruned search equals all-subsets oracle");
    std::printf("      200 graphs x 9 pairs, %ld mismatches, %.1fs\n", mismatches, dt);
}

void criterion8() {
    auto t0 = Clock::now();
    bool ok = true;
    for (int k = 1; k <= 3; ++k) {
        std::vector<int> jumps;
        for (int j = 1; j <= k; ++j) {
            jumps.push_back(j);
            jumps.push_back(4 * k + 2 - j);
        }
        Graph g = circulant_graph(4 * k + 2, jumps);
        int gt = *gamma_ab(g, parse_param("gamma_t").pair).value;
        if (gt != 4) ok = false;
        bool found = false;
        for (VertexSet e : enumerate_efficient(g))
            if (vs_size(e) == gt / 2) found = true;
        if (!found) ok = false;
    }
    double dt = seconds_since(t0);
    report(8, ok && dt < 30.0, "circulant family has |EDS| = gamma_t/2 for k in {1,2,3}");
    std::printf("      %.1fs\n", dt);
}

void criterion9() {
    std::vector<Graph> corpus;
    for (const PoolEntry& e : named_pool("default")) corpus.push_back(e.graph);
    std::mt19937_64 rng(77);
    for (int t = 0; t < 100; ++t) corpus.push_back(random_graph(rng, 2, 8));

    long violations = 0, checked = 0;
    for (const Graph& g : corpus) {
        if (degree_stats(g).first < 1) continue;
        ++checked;
        auto v = [&](const char* name) { return *gamma_ab(g, parse_param(name).pair).value; };
        int gamma = v("gamma");
        if (!(gamma <= v("gamma_t"))) ++violations;
        if (!(v("gamma_t") <= std::min({v("gamma_p"), v("gamma_tr"), v("gamma_t_oc")})))
            ++violations;
        if (!(v("gamma_r") <= v("gamma_tr"))) ++violations;
        if (!(v("gamma_oc") <= v("gamma_t_oc"))) ++violations;
        if (!(gamma <= std::min(v("gamma_r"), v("gamma_oc")))) ++violations;
    }
    report(9, violations == 0 && checked > 0, "folklore inequality chain on the corpus");
    std::printf("      %ld graphs with min degree >= 1, %ld violations\n", checked, violations);
}

void criterion10() {
    auto t0 = Clock::now();
    SweepConfig cfg;
    cfg.bmax = 4;
    cfg.fmax = 3;
    cfg.samples = 100;
    cfg.seed = 42;
    cfg.jobs = (int)std::max(1u, std::thread::hardware_concurrency());
    long violated = 0, holds = 0;
    for (TheoremId id : all_theorems()) {
        SweepSummary s = sweep(id, cfg);
        violated += s.violated;
        holds += s.holds;
    }
    double dt = seconds_since(t0);
    report(10, violated == 0 && dt < 300.0, "full 17-theorem sweep at bmax=4 fmax=3 x100");
    std::printf("      %ld holds, %ld violations, %.1fs\n", holds, violated, dt);
}

}  // namespace

int main() {
    criterion1();

    auto instances = grid();
    Tally t2 = run_all(TheoremId::T2, instances);
    report(2, t2.violated == 0 && t2.holds > 0, "gamma_t invariance over the base-2..4 grid");
    std::printf("      %ld holds, %ld violations, %ld n/a\n", t2.holds, t2.violated, t2.na);

    Tally t6 = run_all(TheoremId::T6, instances);
    Tally t7 = run_all(TheoremId::T7, instances);
    report(3, t6.violated == 0 && t7.violated == 0 && t6.holds > 0 && t7.holds > 0,
           "order >= 2 equalities and order >= 3 strong equalities");
    std::printf("      T6 %ld/%ld, T7 %ld/%ld (holds/violations)\n", t6.holds, t6.violated,
                t7.holds, t7.violated);

    Tally t5 = run_all(TheoremId::T5, instances);
    report(4, t5.violated == 0 && t5.holds > 0, "structural lemma on all mu-sets of the grid");
    std::printf("      %ld holds, %ld violations, %ld n/a\n", t5.holds, t5.violated, t5.na);

    Tally t9 = run_all(TheoremId::T9, instances);
    Verdict c4 = check(TheoremId::T9, complete_graph(2), {empty_graph(2), empty_graph(2)});
    report(5,
           t9.violated == 0 && t9.holds > 0 && c4.status == Verdict::Status::Holds &&
               c4.details["two_gamma_base"] == 2,
           "efficient-set chain, including the four-cycle instance");
    std::printf("      %ld holds, %ld violations; C_4 chain value 2: %s\n", t9.holds, t9.violated,
                c4.status_name());

    Tally t12 = run_all(TheoremId::T12, instances);
    report(6, t12.violated == 0 && t12.holds > 0, "i and beta0 multiplicativity");
    std::printf("      %ld holds, %ld violations, %ld n/a\n", t12.holds, t12.violated, t12.na);

    {
        Tally t13 = run_all(TheoremId::T13, instances);
        Tally t14 = run_all(TheoremId::T14, instances);
        Tally t15 = run_all(TheoremId::T15, instances);
        Tally t16 = run_all(TheoremId::T16, instances);
        long bad = t13.violated + t14.violated + t15.violated + t16.violated;

        const PropertyPair ii{{PropKind::All}, {PropKind::All}};
        const PropertyPair ti{{PropKind::MinDegOne}, {PropKind::All}};
        ProductGraph wd = build_product(complete_graph(2), {path_graph(4), path_graph(4)});
        bool named = is_well_ab_dominated(wd.graph, ii) && *gamma_ab(wd.graph, ii).value == 2 &&
                     *Gamma_ab(wd.graph, ii).value == 2;
        ProductGraph nw = build_product(path_graph(3),
                                        {complete_graph(2), complete_graph(2), complete_graph(2)});
        named = named && !is_well_ab_dominated(nw.graph, ii);
        for (int n = 2; n <= 3; ++n) {
            Factors fs(n, path_graph(4));
            ProductGraph kt = build_product(complete_graph(n), fs);
            named = named && is_well_ab_dominated(kt.graph, ti) &&
                    *gamma_ab(kt.graph, ti).value == 2;
        }
        report(7, bad == 0 && t13.holds > 0 && t14.holds > 0 && t15.holds > 0 && t16.holds > 0 &&
                      named,
               "well-dominated characterizations match brute force");
        std::printf("      T13..T16 violations %ld; named instances %s\n", bad,
                    named ? "ok" : "bad");
    }

    criterion8();
    criterion9();
    criterion10();

    if (g_failures) std::printf("%d criteria FAILED\n", g_failures);
    else std::printf("all criteria passed\n");
    return g_failures ? 1 : 0;
}
