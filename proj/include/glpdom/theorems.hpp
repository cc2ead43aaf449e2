#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "glpdom/domination.hpp"
#include "json.hpp"

namespace glpdom {

// One mechanical checker per verified result; see docs/theorems.md for the
// statement each id covers.
enum class TheoremId {
    T1,   // folklore product facts (layers, distances, connectivity)
    T2,   // total domination invariance under the product
    T3,   // gamma bound and its equality characterization
    T4,   // gamma / gamma_t inequality chain
    T5,   // structural lemma on mu-sets (block bounds, D* transform)
    T6,   // equalities when every factor has order >= 2
    T7,   // strong (family) equalities when every factor has order >= 3
    T8,   // equality chains when every factor has gamma >= 2 (resp. >= 3)
    T9,   // efficient-dominating-set chain, incl. the (matching,connected) value
    T10,  // minimum/maximum chains over maximal independent sets of the base
    T11,  // necessary conditions for well-(A,B)-dominated products
    T12,  // multiplicativity of i and beta0
    T13,  // well-covered product characterization
    T14,  // well-dominated product characterization via |R| + |I_R|
    T15,  // well-dominated characterization with uniform factor parameters
    T16,  // well-total-dominated characterizations
    T17,  // circulant family with an efficient dominating set of size gamma_t/2
};

TheoremId parse_theorem(const std::string& name);
std::string theorem_name(TheoremId id);
const std::vector<TheoremId>& all_theorems();

struct Verdict {
    enum class Status { Holds, Violated, NotApplicable };
    Status status = Status::Holds;
    std::string reason;
    nlohmann::json details = nlohmann::json::object();

    static Verdict ok(nlohmann::json details = nlohmann::json::object());
    static Verdict violated(std::string reason, nlohmann::json details = nlohmann::json::object());
    static Verdict not_applicable(std::string reason);
    const char* status_name() const;
};

Verdict check(TheoremId id, const Graph& base, const Factors& factors, const Guards& guards = {});

struct PoolEntry {
    std::string name;
    Graph graph;
};

// Named pools: "default" (the full catalog), "tiny", "contains-K1".
std::vector<PoolEntry> named_pool(const std::string& name);

// All connected graphs of order 2..bmax, one per isomorphism class.
std::vector<Graph> connected_bases_upto(int bmax);

struct SweepConfig {
    int bmax = 4;
    int fmax = 3;
    int samples = 100;
    int jobs = 1;
    std::uint64_t seed = 42;
    std::vector<PoolEntry> pool = named_pool("default");
    Guards guards{};
};

struct SweepRecord {
    std::string theorem;
    std::string base_g6;
    std::vector<std::string> factors_g6;
    Verdict verdict;
    std::uint64_t seed = 0;
    nlohmann::json to_json() const;
};

struct SweepSummary {
    long holds = 0;
    long violated = 0;
    long not_applicable = 0;
    std::optional<SweepRecord> first_violation;
};

// Runs check over the exhaustive-bases x sampled-factors space; deterministic
// under a fixed seed regardless of job count.
SweepSummary sweep(TheoremId id, const SweepConfig& cfg,
                   const std::function<void(const SweepRecord&)>& sink = {});

struct HuntConfig {
    std::string target;  // "eff-gt-half" or "well-mu-glp:<param>"
    long budget = 0;
    std::uint64_t seed = 0;
    Guards guards{};
};

// Streams JSON-lines records to out; returns the number of finds.
long hunt(const HuntConfig& cfg, std::ostream& out);

Graph random_connected_graph(std::mt19937_64& rng, int nmin, int nmax);

}  // namespace glpdom
