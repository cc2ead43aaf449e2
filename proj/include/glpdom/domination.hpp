#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glpdom/glp.hpp"
#include "glpdom/graph.hpp"
#include "glpdom/properties.hpp"

namespace glpdom {

// Search-size guards. GLPDOM_GUARD_N overrides the subset guard.
struct Guards {
    int subset = 26;  // single-optimum searches
    int family = 18;  // full family enumeration
    int iso = 12;     // isomorphism backtracking
    static Guards from_env();
};

struct ParamValue {
    std::optional<int> value;  // nullopt = no feasible set
    VertexSet witness = 0;     // lexicographically least optimum
};

bool is_dominating(const Graph& g, VertexSet s);
bool is_ab_dominating(const Graph& g, VertexSet s, const PropertyPair& pair);

// True iff adding vertices to a feasible set keeps it feasible; holds for
// (all,all) and (total,all), where single-vertex deletions decide minimality.
bool superset_closed(const PropertyPair& pair);

// For superset-closed pairs: all single-vertex deletions. Otherwise all
// proper subsets are tested, guarded by |s|.
bool is_minimal_ab_dominating(const Graph& g, VertexSet s, const PropertyPair& pair,
                              int subset_guard = 20);

// Exactly the minimal (A,B)-dominating sets, sorted by cardinality then
// lexicographic vertex order.
std::vector<VertexSet> enumerate_minimal(const Graph& g, const PropertyPair& pair,
                                         const Guards& guards = {});

ParamValue gamma_ab(const Graph& g, const PropertyPair& pair, const Guards& guards = {});
ParamValue Gamma_ab(const Graph& g, const PropertyPair& pair, const Guards& guards = {});

// All minimum-cardinality (A,B)-dominating sets (each is automatically a
// minimal one), sorted lexicographically.
std::vector<VertexSet> gamma_set_family(const Graph& g, const PropertyPair& pair,
                                        const Guards& guards = {});

struct ParamName {
    std::string name;
    PropertyPair pair;
    bool upper = false;  // beta0 denotes the upper (maxdeg:0,all) parameter
};

// gamma, i, beta0, gamma_t, gamma_r, gamma_tr, gamma_oc, gamma_t_oc,
// gamma_p, gamma_a, gamma_k:<k>, gamma_mc
ParamName parse_param(const std::string& name);
ParamValue param(const Graph& g, const ParamName& name, bool upper, const Guards& guards = {});

// The nine named pairs used by the cross-parameter invariants:
// gamma, i, gamma_t, gamma_r, gamma_tr, gamma_oc, gamma_t_oc, gamma_p, gamma_mc.
const std::vector<ParamName>& named_pairs();

bool is_efficient_dominating(const Graph& g, VertexSet d);
std::vector<VertexSet> enumerate_efficient(const Graph& g, const Guards& guards = {});

// gamma == Gamma for the pair; throws NoFeasibleSet when no set exists.
bool is_well_ab_dominated(const Graph& g, const PropertyPair& pair, const Guards& guards = {});

// Exact equality of the two minimum-set families.
bool strong_equal(const Graph& g, const PropertyPair& p1, const PropertyPair& p2,
                  const Guards& guards = {});

std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Guards& guards = {});

// Base indices isolated in <r> whose factor needs at least two dominators.
// r must be a minimal dominating set of the base.
VertexSet i_r_set(const Graph& base, const Factors& factors, VertexSet r,
                  const Guards& guards = {});

// For each block hit twice by the mu-set d, replaces the second hit by a
// lexicographically least outside neighbor; result is a mu-set with at most
// one vertex per block. mu must be (all,all) or (total,all).
VertexSet d_star_transform(const ProductGraph& p, VertexSet d, const PropertyPair& mu,
                           const Guards& guards = {});

}  // namespace glpdom
