#pragma once

#include <string>
#include <string_view>

#include "glpdom/graph.hpp"

namespace glpdom {

// Induced-subgraph predicates: the property classes a set (or its complement)
// may be required to satisfy.
enum class PropKind {
    All,              // no constraint
    MinDegOne,        // no isolated vertex (total)
    Forest,           // acyclic
    PerfectMatching,  // has a perfect matching
    MaxDegK,          // maximum degree <= k (k = 0 is independence)
    Connected,
};

struct Property {
    PropKind kind = PropKind::All;
    int k = 0;  // only for MaxDegK

    // Accepted names: all, total, forest, matching, maxdeg:<k>, connected.
    static Property parse(std::string_view name);
    std::string name() const;

    bool operator==(const Property&) const = default;
};

struct PropertyPair {
    Property a;  // for the set itself
    Property b;  // for its complement
    bool operator==(const PropertyPair&) const = default;
};

// Evaluates the predicate on the subgraph of g induced by s.
// Conventions: the empty induced subgraph satisfies every property
// (including PerfectMatching, via the empty matching); K_1 fails MinDegOne
// and PerfectMatching and passes the rest.
bool holds(const Property& prop, const Graph& g, VertexSet s);

bool has_perfect_matching(const Graph& g);
bool is_forest(const Graph& g);

}  // namespace glpdom
