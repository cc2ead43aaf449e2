#include "glpdom/properties.hpp"

#include <charconv>
#include <unordered_set>

namespace glpdom {

Property Property::parse(std::string_view name) {
    if (name == "all" || name == "I") return {PropKind::All};
    if (name == "total" || name == "T") return {PropKind::MinDegOne};
    if (name == "forest" || name == "F") return {PropKind::Forest};
    if (name == "matching" || name == "M") return {PropKind::PerfectMatching};
    if (name == "connected" || name == "C") return {PropKind::Connected};
    if (name.starts_with("maxdeg:")) {
        int k = -1;
        auto tail = name.substr(7);
        auto res = std::from_chars(tail.data(), tail.data() + tail.size(), k);
        if (res.ec != std::errc{} || res.ptr != tail.data() + tail.size() || k < 0)
            throw InvalidParameter("maxdeg wants a nonnegative integer: " + std::string(name));
        return {PropKind::MaxDegK, k};
    }
    throw InvalidParameter("unknown property name: " + std::string(name));
}

std::string Property::name() const {
    switch (kind) {
        case PropKind::All: return "all";
        case PropKind::MinDegOne: return "total";
        case PropKind::Forest: return "forest";
        case PropKind::PerfectMatching: return "matching";
        case PropKind::MaxDegK: return "maxdeg:" + std::to_string(k);
        case PropKind::Connected: return "connected";
    }
    return "?";
}

namespace {

// Match the lowest unmatched vertex against each of its unmatched neighbors.
// Failed sub-states are memoized; exact on general graphs at our scale.
bool match_rest(const Graph& g, VertexSet unmatched, std::unordered_set<VertexSet>& dead) {
    if (unmatched == 0) return true;
    if (dead.contains(unmatched)) return false;
    int v = std::countr_zero(unmatched);
    VertexSet candidates = g.neighbors(v) & unmatched;
    for (int w : vs_vertices(candidates))
        if (match_rest(g, unmatched & ~vs_bit(v) & ~vs_bit(w), dead)) return true;
    dead.insert(unmatched);
    return false;
}

bool has_pm_subset(const Graph& g, VertexSet s) {
    if (vs_size(s) % 2 != 0) return false;
    std::unordered_set<VertexSet> dead;
    return match_rest(g, s, dead);
}

bool forest_subset(const Graph& g, VertexSet s) {
    // acyclic iff |E| = |V| - #components
    int edges = 0;
    for (int v : vs_vertices(s)) edges += vs_size(g.neighbors(v) & s);
    edges /= 2;
    int components = 0;
    VertexSet todo = s;
    while (todo) {
        ++components;
        VertexSet comp = vs_bit(std::countr_zero(todo));
        for (;;) {
            VertexSet grown = comp;
            for (int v : vs_vertices(comp)) grown |= g.neighbors(v) & s;
            if (grown == comp) break;
            comp = grown;
        }
        todo &= ~comp;
    }
    return edges == vs_size(s) - components;
}

}  // namespace

bool holds(const Property& prop, const Graph& g, VertexSet s) {
    if (s & ~g.vertices()) throw InvalidParameter("holds: set exceeds host graph");
    switch (prop.kind) {
        case PropKind::All:
            return true;
        case PropKind::MinDegOne:
            for (int v : vs_vertices(s))
                if ((g.neighbors(v) & s) == 0) return false;
            return true;
        case PropKind::Forest:
            return forest_subset(g, s);
        case PropKind::PerfectMatching:
            return has_pm_subset(g, s);
        case PropKind::MaxDegK:
            for (int v : vs_vertices(s))
                if (vs_size(g.neighbors(v) & s) > prop.k) return false;
            return true;
        case PropKind::Connected:
            return is_connected_subset(g, s);
    }
    return false;
}

bool has_perfect_matching(const Graph& g) { return has_pm_subset(g, g.vertices()); }

bool is_forest(const Graph& g) { return forest_subset(g, g.vertices()); }

}  // namespace glpdom
