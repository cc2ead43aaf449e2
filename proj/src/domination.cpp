#include "glpdom/domination.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace glpdom {

Guards Guards::from_env() {
    Guards g;
    if (const char* env = std::getenv("GLPDOM_GUARD_N")) {
        int n = 0;
        auto res = std::from_chars(env, env + std::string_view(env).size(), n);
        if (res.ec == std::errc{} && n > 0) g.subset = std::min(n, kMaxVertices);
    }
    return g;
}

bool is_dominating(const Graph& g, VertexSet s) {
    VertexSet covered = 0;
    for (int v : vs_vertices(s)) covered |= g.closed_neighbors(v);
    return covered == g.vertices();
}

bool is_ab_dominating(const Graph& g, VertexSet s, const PropertyPair& pair) {
    return is_dominating(g, s) && holds(pair.a, g, s) && holds(pair.b, g, g.vertices() & ~s);
}

bool superset_closed(const PropertyPair& pair) {
    bool a_ok = pair.a.kind == PropKind::All || pair.a.kind == PropKind::MinDegOne;
    return a_ok && pair.b.kind == PropKind::All;
}

bool is_minimal_ab_dominating(const Graph& g, VertexSet s, const PropertyPair& pair,
                              int subset_guard) {
    if (!is_ab_dominating(g, s, pair)) return false;
    if (superset_closed(pair)) {
        for (int v : vs_vertices(s))
            if (is_ab_dominating(g, s & ~vs_bit(v), pair)) return false;
        return true;
    }
    if (vs_size(s) > subset_guard)
        throw SizeLimitExceeded("minimality subset check guard exceeded (|s| > " +
                                std::to_string(subset_guard) + ")");
    for (VertexSet t = (s - 1) & s; t; t = (t - 1) & s)
        if (is_ab_dominating(g, t, pair)) return false;
    return true;
}

namespace {

// Gosper's hack: next mask with the same popcount.
inline VertexSet next_same_size(VertexSet x) {
    VertexSet c = x & -x;
    VertexSet r = x + c;
    return (((x ^ r) >> 2) / c) | r;
}

// Feasibility of every subset, indexed by mask; requires n <= guards.family.
std::vector<char> feasibility_table(const Graph& g, const PropertyPair& pair,
                                    const Guards& guards) {
    int n = g.order();
    if (n > guards.family)
        throw SizeLimitExceeded("family enumeration guard exceeded (n > " +
                                std::to_string(guards.family) + ")");
    std::vector<char> feas(std::size_t(1) << n, 0);
    for (VertexSet m = 0; m < (VertexSet{1} << n); ++m)
        feas[m] = is_ab_dominating(g, m, pair);
    return feas;
}

// reach[m] = some submask of m (possibly m) is feasible.
std::vector<char> downward_reach(const std::vector<char>& feas, int n) {
    std::vector<char> reach(feas);
    for (VertexSet m = 1; m < (VertexSet{1} << n); ++m) {
        if (reach[m]) continue;
        for (VertexSet rest = m; rest; rest &= rest - 1)
            if (reach[m & ~(rest & -rest)]) {
                reach[m] = 1;
                break;
            }
    }
    return reach;
}

}  // namespace

std::vector<VertexSet> enumerate_minimal(const Graph& g, const PropertyPair& pair,
                                         const Guards& guards) {
    int n = g.order();
    auto feas = feasibility_table(g, pair, guards);
    auto reach = downward_reach(feas, n);
    std::vector<VertexSet> out;
    for (VertexSet m = 0; m < (VertexSet{1} << n); ++m) {
        if (!feas[m]) continue;
        bool minimal = true;
        for (VertexSet rest = m; rest && minimal; rest &= rest - 1)
            if (reach[m & ~(rest & -rest)]) minimal = false;
        if (minimal) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), vs_lex_less);
    return out;
}

ParamValue gamma_ab(const Graph& g, const PropertyPair& pair, const Guards& guards) {
    int n = g.order();
    if (n > guards.subset)
        throw SizeLimitExceeded("subset search guard exceeded (n > " +
                                std::to_string(guards.subset) + ")");
    if (n == 0) return {0, 0};
    // Domination needs at least ceil(n / (Delta + 1)) vertices.
    int lb = (n + degree_stats(g).second) / (degree_stats(g).second + 1);
    for (int c = std::max(lb, 1); c <= n; ++c) {
        std::optional<VertexSet> best;
        VertexSet m = vs_full(c);
        for (;;) {
            if (is_ab_dominating(g, m, pair) && (!best || vs_lex_less(m, *best))) best = m;
            if (m == (vs_full(c) << (n - c))) break;
            m = next_same_size(m);
        }
        if (best) return {c, *best};
    }
    return {std::nullopt, 0};
}

std::vector<VertexSet> gamma_set_family(const Graph& g, const PropertyPair& pair,
                                        const Guards& guards) {
    ParamValue gv = gamma_ab(g, pair, guards);
    if (!gv.value) return {};
    int n = g.order(), c = *gv.value;
    std::vector<VertexSet> out;
    if (c == 0) return {0};
    VertexSet m = vs_full(c);
    for (;;) {
        if (is_ab_dominating(g, m, pair)) out.push_back(m);
        if (m == (vs_full(c) << (n - c))) break;
        m = next_same_size(m);
    }
    std::sort(out.begin(), out.end(), vs_lex_less);
    return out;
}

ParamValue Gamma_ab(const Graph& g, const PropertyPair& pair, const Guards& guards) {
    auto family = enumerate_minimal(g, pair, guards);
    if (family.empty()) return {std::nullopt, 0};
    // enumerate_minimal sorts by cardinality then lex; the first set of the
    // largest cardinality is the lex-least witness.
    int best = vs_size(family.back());
    auto it = std::find_if(family.begin(), family.end(),
                           [&](VertexSet s) { return vs_size(s) == best; });
    return {best, *it};
}

namespace {

const Property kAll{PropKind::All};
const Property kTotal{PropKind::MinDegOne};
const Property kForest{PropKind::Forest};
const Property kMatching{PropKind::PerfectMatching};
const Property kConnected{PropKind::Connected};
const Property kIndependent{PropKind::MaxDegK, 0};

}  // namespace

ParamName parse_param(const std::string& name) {
    if (name == "gamma") return {name, {kAll, kAll}, false};
    if (name == "i") return {name, {kIndependent, kAll}, false};
    if (name == "beta0") return {name, {kIndependent, kAll}, true};
    if (name == "gamma_t") return {name, {kTotal, kAll}, false};
    if (name == "gamma_r") return {name, {kAll, kTotal}, false};
    if (name == "gamma_tr") return {name, {kTotal, kTotal}, false};
    if (name == "gamma_oc") return {name, {kAll, kConnected}, false};
    if (name == "gamma_t_oc") return {name, {kTotal, kConnected}, false};
    if (name == "gamma_p") return {name, {kMatching, kAll}, false};
    if (name == "gamma_a") return {name, {kForest, kAll}, false};
    if (name == "gamma_mc") return {name, {kMatching, kConnected}, false};
    if (name.starts_with("gamma_k:")) {
        Property sk = Property::parse("maxdeg:" + name.substr(8));
        return {name, {sk, kAll}, false};
    }
    throw InvalidParameter("unknown parameter name: " + name);
}

ParamValue param(const Graph& g, const ParamName& name, bool upper, const Guards& guards) {
    return (upper || name.upper) ? Gamma_ab(g, name.pair, guards) : gamma_ab(g, name.pair, guards);
}

const std::vector<ParamName>& named_pairs() {
    static const std::vector<ParamName> pairs = {
        parse_param("gamma"),   parse_param("i"),          parse_param("gamma_t"),
        parse_param("gamma_r"), parse_param("gamma_tr"),   parse_param("gamma_oc"),
        parse_param("gamma_p"), parse_param("gamma_t_oc"), parse_param("gamma_mc"),
    };
    return pairs;
}

bool is_efficient_dominating(const Graph& g, VertexSet d) {
    for (int v = 0; v < g.order(); ++v)
        if (vs_size(g.closed_neighbors(v) & d) != 1) return false;
    return true;
}

namespace {

void efficient_search(const Graph& g, VertexSet chosen, VertexSet covered,
                      std::vector<VertexSet>& out) {
    if (covered == g.vertices()) {
        out.push_back(chosen);
        return;
    }
    // The lowest uncovered vertex must be dominated by exactly one new pick.
    int v = std::countr_zero(g.vertices() & ~covered);
    for (int u : vs_vertices(g.closed_neighbors(v)))
        if ((g.closed_neighbors(u) & covered) == 0)
            efficient_search(g, chosen | vs_bit(u), covered | g.closed_neighbors(u), out);
}

}  // namespace

std::vector<VertexSet> enumerate_efficient(const Graph& g, const Guards& guards) {
    if (g.order() > guards.subset)
        throw SizeLimitExceeded("efficient-set search guard exceeded");
    std::vector<VertexSet> out;
    efficient_search(g, 0, 0, out);
    std::sort(out.begin(), out.end(), vs_lex_less);
    return out;
}

bool is_well_ab_dominated(const Graph& g, const PropertyPair& pair, const Guards& guards) {
    ParamValue lo = gamma_ab(g, pair, guards);
    if (!lo.value) throw NoFeasibleSet("no dominating (A,B)-set exists");
    ParamValue hi = Gamma_ab(g, pair, guards);
    return *lo.value == *hi.value;
}

bool strong_equal(const Graph& g, const PropertyPair& p1, const PropertyPair& p2,
                  const Guards& guards) {
    auto f1 = gamma_set_family(g, p1, guards);
    auto f2 = gamma_set_family(g, p2, guards);
    if (f1.empty() || f2.empty()) throw NoFeasibleSet("a side of the strong equality has no set");
    return f1 == f2;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Guards& guards) {
    int n = g.order();
    if (n > guards.family) throw SizeLimitExceeded("independent-set enumeration guard exceeded");
    std::vector<VertexSet> out;
    for (VertexSet m = 0; m < (VertexSet{1} << n); ++m) {
        bool ok = true;
        for (int v : vs_vertices(m))
            if (g.neighbors(v) & m) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int v : vs_vertices(g.vertices() & ~m))
            if ((g.neighbors(v) & m) == 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), vs_lex_less);
    return out;
}

VertexSet i_r_set(const Graph& base, const Factors& factors, VertexSet r, const Guards& guards) {
    if ((int)factors.size() != base.order())
        throw InvalidParameter("i_r_set: factor count must equal base order");
    PropertyPair plain{kAll, kAll};
    if (!is_minimal_ab_dominating(base, r, plain))
        throw InvalidParameter("i_r_set: r is not a minimal dominating set of the base");
    VertexSet out = 0;
    for (int i : vs_vertices(r)) {
        if (base.neighbors(i) & r) continue;  // not isolated in <r>
        ParamValue gf = gamma_ab(factors[i], plain, guards);
        if (gf.value && *gf.value >= 2) out |= vs_bit(i);
    }
    return out;
}

VertexSet d_star_transform(const ProductGraph& p, VertexSet d, const PropertyPair& mu,
                           const Guards& guards) {
    if (!superset_closed(mu))
        throw InvalidParameter("d_star_transform: mu must be gamma or gamma_t");
    for (const Graph& f : p.factors)
        if (f.order() < 2) throw InvalidParameter("d_star_transform: every factor needs order >= 2");
    ParamValue opt = gamma_ab(p.graph, mu, guards);
    if (!opt.value || vs_size(d) != *opt.value || !is_ab_dominating(p.graph, d, mu))
        throw InvalidParameter("d_star_transform: d is not a mu-set of the product");

    VertexSet result = d;
    for (int i = 0; i < p.base.order(); ++i) {
        VertexSet hit = d & p.block_mask(i);
        if (vs_size(hit) < 2) continue;
        // z2 = the higher-indexed vertex of the pair; swap for an outside neighbor.
        int z2 = kMaxVertices - 1 - std::countl_zero(hit);
        VertexSet outside = p.graph.neighbors(z2) & ~p.block_mask(i);
        if (outside == 0)
            throw InvalidParameter("d_star_transform: doubly-hit block has no outside neighbor");
        result = (result & ~vs_bit(z2)) | vs_bit(std::countr_zero(outside));
    }
    return result;
}

}  // namespace glpdom
