#include "glpdom/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "glpdom/graph_io.hpp"

namespace glpdom {

using json = nlohmann::json;

TheoremId parse_theorem(const std::string& name) {
    std::string canon = name;
    if (!canon.empty() && canon[0] == 't') canon[0] = 'T';
    for (TheoremId id : all_theorems())
        if (theorem_name(id) == canon) return id;
    throw InvalidParameter("unknown theorem id: " + name);
}

std::string theorem_name(TheoremId id) { return "T" + std::to_string((int)id + 1); }

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (int i = 0; i < 17; ++i) v.push_back((TheoremId)i);
        return v;
    }();
    return ids;
}

Verdict Verdict::ok(json details) { return {Status::Holds, "", std::move(details)}; }
Verdict Verdict::violated(std::string reason, json details) {
    return {Status::Violated, std::move(reason), std::move(details)};
}
Verdict Verdict::not_applicable(std::string reason) {
    return {Status::NotApplicable, std::move(reason), json::object()};
}
const char* Verdict::status_name() const {
    switch (status) {
        case Status::Holds: return "holds";
        case Status::Violated: return "violated";
        case Status::NotApplicable: return "not-applicable";
    }
    return "?";
}

namespace {

const PropertyPair kGamma{{PropKind::All}, {PropKind::All}};
const PropertyPair kGammaT{{PropKind::MinDegOne}, {PropKind::All}};
const PropertyPair kGammaR{{PropKind::All}, {PropKind::MinDegOne}};
const PropertyPair kGammaTR{{PropKind::MinDegOne}, {PropKind::MinDegOne}};
const PropertyPair kGammaOC{{PropKind::All}, {PropKind::Connected}};
const PropertyPair kGammaTOC{{PropKind::MinDegOne}, {PropKind::Connected}};
const PropertyPair kGammaP{{PropKind::PerfectMatching}, {PropKind::All}};
const PropertyPair kGammaMC{{PropKind::PerfectMatching}, {PropKind::Connected}};
const PropertyPair kInd{{PropKind::MaxDegK, 0}, {PropKind::All}};

std::string pair_name(const PropertyPair& p) { return p.a.name() + "," + p.b.name(); }

int val(const ParamValue& v) { return *v.value; }

bool base_hypothesis(const Graph& base) { return base.order() >= 2 && is_connected(base); }

int min_factor_order(const Factors& fs) {
    int m = kMaxVertices;
    for (const Graph& f : fs) m = std::min(m, f.order());
    return m;
}

std::vector<int> factor_gammas(const Factors& fs, const Guards& guards) {
    std::vector<int> out;
    for (const Graph& f : fs) out.push_back(val(gamma_ab(f, kGamma, guards)));
    return out;
}

// Local (factor) indices of d within block i.
VertexSet block_local(const ProductGraph& p, VertexSet d, int i) {
    VertexSet hit = d & p.block_mask(i);
    VertexSet local = 0;
    for (int v : vs_vertices(hit)) local |= vs_bit(v - p.offsets[i]);
    return local;
}

// Is s (a product vertex set with <=1 vertex per block) a minimal (A,B)-
// dominating set of some G-layer containing it?
bool minimal_in_layer(const ProductGraph& p, VertexSet s, const PropertyPair& pair) {
    std::vector<int> choice(p.base.order(), 0);
    for (int v : vs_vertices(s)) {
        auto [i, u] = p.locate(v);
        choice[i] = u;
    }
    VertexSet layer = g_layer(p, choice);
    if ((s & ~layer) != 0) return false;
    Graph induced = induced_subgraph(p.graph, layer);
    std::vector<int> labels = vs_vertices(layer);
    VertexSet local = 0;
    for (int v : vs_vertices(s))
        local |= vs_bit((int)(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
    return is_minimal_ab_dominating(induced, local, pair);
}

Verdict check_t1(const Graph& base, const Factors& factors, const Guards& guards) {
    if (base.order() < 2) return Verdict::not_applicable("base order < 2");
    ProductGraph p = build_product(base, factors);
    json d{{"product_order", p.graph.order()}};

    if (is_connected(p.graph) != is_connected(base))
        return Verdict::violated("connectivity lifting failed", d);

    if (base.order() <= guards.iso) {
        std::vector<int> lo(base.order(), 0), hi(base.order());
        for (int i = 0; i < base.order(); ++i) hi[i] = factors[i].order() - 1;
        for (const auto& choice : {lo, hi}) {
            VertexSet layer = g_layer(p, choice);
            if (!are_isomorphic(induced_subgraph(p.graph, layer), base, guards.iso))
                return Verdict::violated("layer not isomorphic to base",
                                         json{{"layer", vs_to_string(layer)}});
        }
    }

    if (p.graph.order() <= 14) {
        for (int x = 0; x < p.graph.order(); ++x)
            for (int y = x + 1; y < p.graph.order(); ++y) {
                auto [i, u] = p.locate(x);
                auto [j, v] = p.locate(y);
                if (i == j) continue;
                if (distance(p.graph, x, y) != distance(base, i, j))
                    return Verdict::violated("distance lifting failed",
                                             json{{"x", x}, {"y", y}});
            }
    }

    if (base.edge_count() == 0) {
        for (auto [u, v] : p.graph.edges())
            if (p.block_of(u) != p.block_of(v))
                return Verdict::violated("edgeless base produced a cross-block edge", d);
    }
    return Verdict::ok(d);
}

Verdict check_t2(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    ProductGraph p = build_product(base, factors);
    int gt_base = val(gamma_ab(base, kGammaT, guards));
    int gt_prod = val(gamma_ab(p.graph, kGammaT, guards));
    json d{{"gamma_t_base", gt_base}, {"gamma_t_product", gt_prod}};
    if (gt_base != gt_prod) return Verdict::violated("gamma_t not invariant", d);

    // A gamma_t-set of a layer must be a gamma_t-set of the whole product.
    std::vector<int> zeros(base.order(), 0);
    VertexSet layer = g_layer(p, zeros);
    Graph induced = induced_subgraph(p.graph, layer);
    std::vector<int> labels = vs_vertices(layer);
    for (VertexSet s : gamma_set_family(induced, kGammaT, guards)) {
        VertexSet lifted = 0;
        for (int v : vs_vertices(s)) lifted |= vs_bit(labels[v]);
        if (!is_ab_dominating(p.graph, lifted, kGammaT) || vs_size(lifted) != gt_prod)
            return Verdict::violated("layer gamma_t-set is not a product gamma_t-set",
                                     json{{"set", vs_to_string(lifted)}});
    }
    return Verdict::ok(d);
}

Verdict check_t3(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    ProductGraph p = build_product(base, factors);
    int g_base = val(gamma_ab(base, kGamma, guards));
    int g_prod = val(gamma_ab(p.graph, kGamma, guards));
    json d{{"gamma_base", g_base}, {"gamma_product", g_prod}};
    if (g_base > g_prod) return Verdict::violated("gamma(base) > gamma(product)", d);

    std::vector<int> fg = factor_gammas(factors, guards);
    bool witness_exists = false;
    for (VertexSet I : gamma_set_family(base, kGamma, guards)) {
        bool ok = true;
        for (int i : vs_vertices(I))
            if ((base.neighbors(i) & I) == 0 && fg[i] != 1) ok = false;
        if (ok) {
            witness_exists = true;
            break;
        }
    }
    if ((g_base == g_prod) != witness_exists)
        return Verdict::violated("equality characterization failed",
                                 json{{"equal", g_base == g_prod}, {"witness", witness_exists}});

    if (g_base == g_prod) {
        for (VertexSet D : gamma_set_family(p.graph, kGamma, guards))
            for (int i = 0; i < base.order(); ++i)
                if (vs_size(D & p.block_mask(i)) > 1)
                    return Verdict::violated("equality case: gamma-set hits a block twice",
                                             json{{"set", vs_to_string(D)}});
    }

    bool all_one = std::all_of(fg.begin(), fg.end(), [](int g) { return g == 1; });
    if (all_one && g_base != g_prod)
        return Verdict::violated("all factor gammas 1 but gamma changed", d);
    return Verdict::ok(d);
}

Verdict check_t4(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    ProductGraph p = build_product(base, factors);
    int gG = val(gamma_ab(base, kGamma, guards));
    int gP = val(gamma_ab(p.graph, kGamma, guards));
    int tG = val(gamma_ab(base, kGammaT, guards));
    int tP = val(gamma_ab(p.graph, kGammaT, guards));
    json d{{"gamma_base", gG}, {"gamma_product", gP}, {"gamma_t_base", tG}, {"gamma_t_product", tP}};
    bool chain = gG <= gP && gP <= tP && tP == tG && tG <= 2 * gG && 2 * gG <= 2 * gP;
    if (!chain) return Verdict::violated("gamma/gamma_t chain failed", d);
    if (gG == tG && gP != tP) return Verdict::violated("gamma==gamma_t did not lift", d);
    if (tP == 2 * gP && tG != 2 * gG) return Verdict::violated("gamma_t==2gamma did not descend", d);
    return Verdict::ok(d);
}

Verdict check_t5(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    if (min_factor_order(factors) < 2) return Verdict::not_applicable("a factor has order 1");
    ProductGraph p = build_product(base, factors);
    std::vector<int> fg = factor_gammas(factors, guards);
    bool gammas_ge2 = std::all_of(fg.begin(), fg.end(), [](int g) { return g >= 2; });

    for (const auto& [mu, restrained, outer] :
         {std::tuple{kGamma, kGammaR, kGammaOC}, std::tuple{kGammaT, kGammaTR, kGammaTOC}}) {
        auto family = gamma_set_family(p.graph, mu, guards);
        if (family.empty()) continue;
        int mu_val = vs_size(family.front());
        for (VertexSet D : family) {
            std::vector<int> doubly;
            for (int i = 0; i < base.order(); ++i) {
                int c = vs_size(D & p.block_mask(i));
                if (c > 2)
                    return Verdict::violated("block intersection above two",
                                             json{{"set", vs_to_string(D)}, {"block", i}});
                if (c == 2) doubly.push_back(i);
            }
            // (i) doubly-hit block: pair is a mu-set of the factor, no outside D-neighbors
            for (int s : doubly) {
                if (D & ~p.block_mask(s))
                    for (int j : vs_vertices(base.neighbors(s)))
                        if (D & p.block_mask(j))
                            return Verdict::violated(
                                "doubly-hit block adjacent to outside D-vertices",
                                json{{"set", vs_to_string(D)}, {"block", s}});
                VertexSet local = block_local(p, D, s);
                ParamValue fmu = gamma_ab(factors[s], mu, guards);
                if (!fmu.value || vs_size(local) != val(fmu) ||
                    !is_ab_dominating(factors[s], local, mu))
                    return Verdict::violated("doubly-hit pair not a factor mu-set",
                                             json{{"set", vs_to_string(D)}, {"block", s}});
            }
            for (std::size_t a = 0; a < doubly.size(); ++a)
                for (std::size_t b = a + 1; b < doubly.size(); ++b) {
                    auto dist = distance(base, doubly[a], doubly[b]);
                    if (dist && *dist < 3)
                        return Verdict::violated("doubly-hit blocks at base distance < 3",
                                                 json{{"set", vs_to_string(D)}});
                }
            // (ii)+(iii) the one-per-block transform keeps optimality and gains
            // the restrained/outer-connected properties
            VertexSet U = doubly.empty() ? D : d_star_transform(p, D, mu, guards);
            if (vs_size(U) != mu_val || !is_ab_dominating(p.graph, U, mu))
                return Verdict::violated("transform lost the mu-set property",
                                         json{{"set", vs_to_string(D)}});
            for (int i = 0; i < base.order(); ++i)
                if (vs_size(U & p.block_mask(i)) > 1)
                    return Verdict::violated("transform left two vertices in a block",
                                             json{{"set", vs_to_string(U)}});
            for (const PropertyPair& nu : {restrained, outer})
                if (!is_ab_dominating(p.graph, U, nu) ||
                    vs_size(U) != val(gamma_ab(p.graph, nu, guards)))
                    return Verdict::violated("transform not optimal for " + pair_name(nu),
                                             json{{"set", vs_to_string(U)}});
            // (iv) with every factor gamma >= 2, a transformed gamma-set is
            // simultaneously optimal for the five variants
            if (gammas_ge2 && mu == kGamma) {
                for (const PropertyPair& nu : {kGammaR, kGammaT, kGammaTR, kGammaOC, kGammaTOC})
                    if (!is_ab_dominating(p.graph, U, nu) ||
                        vs_size(U) != val(gamma_ab(p.graph, nu, guards)))
                        return Verdict::violated("simultaneous optimality failed for " +
                                                     pair_name(nu),
                                                 json{{"set", vs_to_string(U)}});
            }
        }
    }
    return Verdict::ok();
}

Verdict check_t6(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    if (min_factor_order(factors) < 2) return Verdict::not_applicable("a factor has order 1");
    ProductGraph p = build_product(base, factors);
    int g = val(gamma_ab(p.graph, kGamma, guards));
    int gr = val(gamma_ab(p.graph, kGammaR, guards));
    int goc = val(gamma_ab(p.graph, kGammaOC, guards));
    int tG = val(gamma_ab(base, kGammaT, guards));
    int t = val(gamma_ab(p.graph, kGammaT, guards));
    int tr = val(gamma_ab(p.graph, kGammaTR, guards));
    int toc = val(gamma_ab(p.graph, kGammaTOC, guards));
    json d{{"gamma", g},   {"gamma_r", gr}, {"gamma_oc", goc}, {"gamma_t_base", tG},
           {"gamma_t", t}, {"gamma_tr", tr}, {"gamma_t_oc", toc}};
    if (g != gr || g != goc) return Verdict::violated("gamma equalities failed", d);
    if (tG != t || t != tr || t != toc) return Verdict::violated("gamma_t equalities failed", d);
    return Verdict::ok(d);
}

Verdict check_t7(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    if (min_factor_order(factors) < 3) return Verdict::not_applicable("a factor has order < 3");
    ProductGraph p = build_product(base, factors);
    if (!strong_equal(p.graph, kGamma, kGammaR, guards) ||
        !strong_equal(p.graph, kGamma, kGammaOC, guards))
        return Verdict::violated("gamma-family strong equality failed");
    if (!strong_equal(p.graph, kGammaT, kGammaTR, guards) ||
        !strong_equal(p.graph, kGammaT, kGammaTOC, guards))
        return Verdict::violated("gamma_t-family strong equality failed");
    return Verdict::ok();
}

Verdict check_t8(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    std::vector<int> fg = factor_gammas(factors, guards);
    if (!std::all_of(fg.begin(), fg.end(), [](int g) { return g >= 2; }))
        return Verdict::not_applicable("a factor has gamma < 2");
    ProductGraph p = build_product(base, factors);
    int g = val(gamma_ab(p.graph, kGamma, guards));
    json d{{"gamma", g}};
    for (const PropertyPair& nu : {kGammaR, kGammaT, kGammaTR, kGammaOC, kGammaTOC})
        if (val(gamma_ab(p.graph, nu, guards)) != g)
            return Verdict::violated("six-parameter equality failed at " + pair_name(nu), d);
    if (std::all_of(fg.begin(), fg.end(), [](int x) { return x >= 3; })) {
        for (const PropertyPair& nu : {kGammaR, kGammaT, kGammaTR, kGammaOC, kGammaTOC})
            if (!strong_equal(p.graph, kGamma, nu, guards))
                return Verdict::violated("six-parameter strong equality failed at " +
                                         pair_name(nu), d);
    }
    return Verdict::ok(d);
}

Verdict check_t9(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    if (min_factor_order(factors) < 2) return Verdict::not_applicable("a factor has order 1");
    ProductGraph p = build_product(base, factors);
    auto family = gamma_set_family(p.graph, kGamma, guards);
    std::optional<VertexSet> hypothesis_set;
    for (VertexSet D : family) {
        bool ok = true;
        for (int i = 0; i < base.order() && ok; ++i)
            if (vs_size(D & p.block_mask(i)) == 1) ok = false;
        if (ok) {
            hypothesis_set = D;
            break;
        }
    }
    if (!hypothesis_set)
        return Verdict::not_applicable("no gamma-set avoids singly-hit blocks");

    VertexSet D = *hypothesis_set;
    VertexSet hit = 0;
    for (int i = 0; i < base.order(); ++i) {
        int c = vs_size(D & p.block_mask(i));
        if (c == 2) {
            hit |= vs_bit(i);
            VertexSet local = block_local(p, D, i);
            if (vs_size(local) != val(gamma_ab(factors[i], kGamma, guards)) ||
                !is_ab_dominating(factors[i], local, kGamma))
                return Verdict::violated("doubly-hit pair not a factor gamma-set",
                                         json{{"set", vs_to_string(D)}, {"block", i}});
        } else if (c != 0) {
            return Verdict::violated("block intersection not in {0,2}",
                                     json{{"set", vs_to_string(D)}, {"block", i}});
        }
    }
    if (!is_efficient_dominating(base, hit))
        return Verdict::violated("hit blocks do not form an efficient dominating set",
                                 json{{"blocks", vs_to_string(hit)}});

    int target = 2 * val(gamma_ab(base, kGamma, guards));
    json d{{"two_gamma_base", target}};
    if (val(gamma_ab(base, kGammaT, guards)) != target)
        return Verdict::violated("gamma_t(base) != 2 gamma(base)", d);
    for (const PropertyPair& nu :
         {kGamma, kGammaR, kGammaT, kGammaTR, kGammaOC, kGammaTOC, kGammaP, kGammaMC}) {
        ParamValue v = gamma_ab(p.graph, nu, guards);
        if (!v.value || val(v) != target)
            return Verdict::violated("efficient chain failed at " + pair_name(nu), d);
    }
    return Verdict::ok(d);
}

struct ApplicablePair {
    PropertyPair pair;
    bool needs_min_deg_one;
};

const std::vector<ApplicablePair>& observation_pairs() {
    static const std::vector<ApplicablePair> pairs = {
        {kGamma, false},
        {{{PropKind::Forest}, {PropKind::All}}, false},
        {{{PropKind::MaxDegK, 0}, {PropKind::All}}, false},
        {{{PropKind::MaxDegK, 1}, {PropKind::All}}, false},
        {{{PropKind::MaxDegK, 2}, {PropKind::All}}, false},
        {kGammaR, true},
        {kGammaT, true},
        {kGammaTR, true},
        {kGammaP, true},
    };
    return pairs;
}

bool pair_applicable(const ApplicablePair& ap, const Factors& factors, const Guards& guards) {
    if (ap.needs_min_deg_one)
        for (const Graph& f : factors)
            if (f.order() == 0 || degree_stats(f).first < 1) return false;
    for (const Graph& f : factors)
        if (!gamma_ab(f, ap.pair, guards).value) return false;
    return true;
}

// The observation assumes every union of minimal factor (A,B)-sets over a
// maximal independent set of the base is itself a minimal dominating
// (A,B)-set of the product. Nullopt when the combination count exceeds the
// cap and the hypothesis cannot be decided.
std::optional<bool> observation_hypothesis(const ProductGraph& p,
                                           const std::vector<VertexSet>& mis,
                                           const Factors& factors, const PropertyPair& pr,
                                           const Guards& guards) {
    constexpr long cap = 4096;
    for (VertexSet I : mis) {
        std::vector<std::vector<VertexSet>> choices;
        long combos = 1;
        for (int i : vs_vertices(I)) {
            choices.push_back(enumerate_minimal(factors[i], pr, guards));
            combos *= (long)choices.back().size();
            if (combos > cap) return std::nullopt;
        }
        std::vector<int> idx = vs_vertices(I);
        for (long t = 0; t < combos; ++t) {
            long rest = t;
            VertexSet U = 0;
            for (std::size_t k = 0; k < choices.size(); ++k) {
                VertexSet local = choices[k][rest % choices[k].size()];
                rest /= (long)choices[k].size();
                for (int v : vs_vertices(local)) U |= vs_bit(p.offsets[idx[k]] + v);
            }
            if (!is_minimal_ab_dominating(p.graph, U, pr)) return false;
        }
    }
    return true;
}

Verdict check_t10(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    ProductGraph p = build_product(base, factors);
    auto mis = maximal_independent_sets(base, guards);
    int i_base = vs_size(*std::min_element(mis.begin(), mis.end(), [](VertexSet a, VertexSet b) {
        return vs_size(a) < vs_size(b);
    }));
    int b0_base = vs_size(*std::max_element(mis.begin(), mis.end(), [](VertexSet a, VertexSet b) {
        return vs_size(a) < vs_size(b);
    }));

    bool any = false;
    for (const ApplicablePair& ap : observation_pairs()) {
        if (!pair_applicable(ap, factors, guards)) continue;
        const PropertyPair& pr = ap.pair;
        auto hyp = observation_hypothesis(p, mis, factors, pr, guards);
        if (!hyp || !*hyp) continue;
        any = true;
        std::vector<int> fgam, fGam;
        for (const Graph& f : factors) {
            fgam.push_back(val(gamma_ab(f, pr, guards)));
            fGam.push_back(val(Gamma_ab(f, pr, guards)));
        }
        auto sum_over = [&](VertexSet I, const std::vector<int>& vals) {
            int s = 0;
            for (int i : vs_vertices(I)) s += vals[i];
            return s;
        };
        int m1 = kMaxVertices * kMaxVertices, m2 = m1, M1 = 0, M2 = 0;
        for (VertexSet I : mis) {
            m1 = std::min(m1, sum_over(I, fgam));
            M1 = std::max(M1, sum_over(I, fGam));
            if (vs_size(I) == i_base) m2 = std::min(m2, sum_over(I, fgam));
            if (vs_size(I) == b0_base) M2 = std::max(M2, sum_over(I, fGam));
        }
        int m3 = i_base * *std::max_element(fgam.begin(), fgam.end());
        int M3 = b0_base * *std::min_element(fGam.begin(), fGam.end());
        int lo = val(gamma_ab(p.graph, pr, guards));
        int hi = val(Gamma_ab(p.graph, pr, guards));
        json d{{"pair", pair_name(pr)}, {"gamma", lo}, {"Gamma", hi},
               {"m1", m1}, {"m2", m2}, {"m3", m3}, {"M1", M1}, {"M2", M2}, {"M3", M3}};
        if (!(lo <= m1 && m1 <= m2 && m2 <= m3))
            return Verdict::violated("minimum chain failed", d);
        if (!(hi >= M1 && M1 >= M2 && M2 >= M3))
            return Verdict::violated("maximum chain failed", d);
    }
    return any ? Verdict::ok()
               : Verdict::not_applicable("no pair satisfies the observation hypothesis");
}

Verdict check_t11(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    ProductGraph p = build_product(base, factors);
    auto mis = maximal_independent_sets(base, guards);
    bool any = false;
    for (const ApplicablePair& ap : observation_pairs()) {
        if (!pair_applicable(ap, factors, guards)) continue;
        const PropertyPair& pr = ap.pair;
        auto hyp = observation_hypothesis(p, mis, factors, pr, guards);
        if (!hyp || !*hyp) continue;
        any = true;
        bool well = is_well_ab_dominated(p.graph, pr, guards);
        std::vector<int> fgam, fGam;
        for (const Graph& f : factors) {
            fgam.push_back(val(gamma_ab(f, pr, guards)));
            fGam.push_back(val(Gamma_ab(f, pr, guards)));
        }
        if (well) {
            for (std::size_t i = 0; i < factors.size(); ++i)
                if (fgam[i] != fGam[i])
                    return Verdict::violated("well product with a non-well factor",
                                             json{{"pair", pair_name(pr)}, {"factor", i}});
            int lo = val(gamma_ab(p.graph, pr, guards));
            for (VertexSet I : mis) {
                int s = 0;
                for (int i : vs_vertices(I)) s += fgam[i];
                if (s != lo)
                    return Verdict::violated("well product: independent-set sum mismatch",
                                             json{{"pair", pair_name(pr)},
                                                  {"set", vs_to_string(I)}});
            }
        }
        bool const_g = std::equal(fgam.begin() + 1, fgam.end(), fgam.begin());
        bool const_G = std::equal(fGam.begin() + 1, fGam.end(), fGam.begin());
        if (const_g && const_G) {
            int i_base = vs_size(mis.front());
            int b0_base = 0;
            for (VertexSet I : mis) {
                i_base = std::min(i_base, vs_size(I));
                b0_base = std::max(b0_base, vs_size(I));
            }
            int lo = val(gamma_ab(p.graph, pr, guards));
            int hi = val(Gamma_ab(p.graph, pr, guards));
            if (!(lo <= i_base * fgam[0] && i_base * fgam[0] <= b0_base * fGam[0] &&
                  b0_base * fGam[0] <= hi))
                return Verdict::violated("constant-factor chain failed",
                                         json{{"pair", pair_name(pr)}});
            if (well && i_base != b0_base)
                return Verdict::violated("well product over a non-well-covered base",
                                         json{{"pair", pair_name(pr)}});
        }
    }
    return any ? Verdict::ok()
               : Verdict::not_applicable("no pair satisfies the observation hypothesis");
}

Verdict check_t12(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    ProductGraph p = build_product(base, factors);
    std::vector<int> fi, fb;
    for (const Graph& f : factors) {
        fi.push_back(val(gamma_ab(f, kInd, guards)));
        fb.push_back(val(Gamma_ab(f, kInd, guards)));
    }
    bool const_i = std::equal(fi.begin() + 1, fi.end(), fi.begin());
    bool const_b = std::equal(fb.begin() + 1, fb.end(), fb.begin());
    if (!const_i && !const_b) return Verdict::not_applicable("factor i and beta0 both vary");
    json d;
    if (const_i) {
        int lhs = val(gamma_ab(p.graph, kInd, guards));
        int rhs = val(gamma_ab(base, kInd, guards)) * fi[0];
        d["i_product"] = lhs;
        d["i_expected"] = rhs;
        if (lhs != rhs) return Verdict::violated("i multiplicativity failed", d);
    }
    if (const_b) {
        int lhs = val(Gamma_ab(p.graph, kInd, guards));
        int rhs = val(Gamma_ab(base, kInd, guards)) * fb[0];
        d["beta0_product"] = lhs;
        d["beta0_expected"] = rhs;
        if (lhs != rhs) return Verdict::violated("beta0 multiplicativity failed", d);
    }
    return Verdict::ok(d);
}

Verdict check_t13(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    ProductGraph p = build_product(base, factors);
    bool lhs = is_well_ab_dominated(p.graph, kInd, guards);
    std::vector<int> fb;
    bool factors_ok = true;
    for (const Graph& f : factors) {
        fb.push_back(val(Gamma_ab(f, kInd, guards)));
        if (val(gamma_ab(f, kInd, guards)) != fb.back()) factors_ok = false;
    }
    bool sums_equal = true;
    auto mis = maximal_independent_sets(base, guards);
    std::optional<int> expected;
    for (VertexSet I : mis) {
        int s = 0;
        for (int i : vs_vertices(I)) s += fb[i];
        if (!expected) expected = s;
        if (s != *expected) sums_equal = false;
    }
    bool rhs = factors_ok && sums_equal;
    json d{{"well_covered", lhs}, {"factors_well_covered", factors_ok}, {"sums_equal", sums_equal}};
    if (lhs != rhs) return Verdict::violated("well-covered characterization failed", d);
    return Verdict::ok(d);
}

Verdict check_t14(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    if (min_factor_order(factors) < 2) return Verdict::not_applicable("a factor has order 1");
    ProductGraph p = build_product(base, factors);
    bool lhs = is_well_ab_dominated(p.graph, kGamma, guards);

    bool cond_factors = true;
    for (const Graph& f : factors) {
        int lo = val(gamma_ab(f, kGamma, guards));
        int hi = val(Gamma_ab(f, kGamma, guards));
        if (lo != hi || lo > 2) cond_factors = false;
    }
    std::optional<int> k;
    bool cond_constant = true;
    for (VertexSet R : enumerate_minimal(base, kGamma, guards)) {
        int value = vs_size(R) + vs_size(i_r_set(base, factors, R, guards));
        if (!k) k = value;
        if (value != *k) cond_constant = false;
    }
    bool rhs = cond_factors && cond_constant;
    json d{{"well_dominated", lhs}, {"factors_ok", cond_factors}, {"R_plus_IR_constant", cond_constant}};
    if (lhs != rhs) return Verdict::violated("well-dominated characterization failed", d);
    if (lhs && *k != val(gamma_ab(p.graph, kGamma, guards)))
        return Verdict::violated("|R| + |I_R| != gamma(product) in the well case", d);
    return Verdict::ok(d);
}

Verdict check_t15(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    if (min_factor_order(factors) < 2) return Verdict::not_applicable("a factor has order 1");
    std::vector<int> fgam, fGam;
    for (const Graph& f : factors) {
        fgam.push_back(val(gamma_ab(f, kGamma, guards)));
        fGam.push_back(val(Gamma_ab(f, kGamma, guards)));
    }
    if (!std::equal(fgam.begin() + 1, fgam.end(), fgam.begin()) ||
        !std::equal(fGam.begin() + 1, fGam.end(), fGam.begin()))
        return Verdict::not_applicable("factor gamma or Gamma values vary");
    ProductGraph p = build_product(base, factors);
    bool lhs = is_well_ab_dominated(p.graph, kGamma, guards);
    bool base_well = is_well_ab_dominated(base, kGamma, guards);
    bool factors_complete = std::all_of(factors.begin(), factors.end(),
                                        [](const Graph& f) { return is_complete(f); });
    bool factors_well_g2 = fgam[0] == 2 && fgam[0] == fGam[0];
    bool rhs = (base_well && factors_complete) || (is_complete(base) && factors_well_g2);
    json d{{"well", lhs}, {"base_well", base_well}, {"factors_complete", factors_complete},
           {"base_complete", is_complete(base)}, {"factors_well_gamma2", factors_well_g2}};
    if (lhs != rhs) return Verdict::violated("uniform well-dominated characterization failed", d);
    return Verdict::ok(d);
}

Verdict check_t16(const Graph& base, const Factors& factors, const Guards& guards) {
    if (!base_hypothesis(base)) return Verdict::not_applicable("base not connected of order >= 2");
    ProductGraph p = build_product(base, factors);
    bool all_deg1 = true, all_deg0 = true;
    for (const Graph& f : factors) {
        int mn = f.order() ? degree_stats(f).first : 0;
        if (mn < 1) all_deg1 = false;
        if (mn != 0) all_deg0 = false;
    }

    if (all_deg1) {
        bool lhs = is_well_ab_dominated(p.graph, kGammaT, guards);
        bool rhs = is_complete(base);
        for (const Graph& f : factors) {
            if (!rhs) break;
            int lo = val(gamma_ab(f, kGammaT, guards));
            int hi = val(Gamma_ab(f, kGammaT, guards));
            if (lo != 2 || hi != 2) rhs = false;
        }
        json d{{"well_total", lhs}, {"rhs", rhs}};
        if (lhs != rhs)
            return Verdict::violated("well-total characterization (min degree >= 1) failed", d);
        if (lhs && val(gamma_ab(p.graph, kGammaT, guards)) != 2)
            return Verdict::violated("well-total product must have gamma_t = 2", d);
        return Verdict::ok(d);
    }

    if (all_deg0 && min_factor_order(factors) >= 2) {
        int Gt_base = val(Gamma_ab(base, kGammaT, guards));
        int Gt_prod = val(Gamma_ab(p.graph, kGammaT, guards));
        json d{{"Gamma_t_base", Gt_base}, {"Gamma_t_product", Gt_prod}};
        if (Gt_base != Gt_prod)
            return Verdict::violated("Gamma_t not invariant for isolated-vertex factors", d);
        bool lhs = is_well_ab_dominated(p.graph, kGammaT, guards);
        bool rhs = is_well_ab_dominated(base, kGammaT, guards);
        if (lhs != rhs)
            return Verdict::violated("well-total reduction to the base failed", d);
        // Minimal total dominating sets live inside G-layers, in both directions.
        for (VertexSet T : enumerate_minimal(p.graph, kGammaT, guards)) {
            for (int i = 0; i < base.order(); ++i)
                if (vs_size(T & p.block_mask(i)) > 1)
                    return Verdict::violated("minimal total set hits a block twice",
                                             json{{"set", vs_to_string(T)}});
            if (!minimal_in_layer(p, T, kGammaT))
                return Verdict::violated("minimal total set not minimal within its layer",
                                         json{{"set", vs_to_string(T)}});
        }
        std::vector<int> zeros(base.order(), 0);
        VertexSet layer = g_layer(p, zeros);
        Graph induced = induced_subgraph(p.graph, layer);
        std::vector<int> labels = vs_vertices(layer);
        for (VertexSet s : enumerate_minimal(induced, kGammaT, guards)) {
            VertexSet lifted = 0;
            for (int v : vs_vertices(s)) lifted |= vs_bit(labels[v]);
            if (!is_minimal_ab_dominating(p.graph, lifted, kGammaT))
                return Verdict::violated("layer minimal total set not minimal in the product",
                                         json{{"set", vs_to_string(lifted)}});
        }
        return Verdict::ok(d);
    }

    return Verdict::not_applicable("factors mix isolated-vertex and min-degree-1 cases");
}

Verdict check_t17(const Graph& base, const Factors&, const Guards& guards) {
    int n = base.order();
    if (n < 6 || n % 4 != 2) return Verdict::not_applicable("order is not 4k+2 with k >= 1");
    int k = (n - 2) / 4;
    std::vector<int> jumps;
    for (int j = 1; j <= k; ++j) {
        jumps.push_back(j);
        jumps.push_back(n - j);
    }
    if (!(base == circulant_graph(n, jumps)))
        return Verdict::not_applicable("base is not the circulant C(4k+2; +-1..k)");
    int gt = val(gamma_ab(base, kGammaT, guards));
    json d{{"k", k}, {"n", n}, {"gamma_t", gt}};
    if (gt % 2 != 0) return Verdict::violated("gamma_t is odd", d);
    for (VertexSet e : enumerate_efficient(base, guards))
        if (2 * vs_size(e) == gt) {
            d["eds"] = vs_to_string(e);
            return Verdict::ok(d);
        }
    return Verdict::violated("no efficient dominating set of cardinality gamma_t/2", d);
}

}  // namespace

Verdict check(TheoremId id, const Graph& base, const Factors& factors, const Guards& guards) {
    try {
        switch (id) {
            case TheoremId::T1: return check_t1(base, factors, guards);
            case TheoremId::T2: return check_t2(base, factors, guards);
            case TheoremId::T3: return check_t3(base, factors, guards);
            case TheoremId::T4: return check_t4(base, factors, guards);
            case TheoremId::T5: return check_t5(base, factors, guards);
            case TheoremId::T6: return check_t6(base, factors, guards);
            case TheoremId::T7: return check_t7(base, factors, guards);
            case TheoremId::T8: return check_t8(base, factors, guards);
            case TheoremId::T9: return check_t9(base, factors, guards);
            case TheoremId::T10: return check_t10(base, factors, guards);
            case TheoremId::T11: return check_t11(base, factors, guards);
            case TheoremId::T12: return check_t12(base, factors, guards);
            case TheoremId::T13: return check_t13(base, factors, guards);
            case TheoremId::T14: return check_t14(base, factors, guards);
            case TheoremId::T15: return check_t15(base, factors, guards);
            case TheoremId::T16: return check_t16(base, factors, guards);
            case TheoremId::T17: return check_t17(base, factors, guards);
        }
    } catch (const SizeLimitExceeded& e) {
        return Verdict::not_applicable(std::string("guard breached: ") + e.what());
    }
    throw InvalidParameter("unknown theorem id");
}

std::vector<PoolEntry> named_pool(const std::string& name) {
    auto paw = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    if (name == "default")
        return {
            {"K1", complete_graph(1)}, {"K2", complete_graph(2)}, {"2K1", empty_graph(2)},
            {"P3", path_graph(3)},     {"P4", path_graph(4)},     {"C3", cycle_graph(3)},
            {"C4", cycle_graph(4)},    {"C5", cycle_graph(5)},    {"C6", cycle_graph(6)},
            {"K3", complete_graph(3)}, {"paw", paw},              {"diamond", diamond},
        };
    if (name == "tiny")
        return {{"K1", complete_graph(1)},
                {"K2", complete_graph(2)},
                {"2K1", empty_graph(2)},
                {"P3", path_graph(3)}};
    if (name == "contains-K1") return {{"K1", complete_graph(1)}};
    throw InvalidParameter("unknown pool name: " + name);
}

std::vector<Graph> connected_bases_upto(int bmax) {
    if (bmax < 2 || bmax > 7) throw InvalidParameter("bmax must be in 2..7");
    std::vector<Graph> out;
    for (int n = 2; n <= bmax; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
        std::vector<Graph> classes;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << all_edges.size()); ++m) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t e = 0; e < all_edges.size(); ++e)
                if ((m >> e) & 1) edges.push_back(all_edges[e]);
            Graph g = Graph::from_edges(n, edges);
            if (!is_connected(g)) continue;
            bool seen = false;
            for (const Graph& h : classes)
                if (are_isomorphic(g, h)) {
                    seen = true;
                    break;
                }
            if (!seen) classes.push_back(g);
        }
        out.insert(out.end(), classes.begin(), classes.end());
    }
    return out;
}

json SweepRecord::to_json() const {
    json j{{"theorem", theorem},
           {"base_g6", base_g6},
           {"factors_g6", factors_g6},
           {"status", verdict.status_name()},
           {"seed", seed}};
    if (!verdict.details.empty()) j["values"] = verdict.details;
    if (!verdict.reason.empty()) j["reason"] = verdict.reason;
    return j;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xbf58476d1ce4e5b9ULL);
    h ^= h >> 31;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 29;
    return h;
}

}  // namespace

SweepSummary sweep(TheoremId id, const SweepConfig& cfg,
                   const std::function<void(const SweepRecord&)>& sink) {
    struct Instance {
        Graph base;
        Factors factors;
        std::uint64_t seed;
    };
    std::vector<Instance> instances;

    if (id == TheoremId::T17) {
        for (int k = 1; k <= 3; ++k) {
            int n = 4 * k + 2;
            std::vector<int> jumps;
            for (int j = 1; j <= k; ++j) {
                jumps.push_back(j);
                jumps.push_back(n - j);
            }
            instances.push_back({circulant_graph(n, jumps), {}, cfg.seed});
        }
    } else {
        std::vector<PoolEntry> usable;
        for (const PoolEntry& e : cfg.pool)
            if (e.graph.order() <= cfg.fmax) usable.push_back(e);
        if (usable.empty()) throw InvalidParameter("factor pool has no graphs within fmax");
        auto bases = connected_bases_upto(cfg.bmax);
        for (std::size_t bi = 0; bi < bases.size(); ++bi)
            for (int si = 0; si < cfg.samples; ++si) {
                std::uint64_t s = mix_seed(cfg.seed, bi, (std::uint64_t)si);
                std::mt19937_64 rng(s);
                Factors fs;
                for (int i = 0; i < bases[bi].order(); ++i)
                    fs.push_back(usable[rng() % usable.size()].graph);
                instances.push_back({bases[bi], std::move(fs), s});
            }
    }

    std::vector<SweepRecord> records(instances.size());
    int jobs = std::max(1, cfg.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) break;
            const Instance& inst = instances[i];
            SweepRecord rec;
            rec.theorem = theorem_name(id);
            rec.base_g6 = emit_graph6(inst.base);
            for (const Graph& f : inst.factors) rec.factors_g6.push_back(emit_graph6(f));
            rec.seed = inst.seed;
            rec.verdict = check(id, inst.base, inst.factors, cfg.guards);
            records[i] = std::move(rec);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SweepSummary summary;
    for (const SweepRecord& rec : records) {
        switch (rec.verdict.status) {
            case Verdict::Status::Holds: ++summary.holds; break;
            case Verdict::Status::Violated:
                ++summary.violated;
                if (!summary.first_violation) summary.first_violation = rec;
                break;
            case Verdict::Status::NotApplicable: ++summary.not_applicable; break;
        }
        if (sink) sink(rec);
    }
    return summary;
}

Graph random_connected_graph(std::mt19937_64& rng, int nmin, int nmax) {
    const double probs[] = {0.3, 0.5, 0.7};
    for (;;) {
        int n = nmin + (int)(rng() % (std::uint64_t)(nmax - nmin + 1));
        double p = probs[rng() % 3];
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::uniform_real_distribution<double>(0, 1)(rng) < p) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g) && n >= 2) return g;
    }
}

long hunt(const HuntConfig& cfg, std::ostream& out) {
    std::mt19937_64 rng(cfg.seed);
    long finds = 0;
    if (cfg.target == "eff-gt-half") {
        out << json{{"target", cfg.target},
                    {"seed", cfg.seed},
                    {"note", "circulant family read as C(4k+2; jumps +-1..+-k)"}}
            << "\n";
        // Known family members first: these must confirm.
        for (int k = 1; k <= 3; ++k) {
            int n = 4 * k + 2;
            std::vector<int> jumps;
            for (int j = 1; j <= k; ++j) {
                jumps.push_back(j);
                jumps.push_back(n - j);
            }
            Graph g = circulant_graph(n, jumps);
            Verdict v = check_t17(g, {}, cfg.guards);
            out << json{{"target", cfg.target}, {"kind", "circulant-catalog"}, {"k", k},
                        {"g6", emit_graph6(g)}, {"status", v.status_name()},
                        {"values", v.details}}
                << "\n";
            if (v.status == Verdict::Status::Holds) ++finds;
        }
        for (long t = 0; t < cfg.budget; ++t) {
            Graph g = random_connected_graph(rng, 4, 12);
            ParamValue gt = gamma_ab(g, kGammaT, cfg.guards);
            if (!gt.value || *gt.value % 2 != 0) continue;
            for (VertexSet e : enumerate_efficient(g, cfg.guards))
                if (2 * vs_size(e) == *gt.value) {
                    out << json{{"target", cfg.target}, {"kind", "random-find"},
                                {"g6", emit_graph6(g)}, {"eds", vs_to_string(e)},
                                {"gamma_t", *gt.value}, {"iteration", t}, {"seed", cfg.seed}}
                        << "\n";
                    ++finds;
                    break;
                }
        }
        return finds;
    }
    if (cfg.target.starts_with("well-mu-glp:")) {
        ParamName pn = parse_param(cfg.target.substr(12));
        out << json{{"target", cfg.target}, {"seed", cfg.seed}, {"param", pn.name}} << "\n";
        auto pool = named_pool("default");
        for (long t = 0; t < cfg.budget; ++t) {
            Graph base = random_connected_graph(rng, 2, 4);
            Factors fs;
            for (int i = 0; i < base.order(); ++i) {
                const Graph& f = pool[rng() % pool.size()].graph;
                if (f.order() > 3) {
                    fs.push_back(path_graph(2));
                } else {
                    fs.push_back(f);
                }
            }
            ProductGraph p = build_product(base, fs);
            try {
                if (is_well_ab_dominated(p.graph, pn.pair, cfg.guards)) {
                    std::vector<std::string> fg6;
                    for (const Graph& f : fs) fg6.push_back(emit_graph6(f));
                    out << json{{"target", cfg.target}, {"kind", "well-find"},
                                {"base_g6", emit_graph6(base)}, {"factors_g6", fg6},
                                {"value", *gamma_ab(p.graph, pn.pair, cfg.guards).value},
                                {"iteration", t}, {"seed", cfg.seed}}
                        << "\n";
                    ++finds;
                }
            } catch (const NoFeasibleSet&) {
            }
        }
        return finds;
    }
    throw InvalidParameter("unknown hunt target: " + cfg.target);
}

}  // namespace glpdom
