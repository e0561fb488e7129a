#ifndef DPG_CONSTRUCTIONS_HPP
#define DPG_CONSTRUCTIONS_HPP

#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dpg/errors.hpp"
#include "dpg/graph.hpp"
#include "dpg/instance.hpp"
#include "dpg/metric.hpp"
#include "dpg/rational.hpp"

namespace dpg {

// Instance plus a distinguished strategy vector the family is known for
// (a designated equilibrium).
struct InstanceWithVector {
    Instance instance;
    StrategyVector designated;
};

namespace detail {

inline Metric two_point_metric() {
    return make_metric({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
}

inline long long to_integer(const Rational& r, const std::string& name) {
    if (!r.is_integer()) throw OutOfRange(name + " must be an integer");
    return r.num().get_si();
}

} // namespace detail

// Clique of size ceil(alpha/(1-alpha)) + 1 where everyone prefers strategy 0;
// the all-1 vector is an equilibrium of positive cost while the optimum costs
// nothing, so the price of anarchy is unbounded. Defined for 0 < alpha < 1
// (alpha = 0 needs the ring construction instead).
inline InstanceWithVector gen_poa_clique(const Rational& alpha) {
    if (!(alpha > Rational(0)) || !(alpha < Rational(1)))
        throw OutOfRange("poa clique requires 0 < alpha < 1");
    const long long size = (alpha / (Rational(1) - alpha)).ceil().get_si() + 1;
    Instance inst(Graph::clique(static_cast<int>(size)), detail::two_point_metric(),
                  std::vector<int>(size, 0), alpha);
    return {std::move(inst), StrategyVector(size, 1)};
}

// Two concentric 4-cycles joined by spokes, alpha = 0: the outer-0/inner-1
// vector is an equilibrium of cost 8 although any consensus costs 0.
inline InstanceWithVector gen_fig1_ring() {
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 0}, // outer cycle
        {4, 5}, {5, 6}, {6, 7}, {7, 4}, // inner cycle
        {0, 7}, {1, 6}, {2, 5}, {3, 4}, // spokes
    };
    Instance inst(Graph(8, std::move(edges)), detail::two_point_metric(),
                  std::vector<int>(8, 0), Rational(0));
    return {std::move(inst), StrategyVector{0, 0, 0, 0, 1, 1, 1, 1}};
}

// Star with ceil(alpha/(1-alpha) - 1) peripheral nodes preferring strategy 0
// and a center preferring strategy 1; its price of stability meets the
// two-strategy upper bound exactly. Defined for 1/2 < alpha < 1, alpha != 2/3
// (there the bound is 1 and the star degenerates).
inline Instance gen_two_strategy_star(const Rational& alpha) {
    if (!(alpha > Rational(1, 2)) || !(alpha < Rational(1)))
        throw OutOfRange("star requires 1/2 < alpha < 1");
    if (alpha == Rational(2, 3)) throw OutOfRange("alpha = 2/3 has PoS 1; no tight star exists");
    const long long p = (alpha / (Rational(1) - alpha) - Rational(1)).ceil().get_si();
    const int n = static_cast<int>(p) + 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, n - 1});
    std::vector<int> prefs(n, 0);
    prefs[n - 1] = 1; // center
    return Instance(Graph(n, std::move(edges)), detail::two_point_metric(), std::move(prefs),
                    alpha);
}

// Cycle-metric gadget (alpha = 1/2): strategies live on a cycle of 3k+1
// points with preferred strategies at positions 0 (A), k (B) and 2k+1 (C);
// a central A-node bridges a B-clique and a C-clique. All-preferred is an
// equilibrium of cost 2k while moving the center to B costs (3/2)k + 1.
// The clique size defaults to the faithful 3k and may be shrunk for
// brute-force cross-checks.
inline Instance gen_cycle_gadget(long long k, long long clique_size = -1) {
    if (k < 1) throw OutOfRange("cycle gadget requires k >= 1");
    if (clique_size < 0) clique_size = 3 * k;
    if (clique_size < 1) throw OutOfRange("clique size must be at least 1");

    const int m = static_cast<int>(3 * k + 1);
    const int a = 0, b = static_cast<int>(k), c = static_cast<int>(2 * k + 1);
    const int cs = static_cast<int>(clique_size);
    const int n = 1 + 2 * cs; // center + B-clique + C-clique

    std::vector<std::pair<int, int>> edges;
    edges.push_back({0, 1});      // center - B-clique representative
    edges.push_back({0, 1 + cs}); // center - C-clique representative
    for (int i = 0; i < cs; ++i)
        for (int j = i + 1; j < cs; ++j) {
            edges.push_back({1 + i, 1 + j});
            edges.push_back({1 + cs + i, 1 + cs + j});
        }

    std::vector<int> prefs(n, a);
    for (int i = 0; i < cs; ++i) {
        prefs[1 + i] = b;
        prefs[1 + cs + i] = c;
    }
    return Instance(Graph(n, std::move(edges)), cycle_metric(m), std::move(prefs),
                    Rational(1, 2));
}

// Path of n nodes between two cliques, strategies s_0..s_{n+1}, with the
// stretched uniform metric d(s_i, s_j) = 1 + (|i-j| - 1) * f where
//   f = eps                                for alpha = 1/2,
//   f = (1-2 alpha)/(1-alpha) * (1 + eps)  for alpha < 1/2.
// Path node i prefers s_i; the left clique prefers s_0 and the right one
// s_{n+1}; each clique touches its path endpoint through one representative.
// Clique sizes default to the faithful n^2 (alpha = 1/2) or ceil(n^2/alpha)
// and may be shrunk for brute-force cross-checks on miniatures.
inline Instance gen_path_cliques(const Rational& alpha, long long n, const Rational& eps,
                                 long long clique_size = -1) {
    if (!(alpha > Rational(0)) || alpha > Rational(1, 2))
        throw OutOfRange("path-cliques construction requires 0 < alpha <= 1/2");
    if (n < 2) throw OutOfRange("path-cliques construction requires n >= 2");
    if (!(eps > Rational(0))) throw OutOfRange("eps must be positive");

    const bool half = alpha == Rational(1, 2);
    const Rational f = half
                           ? eps
                           : (Rational(1) - Rational(2) * alpha) / (Rational(1) - alpha) *
                                 (Rational(1) + eps);
    if (f > Rational(1))
        throw OutOfRange("eps too large: the stretched distances violate the triangle inequality");

    if (clique_size < 0) {
        clique_size = half ? n * n : (Rational(n * n) / alpha).ceil().get_si();
    }
    if (clique_size < 1) throw OutOfRange("clique size must be at least 1");

    const int L = static_cast<int>(n) + 2;
    std::vector<std::vector<Rational>> d(L, std::vector<Rational>(L, Rational(0)));
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            if (i != j) d[i][j] = Rational(1) + Rational(std::abs(i - j) - 1) * f;

    const int cs = static_cast<int>(clique_size);
    const int path_n = static_cast<int>(n);
    const int total = path_n + 2 * cs; // path 0..n-1, left clique, right clique
    const int left0 = path_n, right0 = path_n + cs;

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < path_n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, left0});            // left representative - path node 1
    edges.push_back({path_n - 1, right0});  // path node n - right representative
    for (int i = 0; i < cs; ++i)
        for (int j = i + 1; j < cs; ++j) {
            edges.push_back({left0 + i, left0 + j});
            edges.push_back({right0 + i, right0 + j});
        }

    std::vector<int> prefs(total);
    for (int i = 0; i < path_n; ++i) prefs[i] = i + 1; // path node i prefers s_{i+1}
    for (int i = 0; i < cs; ++i) {
        prefs[left0 + i] = 0;
        prefs[right0 + i] = path_n + 1;
    }
    return Instance(Graph(total, std::move(edges)), make_metric(d), std::move(prefs), alpha);
}

// Anchored star meeting the 2(k-1)/k bound: a central node with k fixed
// 0-preferring neighbors, joined to a (k-1)-clique of strategic nodes that
// each carry k fixed 1-preferring neighbors. Defined for k >= 3 (k <= 2 is
// the PoS-1 regime).
inline AnchoredInstance gen_anchored_star(long long k) {
    if (k < 3) throw OutOfRange("anchored star requires k >= 3");
    const int kk = static_cast<int>(k);
    const int strategic = kk;          // center = 0, clique = 1..k-1
    const int fixed = kk + (kk - 1) * kk;
    const int n = strategic + fixed;

    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> fixed_prefs;
    for (int i = 1; i < kk; ++i) edges.push_back({0, i});
    for (int i = 1; i < kk; ++i)
        for (int j = i + 1; j < kk; ++j) edges.push_back({i, j});

    int next = strategic;
    for (int t = 0; t < kk; ++t) { // center's anchors prefer 0
        edges.push_back({0, next});
        fixed_prefs.push_back({next, 0});
        ++next;
    }
    for (int i = 1; i < kk; ++i)
        for (int t = 0; t < kk; ++t) { // clique anchors prefer 1
            edges.push_back({i, next});
            fixed_prefs.push_back({next, 1});
            ++next;
        }

    return AnchoredInstance(Graph(n, std::move(edges)), detail::two_point_metric(),
                            std::move(fixed_prefs));
}

// Reduction from a discrete preference game at alpha = 1/2 to an anchored
// game: every node becomes strategic and gains a private fixed neighbor
// pinned to its old preference. Equilibria coincide and every social cost is
// scaled by exactly 2.
inline AnchoredInstance discrete_to_anchored(const Instance& inst) {
    if (inst.alpha() != Rational(1, 2))
        throw WrongAlpha("the anchored reduction is defined at alpha = 1/2");
    const int n = inst.node_count();
    std::vector<std::pair<int, int>> edges = inst.graph().edges();
    std::vector<std::pair<int, int>> fixed_prefs;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, n + i});
        fixed_prefs.push_back({n + i, inst.preferred(i)});
    }
    return AnchoredInstance(Graph(2 * n, std::move(edges)), inst.metric(),
                            std::move(fixed_prefs));
}

// CLI-facing registry of the named families.
enum class ConstructionId {
    PoaClique,
    Fig1Ring,
    TwoStrategyStar,
    CycleMetricGadget,
    PathCliquesHalf,
    PathCliquesSubHalf,
    AnchoredStar,
    AnchoredFromDiscrete, // reduction; needs a source instance, not just params
};

struct NamedConstruction {
    ConstructionId id;
    std::map<std::string, Rational> params;
};

inline ConstructionId construction_id_from_string(const std::string& name) {
    if (name == "poa_clique") return ConstructionId::PoaClique;
    if (name == "fig1_ring") return ConstructionId::Fig1Ring;
    if (name == "two_strategy_star") return ConstructionId::TwoStrategyStar;
    if (name == "cycle_metric_gadget") return ConstructionId::CycleMetricGadget;
    if (name == "path_cliques_half") return ConstructionId::PathCliquesHalf;
    if (name == "path_cliques_sub_half") return ConstructionId::PathCliquesSubHalf;
    if (name == "anchored_star") return ConstructionId::AnchoredStar;
    if (name == "anchored_from_discrete") return ConstructionId::AnchoredFromDiscrete;
    throw OutOfRange("unknown construction '" + name + "'");
}

struct BuiltConstruction {
    // Exactly one of the two is set.
    std::vector<Instance> instance;
    std::vector<AnchoredInstance> anchored;
    std::vector<int> designated; // empty when the family has none
};

inline BuiltConstruction build_construction(const NamedConstruction& c) {
    auto need = [&](const std::string& key) -> const Rational& {
        auto it = c.params.find(key);
        if (it == c.params.end()) throw OutOfRange("missing parameter '" + key + "'");
        return it->second;
    };
    auto optional_int = [&](const std::string& key, long long fallback) -> long long {
        auto it = c.params.find(key);
        return it == c.params.end() ? fallback : detail::to_integer(it->second, key);
    };

    BuiltConstruction out;
    switch (c.id) {
        case ConstructionId::PoaClique: {
            auto g = gen_poa_clique(need("alpha"));
            out.instance.push_back(std::move(g.instance));
            out.designated = std::move(g.designated);
            break;
        }
        case ConstructionId::Fig1Ring: {
            auto g = gen_fig1_ring();
            out.instance.push_back(std::move(g.instance));
            out.designated = std::move(g.designated);
            break;
        }
        case ConstructionId::TwoStrategyStar:
            out.instance.push_back(gen_two_strategy_star(need("alpha")));
            break;
        case ConstructionId::CycleMetricGadget:
            out.instance.push_back(gen_cycle_gadget(detail::to_integer(need("k"), "k"),
                                                    optional_int("clique_size", -1)));
            break;
        case ConstructionId::PathCliquesHalf:
            out.instance.push_back(gen_path_cliques(Rational(1, 2),
                                                    detail::to_integer(need("n"), "n"),
                                                    need("eps"),
                                                    optional_int("clique_size", -1)));
            break;
        case ConstructionId::PathCliquesSubHalf: {
            const Rational& alpha = need("alpha");
            if (alpha >= Rational(1, 2))
                throw OutOfRange("path_cliques_sub_half requires alpha < 1/2");
            out.instance.push_back(gen_path_cliques(alpha, detail::to_integer(need("n"), "n"),
                                                    need("eps"),
                                                    optional_int("clique_size", -1)));
            break;
        }
        case ConstructionId::AnchoredStar:
            out.anchored.push_back(gen_anchored_star(detail::to_integer(need("k"), "k")));
            break;
        case ConstructionId::AnchoredFromDiscrete:
            throw OutOfRange("anchored_from_discrete transforms an existing instance; supply it");
    }
    return out;
}

} // namespace dpg

#endif // DPG_CONSTRUCTIONS_HPP
