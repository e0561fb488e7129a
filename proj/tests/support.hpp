#ifndef DPG_TESTS_SUPPORT_HPP
#define DPG_TESTS_SUPPORT_HPP

// Test-only oracles and random generators. The oracles recompute everything
// from raw gmpxx arithmetic and stay independent of the library's own code
// paths: social cost is summed per player here while the library sums edges,
// medians are scored through a fresh BFS, and so on.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dpg/dpg.hpp"

namespace support {

using dpg::AnchoredInstance;
using dpg::Instance;
using dpg::Metric;
using dpg::Rational;
using dpg::StrategyVector;
using dpg::TreeEdge;

inline mpq_class q(const Rational& r) { return r.mpq(); }

// ---- cost oracles (raw formula, per-player summation route) ----

inline mpq_class oracle_player_cost(const Instance& inst, const StrategyVector& z, int i) {
    mpq_class alpha = q(inst.alpha());
    mpq_class total = alpha * q(inst.metric().dist(inst.preferred(i), z[i]));
    for (int j : inst.graph().neighbors(i))
        total += (1 - alpha) * q(inst.metric().dist(z[i], z[j]));
    return total;
}

inline mpq_class oracle_social_cost(const Instance& inst, const StrategyVector& z) {
    mpq_class total = 0;
    for (int i = 0; i < inst.node_count(); ++i) total += oracle_player_cost(inst, z, i);
    return total;
}

inline mpq_class oracle_contribution(const Instance& inst, const StrategyVector& z, int i) {
    mpq_class alpha = q(inst.alpha());
    mpq_class total = alpha * q(inst.metric().dist(inst.preferred(i), z[i]));
    for (int j : inst.graph().neighbors(i))
        total += 2 * (1 - alpha) * q(inst.metric().dist(z[i], z[j]));
    return total;
}

inline mpq_class oracle_potential(const Instance& inst, const StrategyVector& z) {
    mpq_class alpha = q(inst.alpha());
    mpq_class total = 0;
    for (int i = 0; i < inst.node_count(); ++i)
        total += alpha * q(inst.metric().dist(z[i], inst.preferred(i)));
    for (auto [a, b] : inst.graph().edges())
        total += (1 - alpha) * q(inst.metric().dist(z[a], z[b]));
    return total;
}

inline std::vector<int> oracle_best_responses(const Instance& inst, const StrategyVector& z,
                                              int i) {
    StrategyVector w = z;
    std::vector<int> out;
    mpq_class best = 0;
    for (int s = 0; s < inst.strategy_count(); ++s) {
        w[i] = s;
        mpq_class c = oracle_player_cost(inst, w, i);
        if (out.empty() || c < best) {
            best = c;
            out.assign(1, s);
        } else if (c == best) {
            out.push_back(s);
        }
    }
    return out;
}

inline std::vector<int> oracle_social_responses(const Instance& inst, const StrategyVector& z,
                                                int i) {
    StrategyVector w = z;
    std::vector<int> out;
    mpq_class best = 0;
    for (int s = 0; s < inst.strategy_count(); ++s) {
        w[i] = s;
        mpq_class c = oracle_contribution(inst, w, i);
        if (out.empty() || c < best) {
            best = c;
            out.assign(1, s);
        } else if (c == best) {
            out.push_back(s);
        }
    }
    return out;
}

inline bool oracle_is_equilibrium(const Instance& inst, const StrategyVector& z) {
    StrategyVector w = z;
    for (int i = 0; i < inst.node_count(); ++i) {
        mpq_class current = oracle_player_cost(inst, z, i);
        for (int s = 0; s < inst.strategy_count(); ++s) {
            w[i] = s;
            if (oracle_player_cost(inst, w, i) < current) return false;
        }
        w[i] = z[i];
    }
    return true;
}

// Plain odometer enumeration, no pruning, no recursion: the optimum oracle.
struct OracleOptimum {
    mpq_class cost;
    std::vector<StrategyVector> vectors;
};

inline OracleOptimum oracle_optimum(const Instance& inst) {
    const int n = inst.node_count();
    const int L = inst.strategy_count();
    OracleOptimum out;
    StrategyVector z(n, 0);
    bool have = false;
    while (true) {
        mpq_class c = oracle_social_cost(inst, z);
        if (!have || c < out.cost) {
            out.cost = c;
            out.vectors.clear();
            have = true;
        }
        if (c == out.cost) out.vectors.push_back(z);
        int t = n - 1;
        while (t >= 0 && ++z[t] == L) z[t--] = 0;
        if (t < 0) break;
    }
    return out;
}

// ---- anchored oracles ----

inline mpq_class oracle_anchored_player_cost(const AnchoredInstance& inst,
                                             const StrategyVector& z, int i) {
    mpq_class total = 0;
    for (int j : inst.graph().neighbors(i))
        total += q(inst.metric().dist(inst.played(i, z), inst.played(j, z)));
    return total;
}

// Per-player route: anchored C equals the sum of strategic players' costs.
inline mpq_class oracle_anchored_social_cost(const AnchoredInstance& inst,
                                             const StrategyVector& z) {
    mpq_class total = 0;
    for (int i : inst.strategic_nodes()) total += oracle_anchored_player_cost(inst, z, i);
    return total;
}

// argmin over strategies of the anchored player cost / anchored contribution
// (fixed-neighbor terms once, strategic-neighbor terms with the given factor).
inline std::vector<int> oracle_anchored_argmin(const AnchoredInstance& inst,
                                               const StrategyVector& z, int i,
                                               int strategic_factor) {
    std::vector<int> out;
    mpq_class best = 0;
    for (int s = 0; s < inst.strategy_count(); ++s) {
        mpq_class c = 0;
        for (int j : inst.graph().neighbors(i)) {
            if (inst.is_fixed(j))
                c += q(inst.metric().dist(s, inst.fixed_preference(j)));
            else
                c += strategic_factor * q(inst.metric().dist(s, z[inst.slot(j)]));
        }
        if (out.empty() || c < best) {
            best = c;
            out.assign(1, s);
        } else if (c == best) {
            out.push_back(s);
        }
    }
    return out;
}

inline bool oracle_anchored_is_equilibrium(const AnchoredInstance& inst,
                                           const StrategyVector& z) {
    StrategyVector w = z;
    for (int i : inst.strategic_nodes()) {
        const int slot = inst.slot(i);
        mpq_class current = oracle_anchored_player_cost(inst, z, i);
        for (int s = 0; s < inst.strategy_count(); ++s) {
            w[slot] = s;
            if (oracle_anchored_player_cost(inst, w, i) < current) return false;
        }
        w[slot] = z[slot];
    }
    return true;
}

// ---- median oracle: fresh BFS distances, straight argmin ----

struct RawTree {
    int nodes;
    std::vector<TreeEdge> edges;
    std::vector<long long> weights;
};

inline std::vector<mpq_class> oracle_tree_distances_from(const RawTree& t, int root) {
    std::vector<std::vector<std::pair<int, mpq_class>>> adj(t.nodes);
    for (const auto& e : t.edges) {
        adj[e.u].push_back({e.v, q(e.length)});
        adj[e.v].push_back({e.u, q(e.length)});
    }
    std::vector<mpq_class> dist(t.nodes, mpq_class(-1));
    std::vector<int> stack{root};
    dist[root] = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto& [v, len] : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + len;
                stack.push_back(v);
            }
    }
    return dist;
}

inline std::vector<int> oracle_medians(const RawTree& t) {
    std::vector<mpq_class> score(t.nodes, 0);
    for (int u = 0; u < t.nodes; ++u) {
        auto dist = oracle_tree_distances_from(t, u);
        for (int v = 0; v < t.nodes; ++v)
            score[u] += mpq_class(static_cast<long>(t.weights[v])) * dist[v];
    }
    mpq_class best = score[0];
    for (int u = 1; u < t.nodes; ++u) best = std::min(best, score[u]);
    std::vector<int> out;
    for (int u = 0; u < t.nodes; ++u)
        if (score[u] == best) out.push_back(u);
    return out;
}

// ---- deterministic random generators ----

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}

    // Uniform in [0, n); plain modulo keeps the streams platform-stable.
    long long below(long long n) { return static_cast<long long>(gen() % static_cast<uint64_t>(n)); }
    long long range(long long lo, long long hi) { return lo + below(hi - lo + 1); }
    bool chance_percent(int p) { return below(100) < p; }
};

inline std::vector<std::pair<int, int>> random_edges(Rng& rng, int n, int percent) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.chance_percent(percent)) out.push_back({a, b});
    return out;
}

inline Rational random_positive_length(Rng& rng) {
    static const Rational pool[] = {Rational(1),    Rational(1, 2), Rational(3, 2),
                                    Rational(2),    Rational(1, 3), Rational(5, 2),
                                    Rational(2, 3), Rational(3)};
    return pool[rng.below(std::size(pool))];
}

inline std::vector<TreeEdge> random_tree_edges(Rng& rng, int m) {
    std::vector<TreeEdge> edges;
    for (int v = 1; v < m; ++v)
        edges.push_back({static_cast<int>(rng.below(v)), v, random_positive_length(rng)});
    return edges;
}

inline Metric random_tree_metric(Rng& rng, int m) {
    return dpg::tree_metric(m, random_tree_edges(rng, m));
}

// Random symmetric entries closed under min-plus (Floyd-Warshall) to restore
// the triangle inequality; entries stay strictly positive.
inline Metric random_matrix_metric(Rng& rng, int m) {
    std::vector<std::vector<Rational>> d(m, std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Rational x = Rational(rng.range(1, 6), 2); // in [1/2, 3]
            d[i][j] = x;
            d[j][i] = x;
        }
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return dpg::make_metric(d);
}

inline Metric random_line_metric(Rng& rng, int m) {
    std::vector<Rational> pos;
    Rational x(0);
    for (int i = 0; i < m; ++i) {
        pos.push_back(x);
        x += random_positive_length(rng);
    }
    return dpg::line_metric(pos);
}

inline Metric random_metric_mixed(Rng& rng, int max_m) {
    const int m = static_cast<int>(rng.range(2, max_m));
    switch (rng.below(4)) {
        case 0: return random_matrix_metric(rng, m);
        case 1: return random_tree_metric(rng, m);
        case 2: return random_line_metric(rng, m);
        default: return dpg::cycle_metric(std::max(3, m));
    }
}

inline Rational random_alpha(Rng& rng) {
    long long b = rng.range(1, 6);
    long long a = rng.range(0, b);
    return Rational(a, b);
}

// alpha = a/(a+b) in lowest terms with a <= b.
inline Rational random_alpha_at_most_half(Rng& rng) {
    long long b = rng.range(1, 5);
    long long a = rng.range(0, b);
    return Rational(a, a + b);
}

inline Instance random_instance(Rng& rng, Metric metric, int max_n, const Rational& alpha,
                                int edge_percent = 50) {
    const int n = static_cast<int>(rng.range(1, max_n));
    std::vector<int> prefs(n);
    for (int& p : prefs) p = static_cast<int>(rng.below(metric.size()));
    return Instance(dpg::Graph(n, random_edges(rng, n, edge_percent)), std::move(metric),
                    std::move(prefs), alpha);
}

inline StrategyVector random_vector(Rng& rng, int length, int strategies) {
    StrategyVector z(length);
    for (int& s : z) s = static_cast<int>(rng.below(strategies));
    return z;
}

} // namespace support

#endif // DPG_TESTS_SUPPORT_HPP
