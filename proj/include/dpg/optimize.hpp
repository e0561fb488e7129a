#ifndef DPG_OPTIMIZE_HPP
#define DPG_OPTIMIZE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpg/costs.hpp"
#include "dpg/dynamics.hpp"
#include "dpg/errors.hpp"
#include "dpg/instance.hpp"
#include "dpg/treemed.hpp"

namespace dpg {

namespace detail {

// |L|^n with the budget enforced; never silently truncates.
inline long long vector_space_size(int strategies, int nodes, long long budget) {
    long long total = 1;
    for (int i = 0; i < nodes; ++i) {
        if (strategies > 1 && total > budget / strategies)
            throw SearchTooLarge("search space " + std::to_string(strategies) + "^" +
                                 std::to_string(nodes) + " exceeds budget " + std::to_string(budget));
        total *= strategies;
    }
    if (total > budget)
        throw SearchTooLarge("search space exceeds budget " + std::to_string(budget));
    return total;
}

// Neighbors with smaller index, for incremental prefix costs.
inline std::vector<std::vector<int>> earlier_neighbors(const Graph& g) {
    std::vector<std::vector<int>> out(g.node_count());
    for (auto [a, b] : g.edges()) out[b].push_back(a); // a < b by normalization
    return out;
}

} // namespace detail

struct OptimumResult {
    Rational cost;
    // Every optimal vector, in lexicographic order.
    std::vector<StrategyVector> vectors;
};

// Exact global minimum of the social cost by exhaustive search (the game's
// metric-labeling problem at desk scale). Enumerates |L|^n assignments with
// incremental prefix costs; prefixes already above the best total are cut.
inline OptimumResult brute_force_optimum(const Instance& inst,
                                         long long budget = kDefaultSearchBudget) {
    const int n = inst.node_count();
    const int L = inst.strategy_count();
    detail::vector_space_size(L, n, budget);

    const auto earlier = detail::earlier_neighbors(inst.graph());
    const Rational alpha = inst.alpha();
    const Rational edge_coeff = Rational(2) * (Rational(1) - alpha);
    const Metric& d = inst.metric();

    OptimumResult out;
    StrategyVector z(n, 0);
    bool have = false;

    auto recurse = [&](auto&& self, int k, const Rational& sofar) -> void {
        if (have && sofar > out.cost) return; // all remaining terms are >= 0
        if (k == n) {
            if (!have || sofar < out.cost) {
                out.cost = sofar;
                out.vectors.clear();
                have = true;
            }
            if (sofar == out.cost) out.vectors.push_back(z);
            return;
        }
        for (int s = 0; s < L; ++s) {
            z[k] = s;
            Rational next = sofar + alpha * d.dist(inst.preferred(k), s);
            for (int j : earlier[k]) next += edge_coeff * d.dist(s, z[j]);
            self(self, k + 1, next);
        }
    };
    recurse(recurse, 0, Rational(0));
    return out;
}

namespace detail {

template <typename PotentialFn>
const StrategyVector& phi_min_vector(const std::vector<StrategyVector>& vectors,
                                     PotentialFn&& phi_of) {
    const StrategyVector* best = nullptr;
    Rational best_phi(0);
    for (const StrategyVector& v : vectors) {
        Rational phi = phi_of(v);
        if (!best || phi < best_phi) {
            best = &v;
            best_phi = phi;
        }
    }
    return *best;
}

} // namespace detail

// Among all optima, the vector minimizing the potential; ties broken
// lexicographically (the enumeration order already is lexicographic).
inline StrategyVector potential_min_optimum(const Instance& inst,
                                            long long budget = kDefaultSearchBudget) {
    const OptimumResult opt = brute_force_optimum(inst, budget);
    return detail::phi_min_vector(opt.vectors,
                                  [&](const StrategyVector& v) { return potential(inst, v); });
}

struct EquilibriaSummary {
    Rational best_cost;
    Rational worst_cost;
    StrategyVector best_vector;  // lexicographically first among best-cost equilibria
    StrategyVector worst_vector; // lexicographically first among worst-cost equilibria
    long long count = 0;
};

// Exhaustive pure-Nash enumeration. A node's best-response condition is
// checked as soon as its closed neighborhood is assigned, which prunes most
// of the space.
inline EquilibriaSummary enumerate_equilibria(const Instance& inst,
                                              long long budget = kDefaultSearchBudget) {
    const int n = inst.node_count();
    const int L = inst.strategy_count();
    detail::vector_space_size(L, n, budget);

    // ready_at[k] = nodes whose closed neighborhood is fully assigned once
    // node k has a strategy.
    std::vector<std::vector<int>> ready_at(n);
    for (int i = 0; i < n; ++i) {
        int last = i;
        for (int j : inst.graph().neighbors(i)) last = std::max(last, j);
        ready_at[last].push_back(i);
    }

    const auto earlier = detail::earlier_neighbors(inst.graph());
    const Rational alpha = inst.alpha();
    const Rational edge_coeff = Rational(2) * (Rational(1) - alpha);
    const Metric& d = inst.metric();

    EquilibriaSummary out;
    StrategyVector z(n, 0);

    auto best_responds = [&](int i) {
        const Rational current = player_cost_if(inst, z, i, z[i]);
        for (int s = 0; s < L; ++s) {
            if (s == z[i]) continue;
            if (player_cost_if(inst, z, i, s) < current) return false;
        }
        return true;
    };

    auto recurse = [&](auto&& self, int k, const Rational& sofar) -> void {
        if (k == n) {
            if (out.count == 0 || sofar < out.best_cost) {
                out.best_cost = sofar;
                out.best_vector = z;
            }
            if (out.count == 0 || sofar > out.worst_cost) {
                out.worst_cost = sofar;
                out.worst_vector = z;
            }
            ++out.count;
            return;
        }
        for (int s = 0; s < L; ++s) {
            z[k] = s;
            bool viable = true;
            for (int i : ready_at[k])
                if (!best_responds(i)) {
                    viable = false;
                    break;
                }
            if (!viable) continue;
            Rational next = sofar + alpha * d.dist(inst.preferred(k), s);
            for (int j : earlier[k]) next += edge_coeff * d.dist(s, z[j]);
            self(self, k + 1, next);
        }
    };
    recurse(recurse, 0, Rational(0));

    // An exact potential guarantees a pure equilibrium exists.
    if (out.count == 0) throw TheoremViolation("no pure Nash equilibrium found");
    return out;
}

struct AnalysisReport {
    Rational opt_cost;
    StrategyVector opt_vector; // potential-minimal among optima
    Rational best_eq_cost;
    Rational worst_eq_cost;
    StrategyVector best_eq_vector;
    Rational pos;                // best_eq / opt; 1 when opt = 0
    std::optional<Rational> poa; // empty = unbounded (opt = 0, worst_eq > 0)
    long long num_optima = 0;
    long long num_equilibria = 0;
};

namespace detail {

inline AnalysisReport finish_report(OptimumResult opt, StrategyVector phi_min_opt,
                                    EquilibriaSummary eq) {
    AnalysisReport r;
    r.opt_cost = opt.cost;
    r.opt_vector = std::move(phi_min_opt);
    r.best_eq_cost = eq.best_cost;
    r.worst_eq_cost = eq.worst_cost;
    r.best_eq_vector = std::move(eq.best_vector);
    r.num_optima = static_cast<long long>(opt.vectors.size());
    r.num_equilibria = eq.count;

    if (r.opt_cost > r.best_eq_cost || r.best_eq_cost > r.worst_eq_cost)
        throw TheoremViolation("cost ordering opt <= best eq <= worst eq violated");

    if (r.opt_cost.is_zero()) {
        // A zero-cost optimum gives every player cost 0, so it is itself an
        // equilibrium and the best equilibrium is free.
        if (!r.best_eq_cost.is_zero())
            throw TheoremViolation("zero-cost optimum but no zero-cost equilibrium");
        r.pos = Rational(1);
        if (r.worst_eq_cost.is_zero()) r.poa = Rational(1);
    } else {
        r.pos = r.best_eq_cost / r.opt_cost;
        r.poa = r.worst_eq_cost / r.opt_cost;
    }
    if (r.pos > Rational(2)) throw TheoremViolation("price of stability above 2");
    return r;
}

} // namespace detail

// Exhaustive end-to-end report: optimum, best/worst equilibrium, PoS, PoA.
inline AnalysisReport analyze(const Instance& inst, long long budget = kDefaultSearchBudget) {
    OptimumResult opt = brute_force_optimum(inst, budget);
    StrategyVector phi_min = detail::phi_min_vector(
        opt.vectors, [&](const StrategyVector& v) { return potential(inst, v); });
    EquilibriaSummary eq = enumerate_equilibria(inst, budget);
    return detail::finish_report(std::move(opt), std::move(phi_min), std::move(eq));
}

// Anchored-game analogue over the strategic nodes.
inline AnalysisReport anchored_analyze(const AnchoredInstance& inst,
                                       long long budget = kDefaultSearchBudget) {
    const int m = inst.strategic_count();
    const int L = inst.strategy_count();
    const long long space = detail::vector_space_size(L, m, budget);

    OptimumResult opt;
    EquilibriaSummary eq;
    bool have_opt = false;

    StrategyVector z(m, 0);
    for (long long it = 0; it < space; ++it) {
        const Rational c = anchored_social_cost(inst, z);
        if (!have_opt || c < opt.cost) {
            opt.cost = c;
            opt.vectors.clear();
            have_opt = true;
        }
        if (c == opt.cost) opt.vectors.push_back(z);
        if (anchored_is_equilibrium(inst, z).equilibrium) {
            if (eq.count == 0 || c < eq.best_cost) {
                eq.best_cost = c;
                eq.best_vector = z;
            }
            if (eq.count == 0 || c > eq.worst_cost) {
                eq.worst_cost = c;
                eq.worst_vector = z;
            }
            ++eq.count;
        }
        int t = m - 1;
        while (t >= 0 && ++z[t] == L) z[t--] = 0;
        if (t < 0) break;
    }
    if (eq.count == 0) throw TheoremViolation("no pure Nash equilibrium found");

    StrategyVector phi_min = detail::phi_min_vector(
        opt.vectors, [&](const StrategyVector& v) { return anchored_potential(inst, v); });
    return detail::finish_report(std::move(opt), std::move(phi_min), std::move(eq));
}

// PoS upper bound for two strategies and 1/2 < alpha < 1:
//   2 * ceil(alpha/(1-alpha) - 1) * (1-alpha)/alpha.
inline Rational pos_upper_bound_two(const Rational& alpha) {
    if (!(alpha > Rational(1, 2)) || !(alpha < Rational(1)))
        throw OutOfRange("bound is defined for 1/2 < alpha < 1");
    const Rational one_minus = Rational(1) - alpha;
    const Rational inner = alpha / one_minus - Rational(1);
    return Rational(2) * Rational(inner.ceil()) * one_minus / alpha;
}

struct TwoStrategyPipeline {
    Trace trace; // two-phase schedule starting at the potential-minimal optimum
    Rational opt_cost;
    Rational eq_cost;
    Rational ratio; // eq_cost / opt_cost, 1 when opt_cost = 0
};

// Equilibrium-from-optimum pipeline for |L| = 2: run the two-phase schedule
// from the potential-minimal optimum and report the cost ratio.
inline TwoStrategyPipeline equilibrium_from_optimum_two(const Instance& inst,
                                                        long long budget = kDefaultSearchBudget) {
    if (inst.strategy_count() != 2)
        throw NotTwoStrategies("pipeline requires exactly two strategies");
    TwoStrategyPipeline out;
    const OptimumResult opt = brute_force_optimum(inst, budget);
    out.opt_cost = opt.cost;
    const StrategyVector& phi_min = detail::phi_min_vector(
        opt.vectors, [&](const StrategyVector& v) { return potential(inst, v); });
    out.trace = two_phase_schedule(inst, phi_min);
    out.eq_cost = social_cost(inst, out.trace.end);
    out.ratio = out.opt_cost.is_zero() ? Rational(1) : out.eq_cost / out.opt_cost;

    const Rational& a = inst.alpha();
    if (a <= Rational(1, 2) || a == Rational(2, 3)) {
        if (out.ratio != Rational(1))
            throw TheoremViolation("two-strategy pipeline missed ratio 1 at alpha " + a.str());
    } else if (a < Rational(1) && out.ratio > pos_upper_bound_two(a)) {
        throw TheoremViolation("two-strategy pipeline exceeded the PoS bound at alpha " + a.str());
    }
    return out;
}

struct TreePipeline {
    Trace trace; // starts at the lexicographically-first optimum
    Rational opt_cost;
};

// Tree-metric equilibrium-from-optimum pipeline for rational alpha <= 1/2.
// Every improvement step moves the player to a coherent response, so the
// social cost never changes while the potential strictly drops; the end state
// is an equilibrium of cost exactly opt_cost.
inline TreePipeline equilibrium_from_optimum_tree(const Instance& inst,
                                                  long long budget = kDefaultSearchBudget) {
    if (!inst.metric().is_tree_metric())
        throw NotTreeMetric("pipeline requires a tree metric");
    if (inst.alpha() > Rational(1, 2)) throw OutOfRange("pipeline requires alpha <= 1/2");

    const OptimumResult opt = brute_force_optimum(inst, budget);
    TreePipeline out;
    out.opt_cost = opt.cost;
    out.trace.start = opt.vectors.front();

    StrategyVector z = out.trace.start;
    const long long cap = detail::vector_space_size(inst.strategy_count(), inst.node_count(),
                                                    budget);
    for (long long step = 0;; ++step) {
        if (step > cap) throw TheoremViolation("coherent descent failed to terminate");
        int who = -1;
        Rational delta(0);
        int to = -1;
        for (int i = 0; i < inst.node_count(); ++i) {
            const Rational now = player_cost_if(inst, z, i, z[i]);
            bool improvable = false;
            for (int s = 0; s < inst.strategy_count() && !improvable; ++s)
                improvable = player_cost_if(inst, z, i, s) < now;
            if (!improvable) continue;
            who = i;
            to = coherent_response(inst, z, i);
            delta = player_cost_if(inst, z, i, to) - now;
            break;
        }
        if (who < 0) break;
        const Rational dc = contribution_if(inst, z, who, to) - contribution_if(inst, z, who, z[who]);
        if (!dc.is_zero())
            throw TheoremViolation("coherent move changed the social cost of an optimum");
        detail::apply_move(inst, z, out.trace, who, to, delta);
    }
    out.trace.end = std::move(z);

    if (social_cost(inst, out.trace.end) != opt.cost)
        throw TheoremViolation("tree pipeline ended away from the optimal cost");
    return out;
}

// Single-deviation quantity: for an optimum y that is not an equilibrium and an
// improving player i, the ratio of i's contribution after its best response
// to its contribution in y. Strictly below 2/(2-alpha) whenever y is optimal
// and alpha <= 1/2; optimality of y is the caller's contract.
inline Rational single_deviation_ratio(const Instance& inst, const StrategyVector& y, int i) {
    inst.check_vector(y);
    inst.graph().check_node(i);
    if (inst.alpha() > Rational(1, 2)) throw OutOfRange("deviation bound requires alpha <= 1/2");
    const std::vector<int> br = best_responses(inst, y, i);
    const int x = br.front();
    if (!(player_cost_if(inst, y, i, x) < player_cost_if(inst, y, i, y[i])))
        throw NotImproving("player " + std::to_string(i) + " has no strictly improving response");
    return contribution_if(inst, y, i, x) / contribution_if(inst, y, i, y[i]);
}

struct LowerBoundPoint {
    long long n_star;
    Rational ratio;
};

// Path-plus-cliques lower-bound curve for 0 < alpha < 1/2: exact evaluation
// of the equilibrium cost 2(1-alpha)(n+1) against the closed-form bi-consensus
// cost bound, maximized over the path length n. The real maximizer involves a
// square root; it is never materialized as a rational. Writing the bound as
// A n^2 + B n + C, the ratio peaks at x* = sqrt(1 + (C-B)/A) - 1, so integer
// candidates are bracketed by comparing squares and the finitely many
// candidates in a window around both roundings are compared by exact ratio
// evaluation.
inline LowerBoundPoint lower_bound_curve(const Rational& alpha, const Rational& eps) {
    if (!(alpha > Rational(0)) || !(alpha < Rational(1, 2)))
        throw OutOfRange("curve is defined for 0 < alpha < 1/2");
    if (!(eps > Rational(0))) throw OutOfRange("eps must be positive");

    const Rational one_minus = Rational(1) - alpha;
    const Rational beta = Rational(1) - Rational(2) * alpha; // 1 - 2 alpha > 0
    const Rational eps1 = Rational(1) + eps;
    const Rational stretch = beta / one_minus * eps1;

    auto nash_cost = [&](long long n) { return Rational(2) * one_minus * Rational(n + 1); };
    auto biconsensus_bound = [&](long long n) {
        return alpha * Rational(n) +
               alpha * Rational(n - 1) * Rational(n - 1) / Rational(4) * stretch +
               Rational(2) * one_minus + Rational(2) * Rational(n) * beta * eps1;
    };
    auto ratio = [&](long long n) { return nash_cost(n) / biconsensus_bound(n); };

    // biconsensus_bound(n) = A n^2 + B n + C
    const Rational A = alpha * stretch / Rational(4);
    const Rational B = alpha + Rational(2) * beta * eps1 - alpha * stretch / Rational(2);
    const Rational C = alpha * stretch / Rational(4) + Rational(2) * one_minus;

    // floor of x* = sqrt(T) - 1 with T = 1 + (C-B)/A: x* >= m <=> T >= (m+1)^2
    const Rational T = Rational(1) + (C - B) / A;
    long long m = 0;
    while (T >= Rational(m + 2) * Rational(m + 2)) ++m;

    // unimodal in n, so the integer argmax is one of the two roundings; the
    // window carries a margin on both sides
    LowerBoundPoint best{0, Rational(0)};
    for (long long n = std::max<long long>(1, m - 2); n <= m + 3; ++n) {
        const Rational r = ratio(n);
        if (best.n_star == 0 || r > best.ratio) best = {n, r};
    }
    return best;
}

// PoS bound for anchored games on tree metrics with at most k fixed neighbors
// per strategic node: 1 for k <= 2, else 2(k-1)/k.
inline Rational anchored_pos_bound(long long k) {
    if (k < 1) throw OutOfRange("k must be at least 1");
    if (k <= 2) return Rational(1);
    return Rational(2) * Rational(k - 1) / Rational(k);
}

} // namespace dpg

#endif // DPG_OPTIMIZE_HPP
