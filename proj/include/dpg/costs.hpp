#ifndef DPG_COSTS_HPP
#define DPG_COSTS_HPP

#include "dpg/instance.hpp"
#include "dpg/rational.hpp"

namespace dpg {

// Player cost split into its two summands:
//   c_i(z) = alpha * d(s_i, z_i)  +  (1-alpha) * sum_{j in N(i)} d(z_i, z_j).
struct CostBreakdown {
    Rational preference_term;
    Rational neighbor_term;
    Rational total;
};

inline CostBreakdown player_cost(const Instance& inst, const StrategyVector& z, int i) {
    inst.check_vector(z);
    inst.graph().check_node(i);
    const Metric& d = inst.metric();
    const Rational one_minus_alpha = Rational(1) - inst.alpha();

    CostBreakdown out;
    out.preference_term = inst.alpha() * d.dist(inst.preferred(i), z[i]);
    Rational nbr(0);
    for (int j : inst.graph().neighbors(i)) nbr += d.dist(z[i], z[j]);
    out.neighbor_term = one_minus_alpha * nbr;
    out.total = out.preference_term + out.neighbor_term;
    return out;
}

// Player cost of `i` if it unilaterally played `s` while the rest keep z.
// Cheaper than copying z in the hot dynamics loops.
inline Rational player_cost_if(const Instance& inst, const StrategyVector& z, int i, int s) {
    const Metric& d = inst.metric();
    Rational nbr(0);
    for (int j : inst.graph().neighbors(i)) nbr += d.dist(s, z[j]);
    return inst.alpha() * d.dist(inst.preferred(i), s) + (Rational(1) - inst.alpha()) * nbr;
}

// Social cost: C(z) = sum_i alpha*d(s_i,z_i) + 2*sum_{(i,j) in E} (1-alpha)*d(z_i,z_j).
// Each edge is counted once with coefficient 2; the sum of player costs is
// the cross-check, not the definition.
inline Rational social_cost(const Instance& inst, const StrategyVector& z) {
    inst.check_vector(z);
    const Metric& d = inst.metric();
    Rational pref(0), edge(0);
    for (int i = 0; i < inst.node_count(); ++i) pref += d.dist(inst.preferred(i), z[i]);
    for (auto [a, b] : inst.graph().edges()) edge += d.dist(z[a], z[b]);
    return inst.alpha() * pref + Rational(2) * (Rational(1) - inst.alpha()) * edge;
}

inline Rational contribution_if(const Instance& inst, const StrategyVector& z, int i, int s) {
    const Metric& d = inst.metric();
    Rational nbr(0);
    for (int j : inst.graph().neighbors(i)) nbr += d.dist(s, z[j]);
    return inst.alpha() * d.dist(inst.preferred(i), s) +
           Rational(2) * (Rational(1) - inst.alpha()) * nbr;
}

// Contribution of player i to the social cost:
//   SC_i(z) = alpha * d(s_i, z_i) + 2 * sum_{j in N(i)} (1-alpha) * d(z_i, z_j).
// Changing only z_i changes C by exactly the change in this quantity.
inline Rational contribution(const Instance& inst, const StrategyVector& z, int i) {
    inst.check_vector(z);
    inst.graph().check_node(i);
    return contribution_if(inst, z, i, z[i]);
}

// Exact potential:
//   phi(z) = alpha * sum_i d(z_i, s_i) + (1-alpha) * sum_{(i,j) in E} d(z_i, z_j).
// For any unilateral move, delta phi = delta c_i, exactly; and
// C(z)/2 <= phi(z) <= C(z).
inline Rational potential(const Instance& inst, const StrategyVector& z) {
    inst.check_vector(z);
    const Metric& d = inst.metric();
    Rational pref(0), edge(0);
    for (int i = 0; i < inst.node_count(); ++i) pref += d.dist(z[i], inst.preferred(i));
    for (auto [a, b] : inst.graph().edges()) edge += d.dist(z[a], z[b]);
    return inst.alpha() * pref + (Rational(1) - inst.alpha()) * edge;
}

inline Rational anchored_player_cost_if(const AnchoredInstance& inst, const StrategyVector& z,
                                        int i, int s) {
    const Metric& d = inst.metric();
    Rational total(0);
    for (int j : inst.graph().neighbors(i)) total += d.dist(s, inst.played(j, z));
    return total;
}

// Anchored-game cost of a strategic node: pure coordination,
//   c_i(z) = sum_{j in N(i) fixed} d(z_i, s_j) + sum_{j in N(i) strategic} d(z_i, z_j).
inline Rational anchored_player_cost(const AnchoredInstance& inst, const StrategyVector& z, int i) {
    inst.check_vector(z);
    if (inst.is_fixed(i)) throw NotStrategic("node " + std::to_string(i) + " is fixed");
    return anchored_player_cost_if(inst, z, i, z[inst.slot(i)]);
}

// Anchored social cost: strategic-fixed edges once, strategic-strategic edges
// twice, fixed-fixed edges contribute nothing.
inline Rational anchored_social_cost(const AnchoredInstance& inst, const StrategyVector& z) {
    inst.check_vector(z);
    const Metric& d = inst.metric();
    Rational mixed(0), internal(0);
    for (auto [a, b] : inst.graph().edges()) {
        const bool fa = inst.is_fixed(a), fb = inst.is_fixed(b);
        if (fa && fb) continue;
        if (!fa && !fb)
            internal += d.dist(inst.played(a, z), inst.played(b, z));
        else
            mixed += d.dist(inst.played(a, z), inst.played(b, z));
    }
    return mixed + Rational(2) * internal;
}

// Exact potential of the anchored game: strategic-fixed and
// strategic-strategic edges each counted once.
inline Rational anchored_potential(const AnchoredInstance& inst, const StrategyVector& z) {
    inst.check_vector(z);
    const Metric& d = inst.metric();
    Rational total(0);
    for (auto [a, b] : inst.graph().edges()) {
        if (inst.is_fixed(a) && inst.is_fixed(b)) continue;
        total += d.dist(inst.played(a, z), inst.played(b, z));
    }
    return total;
}

} // namespace dpg

#endif // DPG_COSTS_HPP
