#ifndef DPG_DYNAMICS_HPP
#define DPG_DYNAMICS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpg/costs.hpp"
#include "dpg/errors.hpp"
#include "dpg/instance.hpp"
#include "dpg/treemed.hpp"

namespace dpg {

// One strict-improvement step. cost_delta = c_i(to) - c_i(from) < 0 always;
// indifferent switches are never recorded. phi_after is the potential of the
// state after the move (also Delta phi = cost_delta, by exactness).
struct Move {
    int player;
    int from;
    int to;
    Rational cost_delta;
    Rational phi_after;
};

struct Trace {
    StrategyVector start;
    std::vector<Move> moves;
    StrategyVector end;
};

// Full argmin set of c_i(., z_-i) over L, ascending. Never empty.
inline std::vector<int> best_responses(const Instance& inst, const StrategyVector& z, int i) {
    inst.check_vector(z);
    inst.graph().check_node(i);
    std::vector<int> out;
    Rational best(0);
    for (int s = 0; s < inst.strategy_count(); ++s) {
        Rational c = player_cost_if(inst, z, i, s);
        if (out.empty() || c < best) {
            best = c;
            out.assign(1, s);
        } else if (c == best) {
            out.push_back(s);
        }
    }
    return out;
}

// Full argmin set of SC_i(., z_-i) over L, ascending.
inline std::vector<int> social_responses(const Instance& inst, const StrategyVector& z, int i) {
    inst.check_vector(z);
    inst.graph().check_node(i);
    std::vector<int> out;
    Rational best(0);
    for (int s = 0; s < inst.strategy_count(); ++s) {
        Rational c = contribution_if(inst, z, i, s);
        if (out.empty() || c < best) {
            best = c;
            out.assign(1, s);
        } else if (c == best) {
            out.push_back(s);
        }
    }
    return out;
}

struct EquilibriumCheck {
    bool equilibrium;
    // On failure, a witness strictly improving move (lowest player index,
    // lowest target strategy among that player's best responses).
    std::optional<Move> witness;
};

inline EquilibriumCheck is_equilibrium(const Instance& inst, const StrategyVector& z) {
    inst.check_vector(z);
    for (int i = 0; i < inst.node_count(); ++i) {
        const Rational current = player_cost_if(inst, z, i, z[i]);
        int best_s = -1;
        Rational best(0);
        for (int s = 0; s < inst.strategy_count(); ++s) {
            Rational c = player_cost_if(inst, z, i, s);
            if (best_s < 0 || c < best) {
                best = c;
                best_s = s;
            }
        }
        if (best < current) {
            StrategyVector after = z;
            after[i] = best_s;
            return {false, Move{i, z[i], best_s, best - current, potential(inst, after)}};
        }
    }
    return {true, std::nullopt};
}

namespace detail {

inline void apply_move(const Instance& inst, StrategyVector& z, Trace& trace, int i, int to,
                       const Rational& delta) {
    Move mv{i, z[i], to, delta, Rational(0)};
    z[i] = to;
    mv.phi_after = potential(inst, z);
    trace.moves.push_back(std::move(mv));
}

// One pass of "while somebody improves by switching to `target`, let it".
// Players are scanned in ascending index; any order reaches an equilibrium,
// a fixed one makes traces reproducible.
inline void run_phase(const Instance& inst, StrategyVector& z, Trace& trace, int target) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < inst.node_count(); ++i) {
            if (z[i] == target) continue;
            const Rational now = player_cost_if(inst, z, i, z[i]);
            const Rational then = player_cost_if(inst, z, i, target);
            if (then < now) {
                apply_move(inst, z, trace, i, target, then - now);
                changed = true;
            }
        }
    }
}

} // namespace detail

// The two-strategy best-response order that reaches an equilibrium in at most
// 2n moves: first everyone who wants strategy 0 switches, then everyone who
// wants strategy 1.
inline Trace two_phase_schedule(const Instance& inst, const StrategyVector& z0) {
    inst.check_vector(z0);
    if (inst.strategy_count() != 2)
        throw NotTwoStrategies("two-phase schedule requires exactly two strategies");
    Trace trace;
    trace.start = z0;
    StrategyVector z = z0;
    detail::run_phase(inst, z, trace, 0);
    detail::run_phase(inst, z, trace, 1);
    trace.end = std::move(z);
    return trace;
}

enum class MovePicker {
    FirstImproving, // lowest improvable player, lowest-index best response
    BestImproving,  // largest cost drop; ties to lowest player then strategy
    CoherentTree,   // lowest improvable player, coherent_response target
};

// Generic potential descent: repeat strict-improvement best responses until
// none exists. phi strictly decreases with every move, so this terminates
// within |L|^n moves and ends at a Nash equilibrium.
inline Trace potential_descent(const Instance& inst, const StrategyVector& z0, MovePicker picker) {
    inst.check_vector(z0);
    if (picker == MovePicker::CoherentTree) {
        if (!inst.metric().is_tree_metric())
            throw NotTreeMetric("coherent-tree descent requires a tree metric");
        if (inst.alpha() > Rational(1, 2))
            throw OutOfRange("coherent-tree descent requires alpha <= 1/2");
    }

    Trace trace;
    trace.start = z0;
    StrategyVector z = z0;

    // phi strictly decreases, so states never repeat; this cap is unreachable
    // and guards against an exactness bug only.
    long long cap = 1;
    for (int i = 0; i < inst.node_count(); ++i) {
        cap *= inst.strategy_count();
        if (cap > (1LL << 62) / inst.strategy_count()) break;
    }

    for (long long step = 0;; ++step) {
        if (step > cap) throw TheoremViolation("potential descent failed to terminate");
        int who = -1, to = -1;
        Rational delta(0);
        if (picker == MovePicker::BestImproving) {
            for (int i = 0; i < inst.node_count(); ++i) {
                const Rational now = player_cost_if(inst, z, i, z[i]);
                for (int s = 0; s < inst.strategy_count(); ++s) {
                    if (s == z[i]) continue;
                    Rational d = player_cost_if(inst, z, i, s) - now;
                    if (d < Rational(0) && (who < 0 || d < delta)) {
                        who = i;
                        to = s;
                        delta = d;
                    }
                }
            }
        } else {
            for (int i = 0; i < inst.node_count() && who < 0; ++i) {
                const Rational now = player_cost_if(inst, z, i, z[i]);
                const std::vector<int> br = best_responses(inst, z, i);
                const Rational best = player_cost_if(inst, z, i, br.front());
                if (best < now) {
                    who = i;
                    to = picker == MovePicker::CoherentTree ? coherent_response(inst, z, i)
                                                            : br.front();
                    delta = player_cost_if(inst, z, i, to) - now;
                }
            }
        }
        if (who < 0) break;
        detail::apply_move(inst, z, trace, who, to, delta);
    }
    trace.end = std::move(z);
    return trace;
}

struct StrongCheck {
    bool strong;
    // On failure: the witness coalition (ascending node ids) and the strategy
    // each member deviates to, aligned with `coalition`.
    std::vector<int> coalition;
    std::vector<int> deviation;
};

inline constexpr long long kDefaultSearchBudget = 20'000'000;

// Brute-force strong-equilibrium check over all coalitions of size at most
// max_coalition. Coalitions are enumerated by increasing size and the first
// witness is returned. The search space sum_{|S|<=max} |L|^|S| is guarded by
// `budget`.
inline StrongCheck is_strong_equilibrium(const Instance& inst, const StrategyVector& z,
                                         int max_coalition,
                                         long long budget = kDefaultSearchBudget) {
    inst.check_vector(z);
    const int n = inst.node_count();
    const int L = inst.strategy_count();
    if (max_coalition < 1 || max_coalition > n)
        throw OutOfRange("coalition size must lie in [1, n]");

    // Guard: sum over coalitions of |L|^|coalition|.
    {
        long double work = 0;
        long double choose = 1; // C(n, s) running value
        long double pw = 1;
        for (int s = 1; s <= max_coalition; ++s) {
            choose = choose * (n - s + 1) / s;
            pw *= L;
            work += choose * pw;
            if (work > static_cast<long double>(budget))
                throw SearchTooLarge("strong-equilibrium search exceeds budget");
        }
    }

    std::vector<Rational> base_cost(n);
    for (int i = 0; i < n; ++i) base_cost[i] = player_cost_if(inst, z, i, z[i]);

    std::vector<int> members;
    StrategyVector work = z;
    StrongCheck result{true, {}, {}};

    auto try_deviations = [&](const std::vector<int>& coalition) -> bool {
        // Odometer over |L|^|coalition| joint strategies.
        std::vector<int> pick(coalition.size(), 0);
        while (true) {
            bool identity = true;
            for (size_t t = 0; t < coalition.size(); ++t) {
                work[coalition[t]] = pick[t];
                if (pick[t] != z[coalition[t]]) identity = false;
            }
            if (!identity) {
                bool all_better = true;
                for (size_t t = 0; t < coalition.size() && all_better; ++t) {
                    int i = coalition[t];
                    if (!(player_cost_if(inst, work, i, work[i]) < base_cost[i])) all_better = false;
                }
                if (all_better) {
                    result.strong = false;
                    result.coalition = coalition;
                    result.deviation = pick;
                    return true;
                }
            }
            size_t t = 0;
            while (t < pick.size() && ++pick[t] == L) pick[t++] = 0;
            if (t == pick.size()) break;
        }
        for (int i : coalition) work[i] = z[i];
        return false;
    };

    // Lexicographic combinations of each size.
    auto coalitions_of_size = [&](int s, auto&& self_ref) -> bool {
        if (static_cast<int>(members.size()) == s) return try_deviations(members);
        int start = members.empty() ? 0 : members.back() + 1;
        for (int v = start; v <= n - (s - static_cast<int>(members.size())); ++v) {
            members.push_back(v);
            if (self_ref(s, self_ref)) return true;
            members.pop_back();
        }
        return false;
    };

    for (int s = 1; s <= max_coalition; ++s) {
        members.clear();
        if (coalitions_of_size(s, coalitions_of_size)) break;
    }
    return result;
}

// Anchored-game analogues: best responses and equilibrium over the strategic
// nodes only.
inline std::vector<int> anchored_best_responses(const AnchoredInstance& inst,
                                                const StrategyVector& z, int i) {
    inst.check_vector(z);
    if (inst.is_fixed(i)) throw NotStrategic("node " + std::to_string(i) + " is fixed");
    std::vector<int> out;
    Rational best(0);
    for (int s = 0; s < inst.strategy_count(); ++s) {
        Rational c = anchored_player_cost_if(inst, z, i, s);
        if (out.empty() || c < best) {
            best = c;
            out.assign(1, s);
        } else if (c == best) {
            out.push_back(s);
        }
    }
    return out;
}

inline EquilibriumCheck anchored_is_equilibrium(const AnchoredInstance& inst,
                                                const StrategyVector& z) {
    inst.check_vector(z);
    for (int i : inst.strategic_nodes()) {
        const int slot = inst.slot(i);
        const Rational current = anchored_player_cost_if(inst, z, i, z[slot]);
        int best_s = -1;
        Rational best(0);
        for (int s = 0; s < inst.strategy_count(); ++s) {
            Rational c = anchored_player_cost_if(inst, z, i, s);
            if (best_s < 0 || c < best) {
                best = c;
                best_s = s;
            }
        }
        if (best < current) {
            StrategyVector after = z;
            after[slot] = best_s;
            return {false,
                    Move{i, z[slot], best_s, best - current, anchored_potential(inst, after)}};
        }
    }
    return {true, std::nullopt};
}

} // namespace dpg

#endif // DPG_DYNAMICS_HPP
