#ifndef DPG_INSTANCE_HPP
#define DPG_INSTANCE_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dpg/errors.hpp"
#include "dpg/graph.hpp"
#include "dpg/metric.hpp"
#include "dpg/rational.hpp"

namespace dpg {

// One strategy index per node (per strategic node, for anchored games).
using StrategyVector = std::vector<int>;

// A discrete preference game: interaction graph, strategy metric, one
// preferred strategy per node, and the preference weight alpha in [0,1].
class Instance {
public:
    Instance(Graph graph, Metric metric, std::vector<int> preferred, Rational alpha)
        : graph_(std::move(graph)),
          metric_(std::move(metric)),
          preferred_(std::move(preferred)),
          alpha_(std::move(alpha)) {
        if (static_cast<int>(preferred_.size()) != graph_.node_count())
            throw ValidationError("preferred strategies must cover every node");
        for (int s : preferred_) metric_.check_strategy(s);
        if (alpha_ < Rational(0) || alpha_ > Rational(1))
            throw OutOfRange("alpha must lie in [0,1]");
    }

    const Graph& graph() const { return graph_; }
    const Metric& metric() const { return metric_; }
    int node_count() const { return graph_.node_count(); }
    int strategy_count() const { return metric_.size(); }
    int preferred(int i) const {
        graph_.check_node(i);
        return preferred_[i];
    }
    const std::vector<int>& preferred() const { return preferred_; }
    const Rational& alpha() const { return alpha_; }

    StrategyVector preferred_vector() const { return preferred_; }

    void check_vector(const StrategyVector& z) const {
        if (static_cast<int>(z.size()) != node_count())
            throw ValidationError("strategy vector length mismatch");
        for (int s : z) metric_.check_strategy(s);
    }

private:
    Graph graph_;
    Metric metric_;
    std::vector<int> preferred_;
    Rational alpha_;
};

// Anchored preference game (alpha = 1/2 regime): nodes split into fixed nodes,
// pinned to a preferred strategy, and strategic nodes with pure coordination
// cost. A StrategyVector for an anchored game has one entry per strategic
// node, in ascending node order.
class AnchoredInstance {
public:
    AnchoredInstance(Graph graph, Metric metric, std::vector<std::pair<int, int>> fixed_prefs)
        : graph_(std::move(graph)), metric_(std::move(metric)) {
        const int n = graph_.node_count();
        pref_of_fixed_.assign(n, -1);
        strategic_slot_.assign(n, -1);
        std::vector<char> is_fixed(n, 0);
        for (auto [node, pref] : fixed_prefs) {
            graph_.check_node(node);
            metric_.check_strategy(pref);
            if (is_fixed[node]) throw ValidationError("node " + std::to_string(node) + " fixed twice");
            is_fixed[node] = 1;
            pref_of_fixed_[node] = pref;
            fixed_.push_back(node);
        }
        std::sort(fixed_.begin(), fixed_.end());
        for (int v = 0; v < n; ++v) {
            if (is_fixed[v]) continue;
            strategic_slot_[v] = static_cast<int>(strategic_.size());
            strategic_.push_back(v);
        }
    }

    const Graph& graph() const { return graph_; }
    const Metric& metric() const { return metric_; }
    int node_count() const { return graph_.node_count(); }
    int strategy_count() const { return metric_.size(); }

    const std::vector<int>& fixed_nodes() const { return fixed_; }
    const std::vector<int>& strategic_nodes() const { return strategic_; }
    int strategic_count() const { return static_cast<int>(strategic_.size()); }

    bool is_fixed(int node) const {
        graph_.check_node(node);
        return pref_of_fixed_[node] >= 0;
    }
    bool is_strategic(int node) const { return !is_fixed(node); }

    int fixed_preference(int node) const {
        if (!is_fixed(node)) throw ValidationError("node " + std::to_string(node) + " is not fixed");
        return pref_of_fixed_[node];
    }

    // Index of a strategic node inside a StrategyVector.
    int slot(int node) const {
        if (is_fixed(node)) throw NotStrategic("node " + std::to_string(node) + " is fixed");
        return strategic_slot_[node];
    }

    // Strategy played at `node` under z: pinned preference for fixed nodes.
    int played(int node, const StrategyVector& z) const {
        return is_fixed(node) ? pref_of_fixed_[node] : z[strategic_slot_[node]];
    }

    std::vector<int> fixed_neighbors(int node) const {
        std::vector<int> out;
        for (int j : graph_.neighbors(node))
            if (is_fixed(j)) out.push_back(j);
        return out;
    }

    // k = max number of fixed neighbors of any strategic node.
    int max_fixed_neighbors() const {
        int k = 0;
        for (int v : strategic_) {
            int c = 0;
            for (int j : graph_.neighbors(v))
                if (is_fixed(j)) ++c;
            k = std::max(k, c);
        }
        return k;
    }

    void check_vector(const StrategyVector& z) const {
        if (static_cast<int>(z.size()) != strategic_count())
            throw ValidationError("strategy vector length mismatch (one entry per strategic node)");
        for (int s : z) metric_.check_strategy(s);
    }

private:
    Graph graph_;
    Metric metric_;
    std::vector<int> fixed_;
    std::vector<int> strategic_;
    std::vector<int> pref_of_fixed_;  // by node, -1 for strategic nodes
    std::vector<int> strategic_slot_; // by node, -1 for fixed nodes
};

} // namespace dpg

#endif // DPG_INSTANCE_HPP
