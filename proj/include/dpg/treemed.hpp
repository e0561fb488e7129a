#ifndef DPG_TREEMED_HPP
#define DPG_TREEMED_HPP

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "dpg/costs.hpp"
#include "dpg/errors.hpp"
#include "dpg/instance.hpp"
#include "dpg/metric.hpp"
#include "dpg/rational.hpp"

namespace dpg {

// Tree over the strategy set with nonnegative integer node weights. Distances
// are the tree's path metric (rational edge lengths, default 1); the weight
// machinery itself is purely combinatorial.
class WeightedTree {
public:
    // tree_metric validates tree-ness and supplies all-pairs path distances.
    WeightedTree(int node_count, std::vector<TreeEdge> edges, std::vector<long long> weights)
        : metric_(tree_metric(node_count, std::move(edges))), weights_(std::move(weights)) {
        if (static_cast<int>(weights_.size()) != node_count)
            throw ValidationError("one weight per tree node required");
        for (long long w : weights_)
            if (w < 0) throw ValidationError("tree node weights must be nonnegative integers");
        adj_.resize(node_count);
        for (const auto& e : metric_.tree_edges()) {
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        total_ = 0;
        for (long long w : weights_) total_ += w;
    }

    int size() const { return metric_.size(); }
    long long weight(int v) const { return weights_[v]; }
    long long total_weight() const { return total_; }
    const Rational& dist(int u, int v) const { return metric_.dist(u, v); }
    const std::vector<TreeEdge>& edges() const { return metric_.tree_edges(); }
    const std::vector<int>& adjacent(int v) const { return adj_[v]; }

    Rational score(int u) const {
        Rational s(0);
        for (int v = 0; v < size(); ++v)
            if (weights_[v] != 0) s += Rational(weights_[v]) * dist(u, v);
        return s;
    }

private:
    Metric metric_;
    std::vector<long long> weights_;
    std::vector<std::vector<int>> adj_;
    long long total_ = 0;
};

struct MedianSet {
    std::vector<int> nodes; // ascending
    // w(V) = 0 degenerates the argmin to the full node set; flagged rather
    // than treated as an error.
    bool zero_total_weight = false;
};

// M(T) = argmin_u sum_v w(v) * d(u, v).
inline MedianSet medians(const WeightedTree& t) {
    MedianSet out;
    if (t.total_weight() == 0) {
        out.zero_total_weight = true;
        out.nodes.resize(t.size());
        for (int v = 0; v < t.size(); ++v) out.nodes[v] = v;
        return out;
    }
    Rational best(0);
    for (int u = 0; u < t.size(); ++u) {
        Rational s = t.score(u);
        if (out.nodes.empty() || s < best) {
            best = s;
            out.nodes.assign(1, u);
        } else if (s == best) {
            out.nodes.push_back(u);
        }
    }
    return out;
}

// Separators: nodes v such that every connected component of T - v has weight
// at most w(V)/2. Compared exactly as 2*w(component) <= w(V).
inline std::vector<int> separators(const WeightedTree& t) {
    const int n = t.size();
    std::vector<int> out;
    std::vector<int> stack;
    std::vector<char> seen(n);
    for (int v = 0; v < n; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        seen[v] = 1;
        bool ok = true;
        for (int root : t.adjacent(v)) {
            if (seen[root]) continue;
            long long w = 0;
            stack.assign(1, root);
            seen[root] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                w += t.weight(u);
                for (int x : t.adjacent(u))
                    if (!seen[x]) {
                        seen[x] = 1;
                        stack.push_back(x);
                    }
            }
            if (2 * w > t.total_weight()) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(v);
    }
    return out;
}

// T_{i,z}(q, r): the metric-defining tree with node weights
//   w(v) = q*[v = s_i] + r * |{j in N(i) : z_j = v}|.
// With alpha = a/(a+b), medians of T(a,b) are i's best responses and medians
// of T(a,2b) are i's social-cost minimizers.
inline WeightedTree build_response_tree(const Instance& inst, const StrategyVector& z, int i,
                                        long long q, long long r) {
    inst.check_vector(z);
    inst.graph().check_node(i);
    if (q < 0 || r < 0) throw ValidationError("tree weights require q, r >= 0");
    const Metric& m = inst.metric();
    if (!m.is_tree_metric()) throw NotTreeMetric("response trees require a tree metric");
    std::vector<long long> w(m.size(), 0);
    w[inst.preferred(i)] += q;
    for (int j : inst.graph().neighbors(i)) w[z[j]] += r;
    return WeightedTree(m.size(), m.tree_edges(), std::move(w));
}

namespace detail {

inline std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace detail

// A strategy that is simultaneously a best response and a social-cost
// minimizer for player i: the lowest-index element of
// M(T_{i,z}(a,b)) /\ M(T_{i,z}(a,2b)). For alpha = a/(a+b) <= 1/2 on a tree
// metric the intersection is provably nonempty; an EmptyIntersection here is
// a falsified claim, not a recoverable state.
inline int coherent_response(const Instance& inst, const StrategyVector& z, int i, long long a,
                             long long b) {
    if (a < 0 || b <= 0 || a > b) throw OutOfRange("coherent responses require alpha = a/(a+b) <= 1/2");
    if (inst.alpha() * Rational(a + b) != Rational(a))
        throw ValidationError("a/(a+b) does not match the instance alpha");
    const std::vector<int> br = medians(build_response_tree(inst, z, i, a, b)).nodes;
    const std::vector<int> sc = medians(build_response_tree(inst, z, i, a, 2 * b)).nodes;
    const std::vector<int> both = detail::intersect_sorted(br, sc);
    if (both.empty())
        throw EmptyIntersection("median sets of T(a,b) and T(a,2b) are disjoint for player " +
                                std::to_string(i));
    return both.front();
}

// Same, deriving (a, b) from the instance's alpha in lowest terms.
inline int coherent_response(const Instance& inst, const StrategyVector& z, int i) {
    const Rational& alpha = inst.alpha();
    if (alpha > Rational(1, 2)) throw OutOfRange("coherent responses require alpha <= 1/2");
    long long a = alpha.num().get_si();
    long long b = mpz_class(alpha.den() - alpha.num()).get_si();
    return coherent_response(inst, z, i, a, b);
}

// Anchored variant of the response tree for a strategic node with exactly two
// fixed neighbors (preferences s_1, s_2):
//   w(v) = r * |{j strategic nbr : z_j = v}| + sum_{j in {1,2}, s_j = v} q_j.
inline WeightedTree anchored_response_tree(const AnchoredInstance& inst, const StrategyVector& z,
                                           int i, long long q1, long long q2, long long r) {
    inst.check_vector(z);
    if (inst.is_fixed(i)) throw NotStrategic("node " + std::to_string(i) + " is fixed");
    if (q1 < 0 || q2 < 0 || r < 0) throw ValidationError("tree weights require q1, q2, r >= 0");
    const Metric& m = inst.metric();
    if (!m.is_tree_metric()) throw NotTreeMetric("response trees require a tree metric");
    const std::vector<int> fixed = inst.fixed_neighbors(i);
    if (fixed.size() != 2)
        throw WrongFixedDegree("anchored response tree requires exactly two fixed neighbors");
    std::vector<long long> w(m.size(), 0);
    w[inst.fixed_preference(fixed[0])] += q1;
    w[inst.fixed_preference(fixed[1])] += q2;
    for (int j : inst.graph().neighbors(i))
        if (inst.is_strategic(j)) w[z[inst.slot(j)]] += r;
    return WeightedTree(m.size(), m.tree_edges(), std::move(w));
}

// Anchored coherent response for a strategic node with at most two fixed
// neighbors: lowest-index element of M(T(1,..,1)) /\ M(T(1,..,2)), where each
// fixed neighbor contributes unit weight at its preference. Nonempty for
// |F(i)| <= 2 on tree metrics.
inline int anchored_coherent_response(const AnchoredInstance& inst, const StrategyVector& z, int i) {
    inst.check_vector(z);
    if (inst.is_fixed(i)) throw NotStrategic("node " + std::to_string(i) + " is fixed");
    const Metric& m = inst.metric();
    if (!m.is_tree_metric()) throw NotTreeMetric("coherent responses require a tree metric");
    const std::vector<int> fixed = inst.fixed_neighbors(i);
    if (fixed.size() > 2)
        throw WrongFixedDegree("anchored coherent responses require at most two fixed neighbors");

    auto weighted = [&](long long r) {
        std::vector<long long> w(m.size(), 0);
        for (int j : fixed) w[inst.fixed_preference(j)] += 1;
        for (int j : inst.graph().neighbors(i))
            if (inst.is_strategic(j)) w[z[inst.slot(j)]] += r;
        return WeightedTree(m.size(), m.tree_edges(), std::move(w));
    };
    const std::vector<int> br = medians(weighted(1)).nodes;
    const std::vector<int> sc = medians(weighted(2)).nodes;
    const std::vector<int> both = detail::intersect_sorted(br, sc);
    if (both.empty())
        throw EmptyIntersection("anchored median sets are disjoint for node " + std::to_string(i));
    return both.front();
}

} // namespace dpg

#endif // DPG_TREEMED_HPP
