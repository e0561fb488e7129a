#ifndef DPG_METRIC_HPP
#define DPG_METRIC_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dpg/errors.hpp"
#include "dpg/rational.hpp"

namespace dpg {

enum class MetricKind { Matrix, Tree, Line, Cycle };

struct TreeEdge {
    int u;
    int v;
    Rational length;
};

// Metric on the strategy set L = {0, .., size-1}. The three metric axioms are
// verified on every construction path; |L| is small by design, so the O(|L|^3)
// check is always on.
//
// Metrics built from a tree (tree_metric, line_metric) keep the defining tree,
// which the median machinery in treemed.hpp requires.
class Metric {
public:
    int size() const { return size_; }

    const Rational& dist(int i, int j) const {
        check_strategy(i);
        check_strategy(j);
        return d_[static_cast<size_t>(i) * size_ + j];
    }

    MetricKind kind() const { return kind_; }
    bool is_tree_metric() const { return kind_ == MetricKind::Tree || kind_ == MetricKind::Line; }

    // Defining tree of a tree/line metric; throws for matrix/cycle metrics.
    const std::vector<TreeEdge>& tree_edges() const {
        if (!is_tree_metric())
            throw NotTreeMetric("metric was not built from a tree");
        return tree_edges_;
    }

    const std::vector<Rational>& line_positions() const { return line_positions_; }
    int cycle_size() const { return cycle_size_; }

    void check_strategy(int s) const {
        if (s < 0 || s >= size_)
            throw IndexOutOfRange("strategy index " + std::to_string(s) + " out of range");
    }

    friend Metric make_metric(const std::vector<std::vector<Rational>>& matrix);
    friend Metric tree_metric(int strategy_count, std::vector<TreeEdge> edges);
    friend Metric line_metric(const std::vector<Rational>& positions);
    friend Metric cycle_metric(int size);

private:
    Metric() = default;

    void verify_axioms() const {
        const int m = size_;
        auto at = [&](int i, int j) -> const Rational& { return d_[static_cast<size_t>(i) * m + j]; };
        for (int i = 0; i < m; ++i) {
            if (!at(i, i).is_zero())
                throw AxiomViolation(AxiomViolation::Axiom::Diagonal, i, i, -1,
                                     "d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0");
        }
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                if (at(i, j) != at(j, i))
                    throw AxiomViolation(AxiomViolation::Axiom::Symmetry, i, j, -1,
                                         "d(" + std::to_string(i) + "," + std::to_string(j) + ") asymmetric");
                if (at(i, j).sign() <= 0)
                    throw AxiomViolation(AxiomViolation::Axiom::Positivity, i, j, -1,
                                         "d(" + std::to_string(i) + "," + std::to_string(j) +
                                             ") must be positive for distinct strategies");
            }
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) {
                    if (at(i, j) > at(i, k) + at(k, j))
                        throw AxiomViolation(AxiomViolation::Axiom::Triangle, i, j, k,
                                             "triangle inequality fails: d(" + std::to_string(i) + "," +
                                                 std::to_string(j) + ") > d(.," + std::to_string(k) + ") sum");
                }
    }

    int size_ = 0;
    std::vector<Rational> d_;
    MetricKind kind_ = MetricKind::Matrix;
    std::vector<TreeEdge> tree_edges_;
    std::vector<Rational> line_positions_;
    int cycle_size_ = 0;
};

// Metric from an explicit distance matrix; all three axioms checked.
inline Metric make_metric(const std::vector<std::vector<Rational>>& matrix) {
    const int m = static_cast<int>(matrix.size());
    if (m < 1) throw ValidationError("metric needs at least one strategy");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != m) throw ValidationError("distance matrix is not square");
    Metric out;
    out.size_ = m;
    out.kind_ = MetricKind::Matrix;
    out.d_.reserve(static_cast<size_t>(m) * m);
    for (const auto& row : matrix)
        for (const auto& x : row) out.d_.push_back(x);
    out.verify_axioms();
    return out;
}

// Shortest-path metric of a tree over the strategy set. The strategy set is
// the vertex set of the tree; edge lengths must be positive.
inline Metric tree_metric(int strategy_count, std::vector<TreeEdge> edges) {
    if (strategy_count < 1) throw ValidationError("tree metric needs at least one strategy");
    if (static_cast<int>(edges.size()) != strategy_count - 1)
        throw NotATree("a tree on " + std::to_string(strategy_count) + " nodes has " +
                       std::to_string(strategy_count - 1) + " edges");
    std::vector<std::vector<std::pair<int, Rational>>> adj(strategy_count);
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= strategy_count || e.v < 0 || e.v >= strategy_count)
            throw IndexOutOfRange("tree edge endpoint out of range");
        if (e.u == e.v) throw NotATree("self-loop in tree edges");
        if (e.length.sign() <= 0) throw ValidationError("tree edge lengths must be positive");
        adj[e.u].push_back({e.v, e.length});
        adj[e.v].push_back({e.u, e.length});
    }

    Metric out;
    out.size_ = strategy_count;
    out.kind_ = MetricKind::Tree;
    out.d_.assign(static_cast<size_t>(strategy_count) * strategy_count, Rational(0));

    // DFS from each root; with n-1 edges, reaching every node proves both
    // connectivity and acyclicity.
    std::vector<int> stack;
    std::vector<char> seen(strategy_count);
    for (int root = 0; root < strategy_count; ++root) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, root);
        seen[root] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [v, len] : adj[u]) {
                if (seen[v]) continue;
                seen[v] = 1;
                ++reached;
                out.d_[static_cast<size_t>(root) * strategy_count + v] =
                    out.d_[static_cast<size_t>(root) * strategy_count + u] + len;
                stack.push_back(v);
            }
        }
        if (reached != strategy_count) throw NotATree("tree edges do not connect the strategy set");
    }
    out.tree_edges_ = std::move(edges);
    out.verify_axioms();
    return out;
}

// Path metric from strictly increasing positions: d(i,j) = |pos_i - pos_j|.
// A line metric is the tree metric of a path, and is stored as such.
inline Metric line_metric(const std::vector<Rational>& positions) {
    const int m = static_cast<int>(positions.size());
    if (m < 1) throw ValidationError("line metric needs at least one strategy");
    for (int i = 0; i + 1 < m; ++i)
        if (!(positions[i] < positions[i + 1]))
            throw NotSorted("line positions must be strictly increasing");
    std::vector<TreeEdge> edges;
    for (int i = 0; i + 1 < m; ++i)
        edges.push_back({i, i + 1, positions[i + 1] - positions[i]});
    Metric out = tree_metric(m, std::move(edges));
    out.kind_ = MetricKind::Line;
    out.line_positions_ = positions;
    return out;
}

// Cycle of m unit edges: d(i,j) = min(|i-j|, m-|i-j|). Not a tree metric.
inline Metric cycle_metric(int size) {
    if (size < 3) throw TooSmall("cycle metric needs at least 3 points");
    Metric out;
    out.size_ = size;
    out.kind_ = MetricKind::Cycle;
    out.cycle_size_ = size;
    out.d_.assign(static_cast<size_t>(size) * size, Rational(0));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            int a = i > j ? i - j : j - i;
            out.d_[static_cast<size_t>(i) * size + j] = Rational(std::min(a, size - a));
        }
    out.verify_axioms();
    return out;
}

} // namespace dpg

#endif // DPG_METRIC_HPP
