#ifndef DPG_GRAPH_HPP
#define DPG_GRAPH_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "dpg/errors.hpp"

namespace dpg {

// Simple undirected graph on nodes 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() : n_(0) {}

    Graph(int node_count, std::vector<std::pair<int, int>> edge_list) : n_(node_count) {
        if (node_count < 0) throw ValidationError("negative node count");
        std::set<std::pair<int, int>> seen;
        for (auto [a, b] : edge_list) {
            if (a < 0 || a >= n_ || b < 0 || b >= n_)
                throw IndexOutOfRange("edge endpoint out of range");
            if (a == b) throw ValidationError("self-loop on node " + std::to_string(a));
            if (a > b) std::swap(a, b);
            if (!seen.insert({a, b}).second)
                throw ValidationError("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        edges_.assign(seen.begin(), seen.end());
        adj_.resize(n_);
        for (auto [a, b] : edges_) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Normalized (min,max) pairs, sorted. Each edge appears exactly once.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Each neighbor exactly once, ascending.
    const std::vector<int>& neighbors(int i) const {
        check_node(i);
        return adj_[i];
    }

    int degree(int i) const {
        check_node(i);
        return static_cast<int>(adj_[i].size());
    }

    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
    }

    void check_node(int i) const {
        if (i < 0 || i >= n_) throw IndexOutOfRange("node index " + std::to_string(i) + " out of range");
    }

    static Graph clique(int n) {
        std::vector<std::pair<int, int>> e;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) e.push_back({a, b});
        return Graph(n, std::move(e));
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

} // namespace dpg

#endif // DPG_GRAPH_HPP
