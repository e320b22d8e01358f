#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tptri {

/// Plain simple graph on dense 0-based vertex ids. Adjacency is kept both as
/// sorted lists and as a matrix; values are immutable after construction.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, {});
        g.mat_.assign(static_cast<size_t>(n) * n, 0);
        for (auto [u, v] : edges) g.add_edge_internal(u, v);
        for (auto& row : g.adj_) std::sort(row.begin(), row.end());
        return g;
    }

    int num_vertices() const { return n_; }

    int num_edges() const {
        int total = 0;
        for (const auto& row : adj_) total += static_cast<int>(row.size());
        return total / 2;
    }

    bool adjacent(int u, int v) const { return mat_[static_cast<size_t>(u) * n_ + v] != 0; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    const std::vector<int>& neighbours(int v) const { return adj_[v]; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    Graph complement() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adjacent(u, v)) es.emplace_back(u, v);
        return from_edges(n_, es);
    }

    /// Subgraph induced on `keep` (ascending ids); vertex i of the result is keep[i].
    Graph induced(const std::vector<int>& keep) const {
        std::vector<int> pos(n_, -1);
        for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> es;
        for (int u : keep)
            for (int v : adj_[u])
                if (u < v && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
        return from_edges(static_cast<int>(keep.size()), es);
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == n_;
    }

private:
    void add_edge_internal(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex id out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        if (adjacent(u, v)) throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        mat_[static_cast<size_t>(u) * n_ + v] = 1;
        mat_[static_cast<size_t>(v) * n_ + u] = 1;
    }

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<uint8_t> mat_;
};

}  // namespace tptri
