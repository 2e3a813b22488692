#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace netprobe {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Multiset of node degrees. Solutions and comparisons use the canonical
// descending order; generator output keeps node order.
struct DegreeSequence {
    std::vector<int> values;

    std::size_t size() const noexcept { return values.size(); }
    long long sum() const noexcept;
    long long sum_of_squares() const noexcept;
    DegreeSequence sorted_descending() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;
};

// Simple, connected, undirected graph on nodes 0..n-1. Every instance
// satisfies those invariants; construction through create() validates them.
class Graph {
public:
    static Graph create(int n, std::vector<Edge> edges);

    int node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool has_edge(int a, int b) const;
    DegreeSequence degree_sequence() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

    int n_ = 0;
    std::vector<Edge> edges_;  // sorted, u < v
};

// True when every node of 0..n-1 is reachable from node 0.
bool is_connected(int n, std::span<const Edge> edges);

DegreeSequence degree_sequence(const Graph& g);

// L_ii = d_i, L_ij = -1 for linked pairs, 0 otherwise.
class LaplaceMatrix {
public:
    explicit LaplaceMatrix(const Graph& g);

    const Eigen::MatrixXd& matrix() const noexcept { return m_; }
    int size() const noexcept { return static_cast<int>(m_.rows()); }

private:
    Eigen::MatrixXd m_;
};

inline LaplaceMatrix build_laplacian(const Graph& g) { return LaplaceMatrix{g}; }

}  // namespace netprobe
