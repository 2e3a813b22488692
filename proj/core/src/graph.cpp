#include "netprobe/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "netprobe/error.hpp"

namespace netprobe {

long long DegreeSequence::sum() const noexcept {
    return std::accumulate(values.begin(), values.end(), 0LL);
}

long long DegreeSequence::sum_of_squares() const noexcept {
    long long s = 0;
    for (int d : values) s += static_cast<long long>(d) * d;
    return s;
}

DegreeSequence DegreeSequence::sorted_descending() const {
    DegreeSequence out = *this;
    std::sort(out.values.begin(), out.values.end(), std::greater<>{});
    return out;
}

bool is_connected(int n, std::span<const Edge> edges) {
    if (n <= 0) return false;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int components = n;
    for (const Edge& e : edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

Graph Graph::create(int n, std::vector<Edge> edges) {
    if (n < 1) throw InvalidArgument("graph needs at least one node");
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") references a node outside 0.." + std::to_string(n - 1));
        if (e.u == e.v) throw InvalidArgument("self-loop at node " + std::to_string(e.u));
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw InvalidArgument("duplicate edge (" + std::to_string(dup->u) + ", " +
                              std::to_string(dup->v) + ")");
    if (!is_connected(n, edges)) throw InvalidArgument("graph is not connected");
    return Graph{n, std::move(edges)};
}

bool Graph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

DegreeSequence Graph::degree_sequence() const {
    DegreeSequence d;
    d.values.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        ++d.values[e.u];
        ++d.values[e.v];
    }
    return d;
}

DegreeSequence degree_sequence(const Graph& g) { return g.degree_sequence(); }

LaplaceMatrix::LaplaceMatrix(const Graph& g)
    : m_(Eigen::MatrixXd::Zero(g.node_count(), g.node_count())) {
    for (const Edge& e : g.edges()) {
        m_(e.u, e.v) = -1.0;
        m_(e.v, e.u) = -1.0;
        m_(e.u, e.u) += 1.0;
        m_(e.v, e.v) += 1.0;
    }
}

}  // namespace netprobe
