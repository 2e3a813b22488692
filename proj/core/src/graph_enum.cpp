#include "netprobe/graph_enum.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_set>

#include "netprobe/error.hpp"

namespace netprobe {
namespace {

constexpr int kMaxNodes = 8;

// Adjacency rows as bitmasks.
using Rows = std::array<std::uint32_t, kMaxNodes>;

int pair_bit(int i, int j) {  // i < j
    return j * (j - 1) / 2 + i;
}

std::uint32_t encode(const Rows& rows, int n, const std::vector<int>& order) {
    // order[p] = vertex placed at position p
    std::uint32_t code = 0;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a)
            if (rows[order[a]] >> order[b] & 1U) code |= 1U << pair_bit(a, b);
    return code;
}

// Minimum code over all relabelings that keep vertices grouped by an
// isomorphism-invariant colour (degree, then multiset of neighbour degrees).
// The colour classes are iso-invariant, so the minimum is a canonical form.
std::uint32_t canonical_code(const Rows& rows, int n) {
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = std::popcount(rows[v]);
    std::vector<std::uint64_t> colour(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nd;
        for (int w = 0; w < n; ++w)
            if (rows[v] >> w & 1U) nd.push_back(deg[w]);
        std::sort(nd.begin(), nd.end());
        std::uint64_t c = static_cast<std::uint64_t>(deg[v]);
        for (int d : nd) c = c * 16 + static_cast<std::uint64_t>(d);
        colour[v] = c;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });

    // Class boundaries in the sorted order.
    std::vector<std::pair<int, int>> classes;
    for (int s = 0; s < n;) {
        int e = s;
        while (e < n && colour[order[e]] == colour[order[s]]) ++e;
        classes.emplace_back(s, e);
        s = e;
    }
    for (auto [s, e] : classes) std::sort(order.begin() + s, order.begin() + e);

    std::uint32_t best = UINT32_MAX;
    // Odometer over permutations of each class.
    while (true) {
        best = std::min(best, encode(rows, n, order));
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            auto [s, e] = classes[c];
            if (std::next_permutation(order.begin() + s, order.begin() + e)) break;
        }
        if (c == classes.size()) break;
    }
    return best;
}

Rows decode(std::uint32_t code, int n) {
    Rows rows{};
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a)
            if (code >> pair_bit(a, b) & 1U) {
                rows[a] |= 1U << b;
                rows[b] |= 1U << a;
            }
    return rows;
}

}  // namespace

std::vector<Graph> connected_graph_classes(int n) {
    if (n < 1 || n > kMaxNodes)
        throw InvalidArgument("graph class enumeration supports 1 <= N <= 8");

    // All graphs (connected or not) up to isomorphism, grown one vertex at a
    // time: every graph on m+1 nodes is some graph on m nodes plus a vertex.
    std::vector<std::uint32_t> level{0};
    for (int m = 1; m < n; ++m) {
        std::unordered_set<std::uint32_t> next;
        for (std::uint32_t code : level) {
            Rows base = decode(code, m);
            for (std::uint32_t nbrs = 0; nbrs < (1U << m); ++nbrs) {
                Rows rows = base;
                rows[m] = nbrs;
                for (int v = 0; v < m; ++v)
                    if (nbrs >> v & 1U) rows[v] |= 1U << m;
                next.insert(canonical_code(rows, m + 1));
            }
        }
        level.assign(next.begin(), next.end());
        std::sort(level.begin(), level.end());
    }

    std::vector<Graph> out;
    for (std::uint32_t code : level) {
        std::vector<Edge> edges;
        for (int b = 1; b < n; ++b)
            for (int a = 0; a < b; ++a)
                if (code >> pair_bit(a, b) & 1U) edges.push_back({a, b});
        if (is_connected(n, edges)) out.push_back(Graph::create(n, std::move(edges)));
    }
    return out;
}

}  // namespace netprobe
