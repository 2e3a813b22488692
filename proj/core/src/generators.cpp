#include "netprobe/generators.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "netprobe/error.hpp"

namespace netprobe {
namespace {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    return pairs;
}

// Calls `draw` until it yields a connected edge set.
template <typename Draw>
Graph sample_connected(int n, const char* model, Draw&& draw) {
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        std::vector<Edge> edges = draw();
        if (is_connected(n, edges)) return Graph::create(n, std::move(edges));
    }
    throw RejectionLimit(std::string(model) + ": no connected sample after " +
                         std::to_string(kMaxResamples) + " attempts");
}

}  // namespace

Graph generate_er_gnl(int n, int links, Rng& rng) {
    const long long max_links = static_cast<long long>(n) * (n - 1) / 2;
    if (n < 2 || links < n - 1 || links > max_links)
        throw InvalidArgument("G(N,L) needs N >= 2 and N-1 <= L <= N(N-1)/2, got N=" +
                              std::to_string(n) + " L=" + std::to_string(links));
    const std::vector<Edge> pairs = all_pairs(n);
    return sample_connected(n, "G(N,L)", [&] {
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(links));
        std::sample(pairs.begin(), pairs.end(), std::back_inserter(edges), links, rng);
        return edges;
    });
}

Graph generate_er_gnp(int n, double p, Rng& rng) {
    if (n < 1) throw InvalidArgument("G(N,p) needs N >= 1");
    if (!(p > 0.0 && p <= 1.0) && n > 1)
        throw InvalidArgument("G(N,p) needs 0 < p <= 1, got p=" + std::to_string(p));
    const std::vector<Edge> pairs = all_pairs(n);
    std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
    return sample_connected(n, "G(N,p)", [&] {
        std::vector<Edge> edges;
        for (const Edge& e : pairs)
            if (coin(rng)) edges.push_back(e);
        return edges;
    });
}

Graph generate_ba(int n, int k, Rng& rng) {
    if (n < 3) throw InvalidArgument("BA graph needs N >= 3");
    if (k < 1 || k > 3) throw InvalidArgument("BA attachment count must be in [1, 3]");

    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    // Each node appears once per incident edge, so a uniform draw from this
    // list is a degree-proportional draw.
    std::vector<int> endpoints{0, 1, 1, 2, 0, 2};
    std::vector<int> targets;
    for (int v = 3; v < n; ++v) {
        targets.clear();
        std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
        while (static_cast<int>(targets.size()) < k) {
            int t = endpoints[pick(rng)];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (int t : targets) {
            edges.push_back({t, v});
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return Graph::create(n, std::move(edges));
}

Graph generate_ws(int n, int k, double p, Rng& rng) {
    if (k < 1 || n <= 2 * k)
        throw InvalidArgument("WS graph needs N > 2k >= 2, got N=" + std::to_string(n) +
                              " k=" + std::to_string(k));
    if (p < 0.0 || p > 1.0) throw InvalidArgument("WS rewiring probability must be in [0, 1]");

    std::bernoulli_distribution rewire(p);
    std::uniform_int_distribution<int> node(0, n - 1);
    return sample_connected(n, "WS", [&] {
        std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 1; j <= k; ++j) {
                int w = (i + j) % n;
                adj[i].insert(w);
                adj[w].insert(i);
            }
        for (int j = 1; j <= k; ++j) {
            for (int i = 0; i < n; ++i) {
                int far = (i + j) % n;
                if (!adj[i].contains(far) || !rewire(rng)) continue;
                if (static_cast<int>(adj[i].size()) >= n - 1) continue;  // saturated
                int w;
                do {
                    w = node(rng);
                } while (w == i || adj[i].contains(w));
                adj[i].erase(far);
                adj[far].erase(i);
                adj[i].insert(w);
                adj[w].insert(i);
            }
        }
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int w : adj[i])
                if (i < w) edges.push_back({i, w});
        return edges;
    });
}

Graph prufer_decode(int n, std::span<const int> sequence) {
    if (n < 2) throw InvalidArgument("a tree needs at least two nodes");
    if (static_cast<int>(sequence.size()) != n - 2)
        throw InvalidArgument("Pruefer sequence must have length N-2");
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : sequence) {
        if (s < 0 || s >= n) throw InvalidArgument("Pruefer entry out of range");
        ++degree[s];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int i = 0; i < n; ++i)
        if (degree[i] == 1) leaves.push(i);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int s : sequence) {
        int leaf = leaves.top();
        leaves.pop();
        edges.push_back({leaf, s});
        if (--degree[s] == 1) leaves.push(s);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.push_back({a, b});
    return Graph::create(n, std::move(edges));
}

Graph generate_tree(int n, Rng& rng) {
    if (n < 2) throw InvalidArgument("a tree needs at least two nodes");
    std::uniform_int_distribution<int> label(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& s : seq) s = label(rng);
    return prufer_decode(n, seq);
}

Graph generate_regular(int n, int degree, Rng& rng) {
    if (degree < 1 || degree >= n || (static_cast<long long>(n) * degree) % 2 != 0)
        throw InvalidArgument("no simple " + std::to_string(degree) + "-regular graph on " +
                              std::to_string(n) + " nodes");
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * degree);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < degree; ++j) stubs.push_back(i);

    return sample_connected(n, "random regular", [&] {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = std::min(stubs[i], stubs[i + 1]);
            int b = std::max(stubs[i], stubs[i + 1]);
            if (a == b) return std::vector<Edge>{};
            edges.push_back({a, b});
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return std::vector<Edge>{};
        return edges;
    });
}

Graph make_path(int n) {
    if (n < 1) throw InvalidArgument("path needs N >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::create(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw InvalidArgument("cycle needs N >= 3");
    return make_circulant(n, 1);
}

Graph make_complete(int n) {
    if (n < 1) throw InvalidArgument("complete graph needs N >= 1");
    return Graph::create(n, all_pairs(n));
}

Graph make_star(int n) {
    if (n < 2) throw InvalidArgument("star needs N >= 2");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    return Graph::create(n, std::move(edges));
}

Graph make_circulant(int n, int k) {
    if (k < 1 || n <= 2 * k)
        throw InvalidArgument("circulant graph needs N > 2k >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= k; ++j) edges.push_back({i, (i + j) % n});
    return Graph::create(n, std::move(edges));
}

}  // namespace netprobe
