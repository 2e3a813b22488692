#pragma once

#include <span>
#include <string_view>

#include "netprobe/graph.hpp"
#include "netprobe/rng.hpp"

namespace netprobe {

// Resample budget shared by every connectivity-conditioned generator.
inline constexpr int kMaxResamples = 10000;

// Random generators. All outputs are conditioned on connectivity by
// resampling the whole graph; RejectionLimit is thrown after kMaxResamples.

// G(N, L): uniform over graphs with exactly `links` edges.
Graph generate_er_gnl(int n, int links, Rng& rng);

// G(N, p): each pair linked independently with probability p.
Graph generate_er_gnp(int n, double p, Rng& rng);

// Preferential attachment grown from a 3-cycle; every new node brings
// `k` edges to distinct existing nodes chosen proportionally to degree.
Graph generate_ba(int n, int k, Rng& rng);

// Small world: ring where each node links to its `k` nearest neighbours on
// each side, then every edge's far endpoint is rewired with probability p.
Graph generate_ws(int n, int k, double p, Rng& rng);

// Uniform labelled tree via a uniform Pruefer sequence.
Graph generate_tree(int n, Rng& rng);

// Uniform simple `degree`-regular graph (configuration model, rejection).
Graph generate_regular(int n, int degree, Rng& rng);

// Tree encoded by a Pruefer sequence of length n-2 over 0..n-1.
Graph prufer_decode(int n, std::span<const int> sequence);

// Deterministic families.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int n);  // center is node 0
// Node i linked to i±1..i±k (mod n).
Graph make_circulant(int n, int k);

}  // namespace netprobe
