#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "netprobe/graph.hpp"
#include "netprobe/rng.hpp"

namespace netprobe {

// Possible values of an unknown uniform coupling constant, largest first.
struct CouplingCandidates {
    std::vector<double> candidates;
    double estimate = 0.0;    // largest candidate
    bool conclusive = false;  // exactly one candidate survived
};

// For every even total degree D' in [2(N-1), N(N-1)] the trial coupling is
// g' = sum(Omega_i^2 - omega0^2) / D'. It survives when
//   S' = sum(lambda'_i^2) - D' is within `tol` of an even integer,
//   N S' - D'^2 >= 0                 (Cauchy-Schwarz; equality iff regular),
//   lambda'_max <= N + tol.
// Throws InconsistentSpectrum when nothing survives.
CouplingCandidates candidate_couplings(std::span<const double> frequencies, double omega0, int n,
                                       double tol = 1e-6);

struct CouplingTrialParams {
    double coupling = 0.1;  // true g
    double omega0 = 0.2;
    double tol = 1e-6;
    double match_tolerance = 1e-6;  // relative, estimate vs true g
};

struct CouplingTrialOutcome {
    bool success = false;     // estimate matches the true g
    bool conclusive = false;
    bool failed = false;      // no candidate survived
    std::size_t candidate_count = 0;
};

// Exact eigenfrequencies of `g` -> candidate_couplings -> comparison.
CouplingTrialOutcome run_coupling_trial(const Graph& g, const CouplingTrialParams& params);

struct CouplingStats {
    int trials = 0;
    int successes = 0;
    int conclusive = 0;
    int failures = 0;

    double success_fraction() const noexcept { return trials ? double(successes) / trials : 0.0; }
    double conclusive_fraction() const noexcept { return trials ? double(conclusive) / trials : 0.0; }
};

using GraphSampler = std::function<Graph(Rng&)>;

// Trial t draws its graph from make_rng(seed, {t}); statistics are
// independent of `threads`.
CouplingStats coupling_experiment(const GraphSampler& sampler, int trials, std::uint64_t seed,
                                  const CouplingTrialParams& params = {}, int threads = 1);

// G(N, p) convenience overload.
CouplingStats coupling_experiment(int n, double p, int trials, std::uint64_t seed,
                                  const CouplingTrialParams& params = {}, int threads = 1);

}  // namespace netprobe
