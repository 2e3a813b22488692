#include "netprobe/coupling_estimator.hpp"

#include <algorithm>
#include <cmath>

#include "netprobe/error.hpp"
#include "netprobe/generators.hpp"
#include "netprobe/parallel.hpp"
#include "netprobe/spectral.hpp"

namespace netprobe {

CouplingCandidates candidate_couplings(std::span<const double> frequencies, double omega0, int n,
                                       double tol) {
    if (n < 2) throw InvalidArgument("coupling estimation needs N >= 2");
    if (static_cast<int>(frequencies.size()) != n)
        throw InvalidArgument("expected " + std::to_string(n) + " eigenfrequencies, got " +
                              std::to_string(frequencies.size()));
    if (!(omega0 > 0.0)) throw InvalidArgument("omega0 must be positive");

    // shifted_i = g * lambda_i
    double t1 = 0.0, t2 = 0.0, top = 0.0;
    for (double w : frequencies) {
        const double shifted = std::max(0.0, w * w - omega0 * omega0);
        t1 += shifted;
        t2 += shifted * shifted;
        top = std::max(top, shifted);
    }
    if (!(t1 > 0.0)) throw InconsistentSpectrum("all eigenfrequencies equal omega0");

    CouplingCandidates out;
    const long long nn = n;
    for (long long d = 2 * (nn - 1); d <= nn * (nn - 1); d += 2) {
        const double g = t1 / static_cast<double>(d);
        // sum lambda^2 - sum lambda with lambda = shifted / g
        const double s = t2 / (g * g) - static_cast<double>(d);
        const double even = 2.0 * std::round(s / 2.0);
        if (std::abs(s - even) > tol) continue;
        const auto sq = static_cast<long long>(even);
        if (nn * sq - d * d < 0) continue;
        if (top / g > static_cast<double>(n) + tol) continue;
        out.candidates.push_back(g);
    }
    if (out.candidates.empty())
        throw InconsistentSpectrum("no coupling constant is consistent with the eigenfrequencies");
    out.estimate = out.candidates.front();
    out.conclusive = out.candidates.size() == 1;
    return out;
}

CouplingTrialOutcome run_coupling_trial(const Graph& g, const CouplingTrialParams& params) {
    const Spectrum spectrum = laplace_spectrum(build_laplacian(g));
    const std::vector<double> freqs = spectrum_to_frequencies(spectrum, params.omega0, params.coupling);
    CouplingTrialOutcome outcome;
    try {
        const CouplingCandidates c = candidate_couplings(freqs, params.omega0, g.node_count(), params.tol);
        outcome.candidate_count = c.candidates.size();
        outcome.conclusive = c.conclusive;
        outcome.success =
            std::abs(c.estimate - params.coupling) <= params.match_tolerance * params.coupling;
    } catch (const InconsistentSpectrum&) {
        outcome.failed = true;
    }
    return outcome;
}

CouplingStats coupling_experiment(const GraphSampler& sampler, int trials, std::uint64_t seed,
                                  const CouplingTrialParams& params, int threads) {
    if (trials < 1) throw InvalidArgument("coupling experiment needs at least one trial");
    std::vector<CouplingTrialOutcome> outcomes(static_cast<std::size_t>(trials));
    parallel_for(outcomes.size(), threads, [&](std::size_t t) {
        Rng rng = make_rng(seed, {t});
        outcomes[t] = run_coupling_trial(sampler(rng), params);
    });
    CouplingStats stats;
    stats.trials = trials;
    for (const auto& o : outcomes) {
        stats.successes += o.success;
        stats.conclusive += o.conclusive;
        stats.failures += o.failed;
    }
    return stats;
}

CouplingStats coupling_experiment(int n, double p, int trials, std::uint64_t seed,
                                  const CouplingTrialParams& params, int threads) {
    return coupling_experiment([n, p](Rng& rng) { return generate_er_gnp(n, p, rng); }, trials, seed,
                               params, threads);
}

}  // namespace netprobe
