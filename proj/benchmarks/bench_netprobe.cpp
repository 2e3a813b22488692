#include <benchmark/benchmark.h>

#include "netprobe/coupling_estimator.hpp"
#include "netprobe/degree_estimator.hpp"
#include "netprobe/generators.hpp"
#include "netprobe/graph_enum.hpp"
#include "netprobe/oscillator.hpp"
#include "netprobe/spectral.hpp"

using namespace netprobe;

namespace {

Graph er_graph(int n, int links, std::uint64_t seed) {
    Rng rng{seed};
    return generate_er_gnl(n, links, rng);
}

}  // namespace

static void BM_LaplaceSpectrum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LaplaceMatrix l(er_graph(n, 3 * n, 1));
    for (auto _ : state) benchmark::DoNotOptimize(laplace_spectrum(l));
}
BENCHMARK(BM_LaplaceSpectrum)->Arg(10)->Arg(30)->Arg(100);

static void BM_BuildConstraints(benchmark::State& state) {
    const Spectrum s = laplace_spectrum(LaplaceMatrix(er_graph(30, 87, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(build_constraints(s));
}
BENCHMARK(BM_BuildConstraints);

// Enumeration cost varies strongly between graphs; a few fixed seeds.
static void BM_EnumerateEr30(benchmark::State& state) {
    const ConstraintSet c =
        build_constraints(laplace_spectrum(LaplaceMatrix(er_graph(30, 87, static_cast<std::uint64_t>(state.range(0))))));
    std::size_t count = 0;
    for (auto _ : state) {
        const SolutionSet set = enumerate_solutions(c);
        count = set.size();
        benchmark::DoNotOptimize(set.solutions.data());
    }
    state.counters["solutions"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateEr30)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_EnumerateWithoutPartialSums(benchmark::State& state) {
    const ConstraintSet c = build_constraints(laplace_spectrum(LaplaceMatrix(er_graph(30, 87, 1)))).without_partial_sums();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_solutions(c).size());
}
BENCHMARK(BM_EnumerateWithoutPartialSums)->Unit(benchmark::kMicrosecond);

static void BM_BruteForceN8(benchmark::State& state) {
    const ConstraintSet c = build_constraints(laplace_spectrum(LaplaceMatrix(er_graph(8, 12, 3))));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_solutions(c).size());
}
BENCHMARK(BM_BruteForceN8)->Unit(benchmark::kMicrosecond);

static void BM_CandidateCouplings(benchmark::State& state) {
    Rng rng{4};
    const Graph g = generate_er_gnp(30, 0.3, rng);
    const auto f = spectrum_to_frequencies(laplace_spectrum(LaplaceMatrix(g)), 0.2, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(candidate_couplings(f, 0.2, 30));
}
BENCHMARK(BM_CandidateCouplings)->Unit(benchmark::kMicrosecond);

// One grid point of a frequency sweep: set up the dynamics and take the
// maximum over the default 200 time samples.
static void BM_SweepPoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const OscillatorNetwork net = OscillatorNetwork::from_graph(er_graph(n, 2 * n, 5), 0.2, 0.1, 0.3);
    const auto times = interaction_times(2000.0, 200);
    for (auto _ : state) {
        const ProbeDynamics dyn(net, ProbeSetup{0.45, 0.0025, 0});
        benchmark::DoNotOptimize(dyn.max_mean_excitation(times));
    }
}
BENCHMARK(BM_SweepPoint)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_StateAt(benchmark::State& state) {
    const OscillatorNetwork net = OscillatorNetwork::from_graph(er_graph(40, 80, 6), 0.2, 0.1, 0.3);
    const ProbeDynamics dyn(net, ProbeSetup{0.45, 0.0025, 0});
    for (auto _ : state) benchmark::DoNotOptimize(dyn.state_at(1234.5));
}
BENCHMARK(BM_StateAt)->Unit(benchmark::kMicrosecond);

static void BM_GraphClasses(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(connected_graph_classes(n).size());
}
BENCHMARK(BM_GraphClasses)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
