#include <cmath>

#include <gtest/gtest.h>

#include "netprobe/coupling_estimator.hpp"
#include "netprobe/error.hpp"
#include "netprobe/generators.hpp"
#include "netprobe/spectral.hpp"

using namespace netprobe;

namespace {

std::vector<double> frequencies(const Graph& g, double omega0, double coupling) {
    return spectrum_to_frequencies(laplace_spectrum(LaplaceMatrix(g)), omega0, coupling);
}

}  // namespace

TEST(Candidates, Triangle) {
    const auto f = frequencies(make_complete(3), 0.2, 0.5);
    const CouplingCandidates c = candidate_couplings(f, 0.2, 3);
    EXPECT_NEAR(c.estimate, 0.5, 1e-12);
    // D' = 6 is the largest admissible total degree, so g' = T1 / 6 is the only
    // candidate of a complete graph.
    EXPECT_TRUE(c.conclusive);
    ASSERT_EQ(c.candidates.size(), 1u);
}

TEST(Candidates, TrueCouplingAlwaysPresent) {
    Rng rng{31};
    for (int rep = 0; rep < 30; ++rep) {
        const Graph g = generate_er_gnp(20, 0.3, rng);
        const CouplingCandidates c = candidate_couplings(frequencies(g, 0.2, 0.1), 0.2, 20);
        EXPECT_TRUE(std::is_sorted(c.candidates.begin(), c.candidates.end(), std::greater<>{}));
        EXPECT_TRUE(std::any_of(c.candidates.begin(), c.candidates.end(),
                                [](double x) { return std::abs(x - 0.1) < 1e-9; }));
        EXPECT_EQ(c.conclusive, c.candidates.size() == 1);
        EXPECT_EQ(c.estimate, c.candidates.front());
    }
}

TEST(Candidates, TreesAreExact) {
    Rng rng{32};
    for (int rep = 0; rep < 50; ++rep) {
        const CouplingCandidates c = candidate_couplings(frequencies(generate_tree(30, rng), 0.2, 0.1), 0.2, 30);
        EXPECT_NEAR(c.estimate, 0.1, 1e-9);
    }
}

TEST(Candidates, RegularAreExact) {
    Rng rng{33};
    for (int rep = 0; rep < 50; ++rep) {
        const CouplingCandidates c =
            candidate_couplings(frequencies(generate_regular(30, 4, rng), 0.2, 0.1), 0.2, 30);
        EXPECT_NEAR(c.estimate, 0.1, 1e-9);
    }
}

TEST(Candidates, GarbageRejected) {
    const std::vector<double> f{0.2, 0.3001, 0.4123};
    EXPECT_THROW(candidate_couplings(f, 0.2, 3), InconsistentSpectrum);
    EXPECT_THROW(candidate_couplings(f, 0.2, 1), InvalidArgument);
}

TEST(Trial, CompleteGraphSucceeds) {
    const CouplingTrialOutcome out = run_coupling_trial(make_complete(8), CouplingTrialParams{});
    EXPECT_TRUE(out.success);
    EXPECT_TRUE(out.conclusive);
    EXPECT_FALSE(out.failed);
}

TEST(Experiment, DenseLimit) {
    const CouplingStats s = coupling_experiment(12, 1.0, 20, 7);
    EXPECT_EQ(s.trials, 20);
    EXPECT_EQ(s.success_fraction(), 1.0);
}

TEST(Experiment, IndependentOfThreads) {
    const CouplingStats a = coupling_experiment(15, 0.3, 60, 9, {}, 1);
    const CouplingStats b = coupling_experiment(15, 0.3, 60, 9, {}, 4);
    EXPECT_EQ(a.successes, b.successes);
    EXPECT_EQ(a.conclusive, b.conclusive);
    EXPECT_EQ(a.failures, b.failures);
}
