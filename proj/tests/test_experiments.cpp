#include <numeric>

#include <gtest/gtest.h>

#include <json.hpp>

#include "netprobe/error.hpp"
#include "netprobe/experiments.hpp"

using namespace netprobe;

namespace {

ExperimentConfig small(ExperimentKind kind, GraphFamily family = GraphFamily::ErGnl) {
    ExperimentConfig cfg;
    cfg.kind = kind;
    cfg.graph.family = family;
    cfg.graph.n = 12;
    cfg.graph.links = 20;
    cfg.realizations = 12;
    cfg.seed = 5;
    return cfg;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Config, Defaults) {
    ExperimentConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_EQ(cfg.effective_residue_tol(), 0.25);
    cfg.kind = ExperimentKind::Robustness;
    EXPECT_EQ(cfg.effective_residue_tol(), 1.0);
    cfg.residue_tol = 0.4;
    EXPECT_EQ(cfg.constraint_tolerance().residue, 0.4);
}

TEST(Config, Validation) {
    auto rejects = [](auto mutate) {
        ExperimentConfig cfg;
        mutate(cfg);
        EXPECT_THROW(cfg.validate(), InvalidArgument);
    };
    rejects([](ExperimentConfig& c) { c.graph.n = 1; });
    rejects([](ExperimentConfig& c) { c.realizations = 0; });
    rejects([](ExperimentConfig& c) { c.threads = 0; });
    rejects([](ExperimentConfig& c) { c.epsilon = -0.1; });
    rejects([](ExperimentConfig& c) { c.physics.omega0 = 0.0; });
    rejects([](ExperimentConfig& c) { c.physics.g = -1.0; });
    rejects([](ExperimentConfig& c) { c.physics.probe_node = 30; });
    rejects([](ExperimentConfig& c) { c.graph.links = 500; });
    rejects([](ExperimentConfig& c) { c.graph.links = 10; });
    rejects([](ExperimentConfig& c) {
        c.graph.family = GraphFamily::ErGnp;
        c.graph.p = 0.0;
    });
    rejects([](ExperimentConfig& c) {
        c.graph.family = GraphFamily::Ba;
        c.graph.k_attach = 4;
    });
    rejects([](ExperimentConfig& c) {
        c.graph.family = GraphFamily::Regular;
        c.graph.n = 7;
        c.graph.degree = 3;
    });
    rejects([](ExperimentConfig& c) { c.p_grid = {0.5, 1.5}; });
    rejects([](ExperimentConfig& c) {
        c.sweep_f_min = 0.5;
        c.sweep_f_max = 0.4;
    });
}

TEST(Config, FamilyNames) {
    EXPECT_EQ(parse_family("er"), GraphFamily::ErGnl);
    EXPECT_EQ(parse_family("ws"), GraphFamily::Ws);
    EXPECT_EQ(parse_family("circulant"), GraphFamily::Circulant);
    EXPECT_FALSE(parse_family("lattice").has_value());
    for (GraphFamily f : {GraphFamily::ErGnp, GraphFamily::Ba, GraphFamily::Tree, GraphFamily::Regular})
        EXPECT_EQ(parse_family(to_string(f)), f);
}

TEST(Config, JsonSidecar) {
    ExperimentConfig cfg = small(ExperimentKind::Coupling, GraphFamily::ErGnp);
    cfg.p_grid = {0.1, 0.2};
    const auto j = nlohmann::json::parse(config_json(cfg));
    EXPECT_EQ(j["experiment"], "coupling");
    EXPECT_EQ(j["graph"]["family"], "er-gnp");
    EXPECT_EQ(j["graph"]["n"], 12);
    EXPECT_EQ(j["seed"], 5);
    EXPECT_EQ(j["p_grid"].size(), 2u);
    EXPECT_EQ(j["residue_tol"], 1.0);
}

TEST(Seeds, PerRealization) {
    EXPECT_EQ(realization_seed(1, 3), derive_seed(1, {3}));
    EXPECT_NE(realization_seed(1, 3), realization_seed(1, 4));
}

TEST(DegreeExperiment, RecordsAndHistogram) {
    const ExperimentConfig cfg = small(ExperimentKind::Degree);
    const DegreeReport rep = run_degree_experiment(cfg);
    ASSERT_EQ(rep.records.size(), 12u);
    EXPECT_EQ(rep.failures(), 0u);
    for (const DegreeRecord& r : rep.records) {
        EXPECT_TRUE(r.truth_found);
        EXPECT_EQ(r.edges, 20u);
        EXPECT_GE(r.solution_count, 1u);
    }
    const auto& h = rep.histogram;
    EXPECT_NEAR(std::accumulate(h.estimates.begin(), h.estimates.end(), 0.0), 1.0, 1e-12);
    EXPECT_NEAR(std::accumulate(h.all_solutions.begin(), h.all_solutions.end(), 0.0), 1.0, 1e-12);

    const std::string csv = degree_csv(rep, cfg.graph.family);
    EXPECT_EQ(first_line(csv),
              "index,seed,family,n,edges,solution_count,estimate_merit,estimate_perfect,mean_merit,"
              "min_merit,max_merit,truth_found,truncated,fallback,error");
    EXPECT_EQ(line_count(csv), 13u);
    EXPECT_EQ(line_count(histogram_csv(h)), 101u);
}

TEST(DegreeExperiment, HistogramBins) {
    EXPECT_EQ(MeritHistogram::bin(0.0), 0);
    EXPECT_EQ(MeritHistogram::bin(0.01), 1);
    EXPECT_EQ(MeritHistogram::bin(0.3), 30);
    EXPECT_EQ(MeritHistogram::bin(1.0), 99);
}

TEST(DegreeExperiment, UniqueFamilies) {
    for (GraphFamily f : {GraphFamily::Path, GraphFamily::Cycle, GraphFamily::Complete}) {
        ExperimentConfig cfg = small(ExperimentKind::Degree, f);
        cfg.realizations = 1;
        const DegreeReport rep = run_degree_experiment(cfg);
        EXPECT_EQ(rep.records[0].solution_count, 1u) << to_string(f);
        EXPECT_TRUE(rep.records[0].estimate_merit->perfect());
    }
}

TEST(ProbeExperiment, NoiselessSmallNetworks) {
    ExperimentConfig cfg = small(ExperimentKind::Probe, GraphFamily::Cycle);
    cfg.graph.n = 5;
    cfg.realizations = 1;
    // a cycle is degenerate: unresolved, reported as such
    ProbeReport rep = run_probe_experiment(cfg);
    EXPECT_FALSE(rep.records[0].resolved);
    EXPECT_EQ(rep.records[0].error, "unresolved");

    cfg.graph.family = GraphFamily::Path;
    cfg.graph.n = 4;
    rep = run_probe_experiment(cfg);
    const ProbeRecord& r = rep.records[0];
    ASSERT_TRUE(r.resolved) << r.error;
    EXPECT_LE(r.max_peak_error_steps, 1.0);
    EXPECT_EQ(r.probed_d, r.exact_d);
    EXPECT_EQ(r.probed_s, r.exact_s);
    EXPECT_EQ(first_line(sweep_csv(rep.first_sweep)), "omega_s,max_mean_excitation");
    EXPECT_EQ(line_count(peaks_text(rep.first_sweep)), 4u);
    EXPECT_EQ(first_line(traces_csv(rep.first_traces)).rfind("# omega_resonant=", 0), 0u);
}

TEST(CouplingExperiment, RowsPerP) {
    ExperimentConfig cfg = small(ExperimentKind::Coupling, GraphFamily::ErGnp);
    cfg.p_grid = {0.3, 0.6};
    cfg.realizations = 30;
    const CouplingReport rep = run_coupling_experiment(cfg);
    ASSERT_EQ(rep.rows.size(), 2u);
    EXPECT_EQ(rep.rows[0].p, 0.3);
    EXPECT_EQ(rep.rows[1].stats.trials, 30);
    EXPECT_EQ(first_line(coupling_csv(rep)), "p,trials,success_fraction,conclusive_fraction,seed");

    cfg.graph.family = GraphFamily::Tree;
    const CouplingReport trees = run_coupling_experiment(cfg);
    ASSERT_EQ(trees.rows.size(), 1u);
    EXPECT_FALSE(trees.rows[0].p.has_value());
    EXPECT_EQ(trees.rows[0].stats.success_fraction(), 1.0);
}

TEST(RobustnessExperiment, NoNoiseMatchesExactly) {
    ExperimentConfig cfg = small(ExperimentKind::Robustness);
    cfg.epsilon = 0.0;
    const RobustnessReport rep = run_robustness_experiment(cfg);
    EXPECT_EQ(rep.degree_match_fraction(), 1.0);
    for (const RobustnessRecord& r : rep.records) {
        EXPECT_EQ(r.probed_s, r.true_s);
        EXPECT_TRUE(r.truth_found);
    }
}

TEST(Determinism, ThreadCountDoesNotChangeOutput) {
    for (ExperimentKind kind : {ExperimentKind::Degree, ExperimentKind::Robustness}) {
        ExperimentConfig a = small(kind);
        a.epsilon = 0.01;
        ExperimentConfig b = a;
        b.threads = 4;
        if (kind == ExperimentKind::Degree) {
            EXPECT_EQ(degree_csv(run_degree_experiment(a), a.graph.family),
                      degree_csv(run_degree_experiment(b), b.graph.family));
            EXPECT_EQ(histogram_csv(run_degree_experiment(a).histogram),
                      histogram_csv(run_degree_experiment(b).histogram));
        } else {
            EXPECT_EQ(robustness_csv(run_robustness_experiment(a), a.graph.family),
                      robustness_csv(run_robustness_experiment(b), b.graph.family));
        }
    }
    ExperimentConfig c = small(ExperimentKind::Coupling, GraphFamily::ErGnp);
    c.p_grid = {0.2, 0.5};
    ExperimentConfig d = c;
    d.threads = 3;
    EXPECT_EQ(coupling_csv(run_coupling_experiment(c)), coupling_csv(run_coupling_experiment(d)));
}

TEST(Determinism, SeedChangesOutput) {
    ExperimentConfig a = small(ExperimentKind::Degree);
    ExperimentConfig b = a;
    b.seed = 6;
    EXPECT_NE(degree_csv(run_degree_experiment(a), a.graph.family),
              degree_csv(run_degree_experiment(b), b.graph.family));
}
