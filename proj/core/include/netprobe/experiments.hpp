#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netprobe/coupling_estimator.hpp"
#include "netprobe/degree_estimator.hpp"
#include "netprobe/graph.hpp"
#include "netprobe/oscillator.hpp"
#include "netprobe/rng.hpp"

namespace netprobe {

enum class ExperimentKind { Degree, Probe, Coupling, Robustness };

enum class GraphFamily { ErGnl, ErGnp, Ba, Ws, Tree, Regular, Complete, Path, Cycle, Circulant };

std::string_view to_string(ExperimentKind kind);
std::string_view to_string(GraphFamily family);
std::optional<GraphFamily> parse_family(std::string_view name);

struct FamilyParams {
    GraphFamily family = GraphFamily::ErGnl;
    int n = 30;
    int links = 87;       // er-gnl
    double p = 0.2;       // er-gnp
    int k_attach = 2;     // ba
    int ws_k = 2;         // ws, circulant
    double ws_p = 0.2;    // ws
    int degree = 4;       // regular
};

Graph sample_graph(const FamilyParams& params, Rng& rng);

struct PhysicalParams {
    double omega0 = 0.2;
    double g = 0.1;
    double temperature = 0.3;
    double probe_k = 0.0025;
    int probe_node = 0;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Degree;
    FamilyParams graph;
    PhysicalParams physics;
    int realizations = 100;
    std::uint64_t seed = 1;
    double epsilon = 0.0;
    int threads = 1;
    std::string out;

    // degree estimation
    std::size_t solution_cap = kDefaultSolutionCap;
    // Unset: 0.25 for exact spectra (degree), 1.0 (nearest even integer)
    // for probed or noisy spectra.
    std::optional<double> residue_tol;
    double bound_tol = 0.25;

    // coupling estimation: one row per p (er-gnp), or one row otherwise
    std::vector<double> p_grid;
    double coupling_tol = 1e-6;

    // probing; zero means "derive from the network"
    double sweep_f_min = 0.0;
    double sweep_f_max = 0.0;
    int sweep_points = 2000;
    double t_interact = 2000.0;
    int time_samples = 200;
    double threshold_factor = 5.0;

    double effective_residue_tol() const;
    ConstraintTolerance constraint_tolerance() const;

    // Throws InvalidArgument naming the offending field.
    void validate() const;
};

// Full configuration as pretty-printed JSON (sidecar file content).
std::string config_json(const ExperimentConfig& cfg);

// Per-realization seed; depends only on (master, index).
inline std::uint64_t realization_seed(std::uint64_t master, std::size_t index) {
    return derive_seed(master, {static_cast<std::uint64_t>(index)});
}

// ---- degree ---------------------------------------------------------------

struct MeritSummary {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct DegreeRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    int n = 0;
    std::size_t edges = 0;
    std::size_t solution_count = 0;
    std::optional<Merit> estimate_merit;
    MeritSummary solution_merit;
    bool truth_found = false;  // true sequence is among the solutions
    bool truncated = false;
    bool fallback = false;
    std::string error;  // empty on success
};

// f histogram over [0, 1] in 0.01-wide bins; values >= 1 land in the last bin.
struct MeritHistogram {
    static constexpr int kBins = 100;
    static constexpr double kWidth = 0.01;
    std::vector<double> all_solutions = std::vector<double>(kBins, 0.0);  // mean per-realization fraction
    std::vector<double> estimates = std::vector<double>(kBins, 0.0);      // fraction of realizations
    static int bin(double f);
};

struct DegreeReport {
    std::vector<DegreeRecord> records;
    MeritHistogram histogram;
    std::size_t failures() const;
};

// One realization: graph -> spectrum -> constraints -> solutions -> estimate.
DegreeRecord degree_realization(const Graph& g, const ExperimentConfig& cfg,
                                std::vector<double>* solution_merits = nullptr);
DegreeReport run_degree_experiment(const ExperimentConfig& cfg);
std::string degree_csv(const DegreeReport& report, GraphFamily family);
std::string histogram_csv(const MeritHistogram& h);

// ---- probe ----------------------------------------------------------------

struct ProbeRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    int n = 0;
    std::size_t edges = 0;
    std::size_t peaks_found = 0;
    bool resolved = false;
    double max_peak_error_steps = 0.0;  // worst |detected - exact| / grid step
    long long probed_d = 0, probed_s = 0;
    long long exact_d = 0, exact_s = 0;
    std::size_t solution_count = 0;
    std::optional<Merit> estimate_merit;
    bool fallback = false;
    std::string error;
};

struct ResonanceTraces {
    double omega_resonant = 0.0;
    double omega_detuned = 0.0;
    std::vector<double> times;
    std::vector<double> resonant;
    std::vector<double> detuned;
};

// Probe tuned to the eigenfrequency picked by resonance_mode() vs the same
// frequency raised by `detuning` (relative).
ResonanceTraces resonance_traces(const OscillatorNetwork& net, int node, double k,
                                 std::span<const double> times, double detuning = 0.01);

struct ProbeReport {
    std::vector<ProbeRecord> records;
    SweepResult first_sweep;          // realization 0
    ResonanceTraces first_traces;     // realization 0
    std::size_t failures() const;
};

SweepOptions sweep_options(const OscillatorNetwork& net, const ExperimentConfig& cfg);
ProbeReport run_probe_experiment(const ExperimentConfig& cfg);
std::string probe_csv(const ProbeReport& report);
std::string sweep_csv(const SweepResult& sweep);
std::string peaks_text(const SweepResult& sweep);
std::string traces_csv(const ResonanceTraces& traces);

// ---- coupling -------------------------------------------------------------

struct CouplingRow {
    std::optional<double> p;
    std::uint64_t seed = 0;
    CouplingStats stats;
};

struct CouplingReport {
    std::vector<CouplingRow> rows;
    std::size_t failures() const;
};

CouplingReport run_coupling_experiment(const ExperimentConfig& cfg);
std::string coupling_csv(const CouplingReport& report);

// ---- robustness -----------------------------------------------------------

struct RobustnessRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    int n = 0;
    long long true_d = 0, probed_d = 0;
    long long true_s = 0, probed_s = 0;
    std::size_t solution_count = 0;
    std::optional<Merit> estimate_merit;
    bool truth_found = false;
    bool fallback = false;
    bool truncated = false;
    std::string error;
};

struct RobustnessReport {
    std::vector<RobustnessRecord> records;
    std::size_t failures() const;
    double degree_match_fraction() const;
};

// Exact eigenfrequencies, each scaled by (1 + U[-eps, eps]); omega0 is
// taken as the smallest noisy frequency.
RobustnessReport run_robustness_experiment(const ExperimentConfig& cfg);
std::string robustness_csv(const RobustnessReport& report, GraphFamily family);

}  // namespace netprobe
