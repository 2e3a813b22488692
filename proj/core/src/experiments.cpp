#include "netprobe/experiments.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "netprobe/error.hpp"
#include "netprobe/generators.hpp"
#include "netprobe/parallel.hpp"
#include "netprobe/spectral.hpp"

namespace netprobe {
namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string num(std::uint64_t x) { return std::to_string(x); }

std::string merit_cell(const std::optional<Merit>& m) { return m ? num(m->value()) : std::string{}; }

// Short, stable code for a failure; the CSV must not depend on message text.
std::string error_code(const std::exception& e) {
    if (dynamic_cast<const InconsistentSpectrum*>(&e)) return "inconsistent_spectrum";
    if (dynamic_cast<const RejectionLimit*>(&e)) return "rejection_limit";
    if (dynamic_cast<const UnstableCoupling*>(&e)) return "unstable_coupling";
    if (dynamic_cast<const InvalidArgument*>(&e)) return "invalid_argument";
    return "error";
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument("config: " + what);
}

struct Scored {
    std::size_t count = 0;
    std::optional<Merit> estimate;
    MeritSummary summary;
    bool truth_found = false;
};

// Scores every solution and the selected estimate against `truth`.
Scored score(const SolutionSet& set, const DegreeSequence& truth, std::vector<double>* merits) {
    Scored s;
    s.count = set.size();
    if (set.empty()) return s;
    s.estimate = select_estimate(set, truth).merit;
    double total = 0.0;
    s.summary.min = std::numeric_limits<double>::infinity();
    s.summary.max = 0.0;
    for (const DegreeSequence& d : set.solutions) {
        const double f = figure_of_merit(truth, d).value();
        total += f;
        s.summary.min = std::min(s.summary.min, f);
        s.summary.max = std::max(s.summary.max, f);
        if (merits) merits->push_back(f);
    }
    s.summary.mean = total / static_cast<double>(set.size());
    s.truth_found = std::binary_search(set.solutions.begin(), set.solutions.end(), truth, std::greater<>{});
    return s;
}

template <typename Record>
std::size_t count_failures(const std::vector<Record>& records) {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const Record& r) { return !r.error.empty(); }));
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Degree: return "degree";
        case ExperimentKind::Probe: return "probe";
        case ExperimentKind::Coupling: return "coupling";
        case ExperimentKind::Robustness: return "robustness";
    }
    return "unknown";
}

std::string_view to_string(GraphFamily family) {
    switch (family) {
        case GraphFamily::ErGnl: return "er-gnl";
        case GraphFamily::ErGnp: return "er-gnp";
        case GraphFamily::Ba: return "ba";
        case GraphFamily::Ws: return "ws";
        case GraphFamily::Tree: return "tree";
        case GraphFamily::Regular: return "regular";
        case GraphFamily::Complete: return "complete";
        case GraphFamily::Path: return "path";
        case GraphFamily::Cycle: return "cycle";
        case GraphFamily::Circulant: return "circulant";
    }
    return "unknown";
}

std::optional<GraphFamily> parse_family(std::string_view name) {
    for (GraphFamily f : {GraphFamily::ErGnl, GraphFamily::ErGnp, GraphFamily::Ba, GraphFamily::Ws,
                          GraphFamily::Tree, GraphFamily::Regular, GraphFamily::Complete,
                          GraphFamily::Path, GraphFamily::Cycle, GraphFamily::Circulant})
        if (to_string(f) == name) return f;
    if (name == "er") return GraphFamily::ErGnl;
    return std::nullopt;
}

Graph sample_graph(const FamilyParams& p, Rng& rng) {
    switch (p.family) {
        case GraphFamily::ErGnl: return generate_er_gnl(p.n, p.links, rng);
        case GraphFamily::ErGnp: return generate_er_gnp(p.n, p.p, rng);
        case GraphFamily::Ba: return generate_ba(p.n, p.k_attach, rng);
        case GraphFamily::Ws: return generate_ws(p.n, p.ws_k, p.ws_p, rng);
        case GraphFamily::Tree: return generate_tree(p.n, rng);
        case GraphFamily::Regular: return generate_regular(p.n, p.degree, rng);
        case GraphFamily::Complete: return make_complete(p.n);
        case GraphFamily::Path: return make_path(p.n);
        case GraphFamily::Cycle: return make_cycle(p.n);
        case GraphFamily::Circulant: return make_circulant(p.n, p.ws_k);
    }
    throw InvalidArgument("unknown graph family");
}

double ExperimentConfig::effective_residue_tol() const {
    if (residue_tol) return *residue_tol;
    return kind == ExperimentKind::Degree ? 0.25 : 1.0;
}

ConstraintTolerance ExperimentConfig::constraint_tolerance() const {
    return ConstraintTolerance{effective_residue_tol(), bound_tol};
}

void ExperimentConfig::validate() const {
    const FamilyParams& f = graph;
    const long long n = f.n;
    require(n >= 2, "--n must be at least 2");
    require(realizations >= 1, "--realizations must be at least 1");
    require(threads >= 1, "--threads must be at least 1");
    require(epsilon >= 0.0, "--epsilon must be non-negative");
    require(solution_cap >= 1, "solution cap must be positive");
    require(effective_residue_tol() > 0.0, "residue tolerance must be positive");
    require(bound_tol >= 0.0, "bound tolerance must be non-negative");
    require(physics.omega0 > 0.0, "--omega0 must be positive");
    require(physics.g > 0.0, "--g must be positive");
    require(physics.temperature >= 0.0, "--temp must be non-negative");
    require(physics.probe_k >= 0.0, "--probe-k must be non-negative");
    require(physics.probe_node >= 0 && physics.probe_node < f.n, "probe node outside the network");
    require(coupling_tol > 0.0, "coupling tolerance must be positive");
    require(sweep_points >= 3, "sweep needs at least 3 grid points");
    require(t_interact > 0.0 && time_samples >= 1, "interaction time and samples must be positive");
    require(threshold_factor > 0.0, "peak threshold factor must be positive");
    require(sweep_f_min >= 0.0 && sweep_f_max >= 0.0, "sweep range must be non-negative");
    require(sweep_f_max == 0.0 || sweep_f_max > sweep_f_min, "sweep range must satisfy f_min < f_max");

    switch (f.family) {
        case GraphFamily::ErGnl:
            require(f.links >= n - 1 && f.links <= n * (n - 1) / 2, "--links must be in [N-1, N(N-1)/2]");
            break;
        case GraphFamily::ErGnp: require(f.p > 0.0 && f.p <= 1.0, "--p must be in (0, 1]"); break;
        case GraphFamily::Ba:
            require(n >= 3 && f.k_attach >= 1 && f.k_attach <= 3, "--k-attach must be in [1, 3] and N >= 3");
            break;
        case GraphFamily::Ws:
            require(f.ws_k >= 1 && n > 2 * f.ws_k, "--ws-k needs N > 2k >= 2");
            require(f.ws_p >= 0.0 && f.ws_p <= 1.0, "--ws-p must be in [0, 1]");
            break;
        case GraphFamily::Regular:
            require(f.degree >= 1 && f.degree < n && (n * f.degree) % 2 == 0,
                    "--degree must be in [1, N-1] with N*degree even");
            break;
        case GraphFamily::Cycle: require(n >= 3, "cycle needs N >= 3"); break;
        case GraphFamily::Circulant: require(f.ws_k >= 1 && n > 2 * f.ws_k, "circulant needs N > 2k"); break;
        case GraphFamily::Tree:
        case GraphFamily::Complete:
        case GraphFamily::Path: break;
    }
    for (double p : p_grid) require(p > 0.0 && p <= 1.0, "--p-grid entries must be in (0, 1]");
}

std::string config_json(const ExperimentConfig& cfg) {
    nlohmann::ordered_json j;
    j["experiment"] = std::string(to_string(cfg.kind));
    j["graph"] = {{"family", std::string(to_string(cfg.graph.family))},
                  {"n", cfg.graph.n},
                  {"links", cfg.graph.links},
                  {"p", cfg.graph.p},
                  {"k_attach", cfg.graph.k_attach},
                  {"ws_k", cfg.graph.ws_k},
                  {"ws_p", cfg.graph.ws_p},
                  {"degree", cfg.graph.degree}};
    j["physics"] = {{"omega0", cfg.physics.omega0},
                    {"g", cfg.physics.g},
                    {"temperature", cfg.physics.temperature},
                    {"probe_k", cfg.physics.probe_k},
                    {"probe_node", cfg.physics.probe_node}};
    j["realizations"] = cfg.realizations;
    j["seed"] = cfg.seed;
    j["epsilon"] = cfg.epsilon;
    j["threads"] = cfg.threads;
    j["solution_cap"] = cfg.solution_cap;
    j["residue_tol"] = cfg.effective_residue_tol();
    j["bound_tol"] = cfg.bound_tol;
    j["p_grid"] = cfg.p_grid;
    j["coupling_tol"] = cfg.coupling_tol;
    j["sweep"] = {{"f_min", cfg.sweep_f_min},
                  {"f_max", cfg.sweep_f_max},
                  {"points", cfg.sweep_points},
                  {"t_interact", cfg.t_interact},
                  {"time_samples", cfg.time_samples},
                  {"threshold_factor", cfg.threshold_factor}};
    j["out"] = cfg.out;
    return j.dump(2) + "\n";
}

// ---- degree ---------------------------------------------------------------

int MeritHistogram::bin(double f) {
    const int b = static_cast<int>(std::floor(f / kWidth + 1e-9));
    return std::clamp(b, 0, kBins - 1);
}

std::size_t DegreeReport::failures() const { return count_failures(records); }

DegreeRecord degree_realization(const Graph& g, const ExperimentConfig& cfg,
                                std::vector<double>* solution_merits) {
    DegreeRecord r;
    r.n = g.node_count();
    r.edges = g.edge_count();
    const DegreeSequence truth = g.degree_sequence().sorted_descending();
    const ConstraintSet c = build_constraints(laplace_spectrum(build_laplacian(g)), cfg.constraint_tolerance());
    const SolutionSet set = enumerate_with_fallback(c, cfg.solution_cap);
    r.truncated = set.truncated;
    r.fallback = set.fallback;
    const Scored s = score(set, truth, solution_merits);
    r.solution_count = s.count;
    r.estimate_merit = s.estimate;
    r.solution_merit = s.summary;
    r.truth_found = s.truth_found;
    if (set.empty()) r.error = "no_solutions";
    return r;
}

DegreeReport run_degree_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto count = static_cast<std::size_t>(cfg.realizations);
    DegreeReport report;
    report.records.resize(count);
    std::vector<std::vector<double>> merits(count);
    parallel_for(count, cfg.threads, [&](std::size_t i) {
        const std::uint64_t seed = realization_seed(cfg.seed, i);
        DegreeRecord r;
        try {
            Rng rng{seed};
            r = degree_realization(sample_graph(cfg.graph, rng), cfg, &merits[i]);
        } catch (const Error& e) {
            r = DegreeRecord{};
            r.n = cfg.graph.n;
            r.error = error_code(e);
            merits[i].clear();
        }
        r.index = i;
        r.seed = seed;
        report.records[i] = std::move(r);
    });

    std::size_t scored = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const DegreeRecord& r = report.records[i];
        if (!r.estimate_merit || merits[i].empty()) continue;
        ++scored;
        const double w = 1.0 / static_cast<double>(merits[i].size());
        for (double f : merits[i]) report.histogram.all_solutions[MeritHistogram::bin(f)] += w;
        report.histogram.estimates[MeritHistogram::bin(r.estimate_merit->value())] += 1.0;
    }
    if (scored > 0) {
        for (double& v : report.histogram.all_solutions) v /= static_cast<double>(scored);
        for (double& v : report.histogram.estimates) v /= static_cast<double>(scored);
    }
    return report;
}

std::string degree_csv(const DegreeReport& report, GraphFamily family) {
    std::ostringstream os;
    os << "index,seed,family,n,edges,solution_count,estimate_merit,estimate_perfect,mean_merit,"
          "min_merit,max_merit,truth_found,truncated,fallback,error\n";
    for (const DegreeRecord& r : report.records) {
        const bool ok = r.error.empty();
        os << r.index << ',' << num(r.seed) << ',' << to_string(family) << ',' << r.n << ',' << r.edges
           << ',' << r.solution_count << ',' << merit_cell(r.estimate_merit) << ','
           << (r.estimate_merit ? (r.estimate_merit->perfect() ? "1" : "0") : "") << ','
           << (ok ? num(r.solution_merit.mean) : "") << ',' << (ok ? num(r.solution_merit.min) : "")
           << ',' << (ok ? num(r.solution_merit.max) : "") << ',' << int(r.truth_found) << ','
           << int(r.truncated) << ',' << int(r.fallback) << ',' << r.error << '\n';
    }
    return os.str();
}

std::string histogram_csv(const MeritHistogram& h) {
    std::ostringstream os;
    os << "bin_lo,bin_hi,all_solutions,estimates\n";
    for (int b = 0; b < MeritHistogram::kBins; ++b)
        os << num(b * MeritHistogram::kWidth) << ',' << num((b + 1) * MeritHistogram::kWidth) << ','
           << num(h.all_solutions[b]) << ',' << num(h.estimates[b]) << '\n';
    return os.str();
}

// ---- probe ----------------------------------------------------------------

ResonanceTraces resonance_traces(const OscillatorNetwork& net, int node, double k,
                                 std::span<const double> times, double detuning) {
    const std::vector<double> freqs = network_eigenfrequencies(net);
    ResonanceTraces tr;
    tr.omega_resonant = freqs[resonance_mode(net, node)];
    tr.omega_detuned = tr.omega_resonant * (1.0 + detuning);
    tr.times.assign(times.begin(), times.end());
    tr.resonant = ProbeDynamics(net, ProbeSetup{tr.omega_resonant, k, node}).mean_excitation(times);
    tr.detuned = ProbeDynamics(net, ProbeSetup{tr.omega_detuned, k, node}).mean_excitation(times);
    return tr;
}

std::size_t ProbeReport::failures() const { return count_failures(records); }

SweepOptions sweep_options(const OscillatorNetwork& net, const ExperimentConfig& cfg) {
    SweepOptions o = default_sweep(net);
    if (cfg.sweep_f_min > 0.0) o.f_min = cfg.sweep_f_min;
    if (cfg.sweep_f_max > 0.0) o.f_max = cfg.sweep_f_max;
    o.step = (o.f_max - o.f_min) / static_cast<double>(cfg.sweep_points);
    o.t_interact = cfg.t_interact;
    o.time_samples = cfg.time_samples;
    o.k = cfg.physics.probe_k;
    o.threshold_factor = cfg.threshold_factor;
    o.threads = 1;
    return o;
}

ProbeReport run_probe_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto count = static_cast<std::size_t>(cfg.realizations);
    const PhysicalParams& ph = cfg.physics;
    ProbeReport report;
    report.records.resize(count);
    parallel_for(count, cfg.threads, [&](std::size_t i) {
        ProbeRecord r;
        r.index = i;
        r.seed = realization_seed(cfg.seed, i);
        r.n = cfg.graph.n;
        try {
            Rng rng{r.seed};
            const Graph g = sample_graph(cfg.graph, rng);
            r.edges = g.edge_count();
            const DegreeSequence truth = g.degree_sequence().sorted_descending();
            r.exact_d = truth.sum();
            r.exact_s = truth.sum_of_squares();

            const OscillatorNetwork net = OscillatorNetwork::from_graph(g, ph.omega0, ph.g, ph.temperature);
            SweepResult sweep = frequency_sweep(net, ph.probe_node, sweep_options(net, cfg));
            r.peaks_found = sweep.peaks.size();
            r.resolved = sweep.resolved;
            if (i == 0) {
                report.first_traces = resonance_traces(net, ph.probe_node, ph.probe_k,
                                                       interaction_times(cfg.t_interact, cfg.time_samples));
            }
            if (!sweep.resolved) {
                r.error = "unresolved";
            } else {
                const std::vector<double> exact = network_eigenfrequencies(net);
                for (std::size_t m = 0; m < exact.size(); ++m)
                    r.max_peak_error_steps =
                        std::max(r.max_peak_error_steps, std::abs(sweep.peaks[m] - exact[m]) / sweep.step);
                const std::vector<double> probed = perturb_values(sweep.peaks, cfg.epsilon, rng);
                const ConstraintSet c = build_constraints(frequencies_to_spectrum(probed, std::nullopt, ph.g),
                                                          cfg.constraint_tolerance());
                r.probed_d = c.total_degree;
                r.probed_s = c.total_squared;
                const SolutionSet set = enumerate_with_fallback(c, cfg.solution_cap);
                r.fallback = set.fallback;
                const Scored s = score(set, truth, nullptr);
                r.solution_count = s.count;
                r.estimate_merit = s.estimate;
                if (set.empty()) r.error = "no_solutions";
            }
            if (i == 0) report.first_sweep = std::move(sweep);
        } catch (const Error& e) {
            r.error = error_code(e);
        }
        report.records[i] = std::move(r);
    });
    return report;
}

std::string probe_csv(const ProbeReport& report) {
    std::ostringstream os;
    os << "index,seed,n,edges,peaks_found,resolved,max_peak_error_steps,probed_D,probed_S,exact_D,"
          "exact_S,constraints_match,solution_count,estimate_merit,fallback,error\n";
    for (const ProbeRecord& r : report.records) {
        const bool have = r.resolved && (r.error.empty() || r.error == "no_solutions");
        os << r.index << ',' << num(r.seed) << ',' << r.n << ',' << r.edges << ',' << r.peaks_found << ','
           << int(r.resolved) << ',' << (r.resolved ? num(r.max_peak_error_steps) : "") << ','
           << (have ? std::to_string(r.probed_d) : "") << ',' << (have ? std::to_string(r.probed_s) : "")
           << ',' << r.exact_d << ',' << r.exact_s << ','
           << (have ? (r.probed_d == r.exact_d && r.probed_s == r.exact_s ? "1" : "0") : "") << ','
           << r.solution_count << ',' << merit_cell(r.estimate_merit) << ',' << int(r.fallback) << ','
           << r.error << '\n';
    }
    return os.str();
}

std::string sweep_csv(const SweepResult& sweep) {
    std::ostringstream os;
    os << "omega_s,max_mean_excitation\n";
    for (std::size_t i = 0; i < sweep.grid.size(); ++i)
        os << num(sweep.grid[i]) << ',' << num(sweep.response[i]) << '\n';
    return os.str();
}

std::string peaks_text(const SweepResult& sweep) {
    std::ostringstream os;
    os.precision(17);
    for (double p : sweep.peaks) os << p << '\n';
    return os.str();
}

std::string traces_csv(const ResonanceTraces& tr) {
    std::ostringstream os;
    os << "# omega_resonant=" << num(tr.omega_resonant) << " omega_detuned=" << num(tr.omega_detuned) << '\n';
    os << "t,resonant,detuned\n";
    for (std::size_t i = 0; i < tr.times.size(); ++i)
        os << num(tr.times[i]) << ',' << num(tr.resonant[i]) << ',' << num(tr.detuned[i]) << '\n';
    return os.str();
}

// ---- coupling -------------------------------------------------------------

std::size_t CouplingReport::failures() const {
    std::size_t f = 0;
    for (const CouplingRow& r : rows) f += static_cast<std::size_t>(r.stats.failures);
    return f;
}

CouplingReport run_coupling_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    CouplingTrialParams params;
    params.coupling = cfg.physics.g;
    params.omega0 = cfg.physics.omega0;
    params.tol = cfg.coupling_tol;

    std::vector<std::optional<double>> grid;
    if (cfg.graph.family == GraphFamily::ErGnp) {
        if (cfg.p_grid.empty()) grid.emplace_back(cfg.graph.p);
        for (double p : cfg.p_grid) grid.emplace_back(p);
    } else {
        grid.emplace_back(std::nullopt);
    }

    CouplingReport report;
    for (std::size_t row = 0; row < grid.size(); ++row) {
        FamilyParams fp = cfg.graph;
        if (grid[row]) fp.p = *grid[row];
        CouplingRow r;
        r.p = grid[row];
        r.seed = derive_seed(cfg.seed, {row});
        r.stats = coupling_experiment([fp](Rng& rng) { return sample_graph(fp, rng); }, cfg.realizations,
                                      r.seed, params, cfg.threads);
        report.rows.push_back(r);
    }
    return report;
}

std::string coupling_csv(const CouplingReport& report) {
    std::ostringstream os;
    os << "p,trials,success_fraction,conclusive_fraction,seed\n";
    for (const CouplingRow& r : report.rows)
        os << (r.p ? num(*r.p) : "") << ',' << r.stats.trials << ',' << num(r.stats.success_fraction()) << ','
           << num(r.stats.conclusive_fraction()) << ',' << num(r.seed) << '\n';
    return os.str();
}

// ---- robustness -----------------------------------------------------------

std::size_t RobustnessReport::failures() const { return count_failures(records); }

double RobustnessReport::degree_match_fraction() const {
    if (records.empty()) return 0.0;
    const auto hits = std::count_if(records.begin(), records.end(), [](const RobustnessRecord& r) {
        return r.error != "inconsistent_spectrum" && r.probed_d == r.true_d;
    });
    return static_cast<double>(hits) / static_cast<double>(records.size());
}

RobustnessReport run_robustness_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto count = static_cast<std::size_t>(cfg.realizations);
    const PhysicalParams& ph = cfg.physics;
    RobustnessReport report;
    report.records.resize(count);
    parallel_for(count, cfg.threads, [&](std::size_t i) {
        RobustnessRecord r;
        r.index = i;
        r.seed = realization_seed(cfg.seed, i);
        r.n = cfg.graph.n;
        try {
            Rng rng{r.seed};
            const Graph g = sample_graph(cfg.graph, rng);
            const DegreeSequence truth = g.degree_sequence().sorted_descending();
            r.true_d = truth.sum();
            r.true_s = truth.sum_of_squares();
            const std::vector<double> exact =
                spectrum_to_frequencies(laplace_spectrum(build_laplacian(g)), ph.omega0, ph.g);
            const std::vector<double> noisy = perturb_values(exact, cfg.epsilon, rng);
            const ConstraintSet c = build_constraints(frequencies_to_spectrum(noisy, std::nullopt, ph.g),
                                                      cfg.constraint_tolerance());
            r.probed_d = c.total_degree;
            r.probed_s = c.total_squared;
            const SolutionSet set = enumerate_with_fallback(c, cfg.solution_cap);
            r.fallback = set.fallback;
            r.truncated = set.truncated;
            const Scored s = score(set, truth, nullptr);
            r.solution_count = s.count;
            r.estimate_merit = s.estimate;
            r.truth_found = s.truth_found;
            if (set.empty()) r.error = "no_solutions";
        } catch (const Error& e) {
            r.error = error_code(e);
        }
        report.records[i] = std::move(r);
    });
    return report;
}

std::string robustness_csv(const RobustnessReport& report, GraphFamily family) {
    std::ostringstream os;
    os << "index,seed,family,n,true_D,probed_D,D_match,true_S,probed_S,S_match,solution_count,"
          "estimate_merit,truth_found,fallback,truncated,error\n";
    for (const RobustnessRecord& r : report.records) {
        const bool have = r.error.empty() || r.error == "no_solutions";
        os << r.index << ',' << num(r.seed) << ',' << to_string(family) << ',' << r.n << ',' << r.true_d
           << ',' << (have ? std::to_string(r.probed_d) : "") << ','
           << (have ? (r.probed_d == r.true_d ? "1" : "0") : "") << ',' << r.true_s << ','
           << (have ? std::to_string(r.probed_s) : "") << ','
           << (have ? (r.probed_s == r.true_s ? "1" : "0") : "") << ',' << r.solution_count << ','
           << merit_cell(r.estimate_merit) << ',' << int(r.truth_found) << ',' << int(r.fallback) << ','
           << int(r.truncated) << ',' << r.error << '\n';
    }
    return os.str();
}

}  // namespace netprobe
