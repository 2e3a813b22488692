// netprobe: command-line harness for the degree, probe, coupling and
// robustness experiments, plus a standalone estimator for spectrum files.
//
// Exit codes: 0 success, 1 configuration error, 2 some realizations failed.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "netprobe/degree_estimator.hpp"
#include "netprobe/error.hpp"
#include "netprobe/experiments.hpp"
#include "netprobe/spectral.hpp"

using namespace netprobe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitPartial = 2;

struct Output {
    std::string prefix;  // empty: main CSV to stdout, no side files

    void write(const std::string& suffix, const std::string& content) const {
        const std::string path = prefix + suffix;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write " + path);
        out << content;
    }

    void main_csv(const std::string& csv) const {
        if (prefix.empty())
            std::cout << csv;
        else
            write(".csv", csv);
    }

    // Config sidecar; run facts that may vary between runs live only here.
    void sidecar(const ExperimentConfig& cfg, double seconds, std::size_t failures) const {
        if (prefix.empty()) return;
        auto j = nlohmann::ordered_json::parse(config_json(cfg));
        j["run"] = {{"wall_seconds", seconds}, {"failures", failures}};
        write(".json", j.dump(2) + "\n");
    }
};

void add_graph_options(CLI::App& app, ExperimentConfig& cfg, std::string& family) {
    app.add_option("--family", family,
                   "er-gnl (alias er), er-gnp, ba, ws, tree, regular, complete, path, cycle, circulant")
        ->capture_default_str();
    app.add_option("--n", cfg.graph.n, "number of nodes")->capture_default_str();
    app.add_option("--links", cfg.graph.links, "edges for er-gnl")->capture_default_str();
    app.add_option("--p", cfg.graph.p, "link probability for er-gnp")->capture_default_str();
    app.add_option("--k-attach", cfg.graph.k_attach, "edges per new node for ba")->capture_default_str();
    app.add_option("--ws-k", cfg.graph.ws_k, "ring neighbours per side for ws and circulant")
        ->capture_default_str();
    app.add_option("--ws-p", cfg.graph.ws_p, "rewiring probability for ws")->capture_default_str();
    app.add_option("--degree", cfg.graph.degree, "degree for regular")->capture_default_str();
}

void add_run_options(CLI::App& app, ExperimentConfig& cfg, std::string& out) {
    app.add_option("--realizations", cfg.realizations, "number of realizations (trials per p for coupling)")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
    app.add_option("--out", out, "output prefix; writes <out>.csv, <out>.json and extra files")
        ->capture_default_str();
}

void add_physics_options(CLI::App& app, ExperimentConfig& cfg) {
    app.add_option("--omega0", cfg.physics.omega0, "bare oscillator frequency")->capture_default_str();
    app.add_option("--g", cfg.physics.g, "uniform coupling constant")->capture_default_str();
    app.add_option("--temp", cfg.physics.temperature, "network temperature")->capture_default_str();
}

void add_estimator_options(CLI::App& app, ExperimentConfig& cfg) {
    app.add_option("--solution-cap", cfg.solution_cap, "stop enumeration after this many solutions")
        ->capture_default_str();
    app.add_option("--residue-tol", cfg.residue_tol,
                   "largest accepted distance of the spectral sums from even integers "
                   "(default 0.25 for degree, 1.0 otherwise)");
    app.add_option("--bound-tol", cfg.bound_tol, "slack added to real-valued degree bounds")
        ->capture_default_str();
}

int run(const ExperimentConfig& cfg, const Output& out) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
    std::size_t failures = 0;
    std::string summary;

    switch (cfg.kind) {
        case ExperimentKind::Degree: {
            const DegreeReport rep = run_degree_experiment(cfg);
            out.main_csv(degree_csv(rep, cfg.graph.family));
            if (!out.prefix.empty()) out.write("_histogram.csv", histogram_csv(rep.histogram));
            failures = rep.failures();
            break;
        }
        case ExperimentKind::Probe: {
            const ProbeReport rep = run_probe_experiment(cfg);
            out.main_csv(probe_csv(rep));
            if (!out.prefix.empty()) {
                out.write("_sweep.csv", sweep_csv(rep.first_sweep));
                out.write("_peaks.txt", peaks_text(rep.first_sweep));
                out.write("_traces.csv", traces_csv(rep.first_traces));
            }
            failures = rep.failures();
            break;
        }
        case ExperimentKind::Coupling: {
            const CouplingReport rep = run_coupling_experiment(cfg);
            out.main_csv(coupling_csv(rep));
            failures = rep.failures();
            break;
        }
        case ExperimentKind::Robustness: {
            const RobustnessReport rep = run_robustness_experiment(cfg);
            out.main_csv(robustness_csv(rep, cfg.graph.family));
            failures = rep.failures();
            char buf[96];
            std::snprintf(buf, sizeof buf, "D match fraction %.4f\n", rep.degree_match_fraction());
            summary = buf;
            break;
        }
    }
    const double seconds = elapsed();
    out.sidecar(cfg, seconds, failures);
    std::cerr << to_string(cfg.kind) << ": " << cfg.realizations << " realizations, " << failures
              << " failed, " << seconds << " s\n"
              << summary;
    return failures ? kExitPartial : kExitOk;
}

struct EstimateArgs {
    std::string spectrum_file;
    std::string frequency_file;
    std::optional<double> omega0;
    double g = 0.0;
    std::string out;
};

int estimate(const EstimateArgs& a, const ExperimentConfig& cfg) {
    Spectrum s;
    if (!a.spectrum_file.empty()) {
        s = read_spectrum_file(a.spectrum_file);
    } else {
        const Spectrum f = read_spectrum_file(a.frequency_file);
        s = frequencies_to_spectrum(f.values, a.omega0, a.g);
    }
    const ConstraintSet c = build_constraints(s, cfg.constraint_tolerance());
    const SolutionSet set = enumerate_with_fallback(c, cfg.solution_cap);
    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) throw Error("cannot write " + a.out);
    }
    std::ostream& os = a.out.empty() ? std::cout : file;
    write_solutions(os, set);
    if (set.empty()) {
        std::cerr << "no degree sequence satisfies the constraints\n";
        return kExitPartial;
    }
    const Estimate e = select_estimate(set);
    std::cerr << set.size() << " solution(s)" << (set.truncated ? " (truncated)" : "")
              << (set.fallback ? " (partial-sum caps dropped)" : "") << "; estimate:";
    for (int d : e.sequence.values) std::cerr << ' ' << d;
    std::cerr << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Network structure estimation from Laplace spectra and probe spectroscopy"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "netprobe 0.1.0");

    ExperimentConfig cfg;
    std::string family = "er-gnl";
    std::string out;
    std::string p_grid_text;

    CLI::App* degree = app.add_subcommand("degree", "degree-sequence estimation from exact spectra");
    add_graph_options(*degree, cfg, family);
    add_run_options(*degree, cfg, out);
    add_estimator_options(*degree, cfg);

    CLI::App* probe = app.add_subcommand("probe", "frequency sweep with a probe oscillator, then estimation");
    add_graph_options(*probe, cfg, family);
    add_run_options(*probe, cfg, out);
    add_physics_options(*probe, cfg);
    add_estimator_options(*probe, cfg);
    probe->add_option("--probe-k", cfg.physics.probe_k, "probe coupling")->capture_default_str();
    probe->add_option("--probe-node", cfg.physics.probe_node, "probed node")->capture_default_str();
    probe->add_option("--epsilon", cfg.epsilon, "relative noise on detected frequencies")->capture_default_str();
    probe->add_option("--f-min", cfg.sweep_f_min, "sweep start (0: 0.95 omega0)")->capture_default_str();
    probe->add_option("--f-max", cfg.sweep_f_max, "sweep end (0: 1.02 sqrt(omega0^2 + g N))")
        ->capture_default_str();
    probe->add_option("--sweep-points", cfg.sweep_points, "grid intervals across the sweep")->capture_default_str();
    probe->add_option("--t-interact", cfg.t_interact, "interaction time")->capture_default_str();
    probe->add_option("--time-samples", cfg.time_samples, "time samples per grid point")->capture_default_str();
    probe->add_option("--threshold", cfg.threshold_factor, "peak threshold as a multiple of the median response")
        ->capture_default_str();

    CLI::App* coupling = app.add_subcommand("coupling", "coupling-constant estimation from exact frequencies");
    add_graph_options(*coupling, cfg, family);
    add_run_options(*coupling, cfg, out);
    coupling->add_option("--omega0", cfg.physics.omega0, "bare oscillator frequency")->capture_default_str();
    coupling->add_option("--g", cfg.physics.g, "true coupling constant")->capture_default_str();
    coupling->add_option("--p-grid", p_grid_text, "comma-separated link probabilities (er-gnp)");
    coupling->add_option("--coupling-tol", cfg.coupling_tol, "evenness tolerance")->capture_default_str();

    CLI::App* robust = app.add_subcommand("robustness", "degree estimation from noisy eigenfrequencies");
    add_graph_options(*robust, cfg, family);
    add_run_options(*robust, cfg, out);
    add_physics_options(*robust, cfg);
    add_estimator_options(*robust, cfg);
    robust->add_option("--epsilon", cfg.epsilon, "relative frequency noise")->capture_default_str();

    EstimateArgs est;
    CLI::App* estimate_cmd = app.add_subcommand("estimate", "estimate degree sequences from a spectrum file");
    auto* spec_opt = estimate_cmd->add_option("--spectrum", est.spectrum_file, "Laplace eigenvalues, one per line");
    auto* freq_opt =
        estimate_cmd->add_option("--frequencies", est.frequency_file, "eigenfrequencies, one per line");
    spec_opt->excludes(freq_opt);
    estimate_cmd->add_option("--omega0", est.omega0, "bare frequency (default: smallest frequency)");
    estimate_cmd->add_option("--g", est.g, "coupling constant (required with --frequencies)");
    estimate_cmd->add_option("--out", est.out, "solutions file (default: stdout)");
    add_estimator_options(*estimate_cmd, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (estimate_cmd->parsed()) {
            if (est.spectrum_file.empty() && est.frequency_file.empty())
                throw InvalidArgument("estimate needs --spectrum or --frequencies");
            if (!est.frequency_file.empty() && !(est.g > 0.0))
                throw InvalidArgument("--frequencies needs a positive --g");
            cfg.kind = ExperimentKind::Degree;
            if (!cfg.residue_tol && !est.frequency_file.empty()) cfg.residue_tol = 1.0;
            return estimate(est, cfg);
        }

        if (degree->parsed()) cfg.kind = ExperimentKind::Degree;
        if (probe->parsed()) cfg.kind = ExperimentKind::Probe;
        if (coupling->parsed()) cfg.kind = ExperimentKind::Coupling;
        if (robust->parsed()) cfg.kind = ExperimentKind::Robustness;

        const auto fam = parse_family(family);
        if (!fam) throw InvalidArgument("unknown --family " + family);
        cfg.graph.family = *fam;
        if (!p_grid_text.empty()) {
            for (const std::string& item : CLI::detail::split(p_grid_text, ','))
                cfg.p_grid.push_back(std::stod(item));
        }
        cfg.out = out;
        return run(cfg, Output{out});
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument&) {
        std::cerr << "error: --p-grid must be a comma-separated list of numbers\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPartial;
    }
}
