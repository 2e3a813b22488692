#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netprobe/graph.hpp"

namespace netprobe {

// N identical unit-mass oscillators with H = p.p/2 + q.(omega0^2 I + g L).q/2,
// initially thermal at `temperature` (hbar = k_B = 1).
struct OscillatorNetwork {
    Eigen::MatrixXd laplacian;
    double omega0 = 0.2;
    double g = 0.1;
    double temperature = 0.0;

    static OscillatorNetwork from_graph(const Graph& graph, double omega0, double g, double temperature);

    int size() const noexcept { return static_cast<int>(laplacian.rows()); }
    // Throws InvalidArgument on a bad parameter or non-definite potential.
    void validate() const;
};

// Probe oscillator H_S = (p_S^2 + omega_s^2 q_S^2)/2 coupled through
// H_I = -k q_S q_node; starts in its vacuum.
struct ProbeSetup {
    double omega_s = 0.2;
    double k = 0.0025;
    int node = 0;
};

// Zero-mean Gaussian state. Index order (q_0..q_{N-1}, q_S, p_0..p_{N-1}, p_S):
// the probe is mode N. covariance = <{R, R^T}>/2.
struct GaussianState {
    Eigen::MatrixXd covariance;

    int modes() const noexcept { return static_cast<int>(covariance.rows() / 2); }
};

// Omega_i = sqrt(omega0^2 + g lambda_i), ascending.
std::vector<double> network_eigenfrequencies(const OscillatorNetwork& net);

// Highest eigenmode (index in ascending-frequency order) whose amplitude on
// `node` is at least the uniform value 1/sqrt(N): well coupled to a probe
// there, and as narrow a resonance as possible relative to a fixed relative
// detuning. Falls back to the mode with the largest amplitude. Needs N >= 2.
std::size_t resonance_mode(const OscillatorNetwork& net, int node);

// (N+1)x(N+1) potential matrix of network + probe.
Eigen::MatrixXd coupled_potential(const OscillatorNetwork& net, const ProbeSetup& probe);

// Network thermal, probe vacuum, no correlations between them.
GaussianState initial_covariance(const OscillatorNetwork& net, const ProbeSetup& probe);

// Symplectic eigenvalues (each >= 1/2 for a physical state), ascending.
std::vector<double> symplectic_eigenvalues(const GaussianState& state);

// Exact evolution under the coupled quadratic Hamiltonian. The potential is
// diagonalized once; each mode rotates in its own phase plane.
class ProbeDynamics {
public:
    // Throws UnstableCoupling when the coupled potential is not positive definite.
    ProbeDynamics(const OscillatorNetwork& net, const ProbeSetup& probe);

    const std::vector<double>& normal_frequencies() const noexcept { return nu_; }

    // <n(t)> = (<p_S^2> + omega_s^2 <q_S^2>) / (2 omega_s) - 1/2
    double mean_excitation(double t) const;
    std::vector<double> mean_excitation(std::span<const double> times) const;
    double max_mean_excitation(std::span<const double> times) const;

    // Full covariance at time t.
    GaussianState state_at(double t) const;
    // <H> for a state of this system (including zero-point energy).
    double energy(const GaussianState& state) const;

    const GaussianState& initial_state() const noexcept { return initial_; }

private:
    double omega_s_;
    Eigen::MatrixXd potential_;
    Eigen::MatrixXd modes_;      // columns: normal-mode vectors
    std::vector<double> nu_;     // normal-mode frequencies
    Eigen::VectorXd probe_row_;  // probe component of every normal mode
    Eigen::MatrixXd mode_qq_;    // initial <QQ^T> in normal coordinates
    Eigen::MatrixXd mode_pp_;    // initial <PP^T> in normal coordinates
    GaussianState initial_;
};

std::vector<double> evolve_mean_excitation(const OscillatorNetwork& net, const ProbeSetup& probe,
                                           std::span<const double> times);

// t_j = t_interact * j / samples, j = 1..samples
std::vector<double> interaction_times(double t_interact, int samples);

struct SweepOptions {
    double f_min = 0.0;
    double f_max = 0.0;
    double step = 0.0;           // <= 0: (f_max - f_min) / 2000
    double t_interact = 2000.0;
    int time_samples = 200;
    double k = 0.0025;
    double threshold_factor = 5.0;  // peaks must exceed this multiple of the median response
    int threads = 1;
};

struct SweepResult {
    std::vector<double> grid;      // probe frequencies
    std::vector<double> response;  // max over the time grid of <n(t)>
    std::vector<double> peaks;     // detected eigenfrequencies, ascending
    double step = 0.0;
    bool resolved = false;         // exactly N peaks found
};

// Default sweep range covering every possible eigenfrequency of an
// N-node network: [0.95 omega0, 1.02 sqrt(omega0^2 + g N)].
SweepOptions default_sweep(const OscillatorNetwork& net);

// Scans omega_s over the grid, records max_t <n(t)> per point, and picks
// local maxima above threshold_factor * median(response) whose prominence
// also exceeds that threshold, each refined by a
// parabola through its three neighbouring grid points. At most N peaks are
// returned (strongest kept); fewer than N leaves `resolved` false, which
// is how degenerate or unresolvable eigenfrequencies show up.
SweepResult frequency_sweep(const OscillatorNetwork& net, int node, const SweepOptions& options);

// Peak picking on an already computed response curve.
std::vector<std::size_t> detect_peaks(std::span<const double> response, double threshold_factor,
                                      std::size_t max_peaks);

}  // namespace netprobe
