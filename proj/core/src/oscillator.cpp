#include "netprobe/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "netprobe/error.hpp"
#include "netprobe/parallel.hpp"

namespace netprobe {
namespace {

// coth(x) with the T = 0 limit folded in.
double thermal_factor(double omega, double temperature) {
    if (temperature <= 0.0) return 1.0;
    return 1.0 / std::tanh(omega / (2.0 * temperature));
}

}  // namespace

OscillatorNetwork OscillatorNetwork::from_graph(const Graph& graph, double omega0, double g,
                                                double temperature) {
    OscillatorNetwork net{build_laplacian(graph).matrix(), omega0, g, temperature};
    net.validate();
    return net;
}

void OscillatorNetwork::validate() const {
    if (laplacian.rows() < 1 || laplacian.rows() != laplacian.cols())
        throw InvalidArgument("network Laplacian must be a non-empty square matrix");
    if (!(omega0 > 0.0)) throw InvalidArgument("omega0 must be positive");
    if (!(g > 0.0)) throw InvalidArgument("coupling constant g must be positive");
    if (!(temperature >= 0.0)) throw InvalidArgument("temperature must be non-negative");
    const Eigen::MatrixXd a =
        omega0 * omega0 * Eigen::MatrixXd::Identity(size(), size()) + g * laplacian;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw InvalidArgument("network potential omega0^2 I + g L is not positive definite");
}

std::vector<double> network_eigenfrequencies(const OscillatorNetwork& net) {
    const int n = net.size();
    const Eigen::MatrixXd a =
        net.omega0 * net.omega0 * Eigen::MatrixXd::Identity(n, n) + net.g * net.laplacian;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i)));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t resonance_mode(const OscillatorNetwork& net, int node) {
    const int n = net.size();
    if (n < 2) throw InvalidArgument("resonance mode needs at least two oscillators");
    if (node < 0 || node >= n) throw InvalidArgument("node outside the network");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(net.laplacian);
    const auto& v = es.eigenvectors();
    const double uniform = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = n - 1; i >= 1; --i)
        if (std::abs(v(node, i)) >= uniform) return static_cast<std::size_t>(i);
    int best = 1;
    for (int i = 2; i < n; ++i)
        if (std::abs(v(node, i)) > std::abs(v(node, best))) best = i;
    return static_cast<std::size_t>(best);
}

Eigen::MatrixXd coupled_potential(const OscillatorNetwork& net, const ProbeSetup& probe) {
    const int n = net.size();
    if (probe.node < 0 || probe.node >= n)
        throw InvalidArgument("probed node " + std::to_string(probe.node) + " outside the network");
    if (!(probe.omega_s > 0.0)) throw InvalidArgument("probe frequency must be positive");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, n + 1);
    a.topLeftCorner(n, n) =
        net.omega0 * net.omega0 * Eigen::MatrixXd::Identity(n, n) + net.g * net.laplacian;
    a(n, n) = probe.omega_s * probe.omega_s;
    a(n, probe.node) = -probe.k;
    a(probe.node, n) = -probe.k;
    return a;
}

GaussianState initial_covariance(const OscillatorNetwork& net, const ProbeSetup& probe) {
    const int n = net.size();
    const int m = n + 1;
    if (!(probe.omega_s > 0.0)) throw InvalidArgument("probe frequency must be positive");
    const Eigen::MatrixXd a =
        net.omega0 * net.omega0 * Eigen::MatrixXd::Identity(n, n) + net.g * net.laplacian;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    Eigen::VectorXd qq(n), pp(n);
    for (int i = 0; i < n; ++i) {
        const double w = std::sqrt(es.eigenvalues()(i));
        const double c = thermal_factor(w, net.temperature);
        qq(i) = c / (2.0 * w);
        pp(i) = w * c / 2.0;
    }
    const Eigen::MatrixXd& o = es.eigenvectors();

    GaussianState s{Eigen::MatrixXd::Zero(2 * m, 2 * m)};
    s.covariance.block(0, 0, n, n) = o * qq.asDiagonal() * o.transpose();
    s.covariance.block(m, m, n, n) = o * pp.asDiagonal() * o.transpose();
    s.covariance(n, n) = 1.0 / (2.0 * probe.omega_s);
    s.covariance(m + n, m + n) = probe.omega_s / 2.0;
    return s;
}

std::vector<double> symplectic_eigenvalues(const GaussianState& state) {
    const int m = state.modes();
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    j.topRightCorner(m, m) = Eigen::MatrixXd::Identity(m, m);
    j.bottomLeftCorner(m, m) = -Eigen::MatrixXd::Identity(m, m);
    Eigen::EigenSolver<Eigen::MatrixXd> es(j * state.covariance, false);
    std::vector<double> all;
    for (int i = 0; i < 2 * m; ++i) all.push_back(std::abs(es.eigenvalues()(i).imag()));
    std::sort(all.begin(), all.end());
    std::vector<double> out;
    for (int i = 0; i < 2 * m; i += 2) out.push_back(0.5 * (all[i] + all[i + 1]));
    return out;
}

ProbeDynamics::ProbeDynamics(const OscillatorNetwork& net, const ProbeSetup& probe)
    : omega_s_(probe.omega_s),
      potential_(coupled_potential(net, probe)),
      initial_(initial_covariance(net, probe)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(potential_);
    if (es.info() != Eigen::Success) throw Error("eigensolve of the coupled potential failed");
    if (es.eigenvalues().minCoeff() <= 0.0) {
        std::ostringstream msg;
        msg << "coupled potential is not positive definite (smallest eigenvalue "
            << es.eigenvalues().minCoeff() << "); probe coupling k = " << probe.k
            << " is too strong for omega_s = " << probe.omega_s;
        throw UnstableCoupling(msg.str());
    }
    const int m = static_cast<int>(potential_.rows());
    modes_ = es.eigenvectors();
    nu_.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) nu_[i] = std::sqrt(es.eigenvalues()(i));
    probe_row_ = modes_.row(m - 1).transpose();
    mode_qq_ = modes_.transpose() * initial_.covariance.topLeftCorner(m, m) * modes_;
    mode_pp_ = modes_.transpose() * initial_.covariance.bottomRightCorner(m, m) * modes_;
}

double ProbeDynamics::mean_excitation(double t) const {
    const int m = static_cast<int>(nu_.size());
    Eigen::VectorXd x(m), y(m), z(m);
    for (int i = 0; i < m; ++i) {
        const double c = std::cos(nu_[i] * t);
        const double s = std::sin(nu_[i] * t);
        x(i) = c * probe_row_(i);
        y(i) = s / nu_[i] * probe_row_(i);
        z(i) = -nu_[i] * s * probe_row_(i);
    }
    // The initial state has no q-p correlations.
    const double qq = x.dot(mode_qq_ * x) + y.dot(mode_pp_ * y);
    const double pp = z.dot(mode_qq_ * z) + x.dot(mode_pp_ * x);
    return (pp + omega_s_ * omega_s_ * qq) / (2.0 * omega_s_) - 0.5;
}

std::vector<double> ProbeDynamics::mean_excitation(std::span<const double> times) const {
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(mean_excitation(t));
    return out;
}

double ProbeDynamics::max_mean_excitation(std::span<const double> times) const {
    double best = -std::numeric_limits<double>::infinity();
    for (double t : times) best = std::max(best, mean_excitation(t));
    return best;
}

GaussianState ProbeDynamics::state_at(double t) const {
    const int m = static_cast<int>(nu_.size());
    Eigen::VectorXd c(m), s_over(m), s_times(m);
    for (int i = 0; i < m; ++i) {
        c(i) = std::cos(nu_[i] * t);
        s_over(i) = std::sin(nu_[i] * t) / nu_[i];
        s_times(i) = -nu_[i] * std::sin(nu_[i] * t);
    }
    Eigen::MatrixXd sym(2 * m, 2 * m);
    sym.topLeftCorner(m, m) = modes_ * c.asDiagonal() * modes_.transpose();
    sym.topRightCorner(m, m) = modes_ * s_over.asDiagonal() * modes_.transpose();
    sym.bottomLeftCorner(m, m) = modes_ * s_times.asDiagonal() * modes_.transpose();
    sym.bottomRightCorner(m, m) = sym.topLeftCorner(m, m);
    return GaussianState{sym * initial_.covariance * sym.transpose()};
}

double ProbeDynamics::energy(const GaussianState& state) const {
    const int m = static_cast<int>(nu_.size());
    return 0.5 * state.covariance.bottomRightCorner(m, m).trace() +
           0.5 * (potential_ * state.covariance.topLeftCorner(m, m)).trace();
}

std::vector<double> evolve_mean_excitation(const OscillatorNetwork& net, const ProbeSetup& probe,
                                           std::span<const double> times) {
    return ProbeDynamics(net, probe).mean_excitation(times);
}

std::vector<double> interaction_times(double t_interact, int samples) {
    if (!(t_interact > 0.0) || samples < 1)
        throw InvalidArgument("interaction time and sample count must be positive");
    std::vector<double> t(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) t[j] = t_interact * (j + 1) / samples;
    return t;
}

SweepOptions default_sweep(const OscillatorNetwork& net) {
    SweepOptions o;
    o.f_min = 0.95 * net.omega0;
    o.f_max = 1.02 * std::sqrt(net.omega0 * net.omega0 + net.g * net.size());
    o.step = (o.f_max - o.f_min) / 2000.0;
    return o;
}

namespace {

// Height above the higher of the two minima reached before the curve climbs
// above the peak again (or hits the edge) on either side.
double prominence(std::span<const double> y, std::size_t i) {
    double left = y[i], right = y[i];
    for (std::size_t j = i; j-- > 0 && y[j] <= y[i];) left = std::min(left, y[j]);
    for (std::size_t j = i + 1; j < y.size() && y[j] <= y[i]; ++j) right = std::min(right, y[j]);
    return y[i] - std::max(left, right);
}

}  // namespace

std::vector<std::size_t> detect_peaks(std::span<const double> response, double threshold_factor,
                                      std::size_t max_peaks) {
    const std::size_t n = response.size();
    if (n == 0 || max_peaks == 0) return {};
    std::vector<double> sorted(response.begin(), response.end());
    std::nth_element(sorted.begin(), sorted.begin() + n / 2, sorted.end());
    const double threshold = threshold_factor * sorted[n / 2];

    constexpr std::size_t kWindow = 2;
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(response[i] > threshold)) continue;
        bool is_max = true;
        for (std::size_t j = (i >= kWindow ? i - kWindow : 0); j <= std::min(n - 1, i + kWindow); ++j) {
            // strict on the left, so a flat top is reported once
            if (j < i ? response[j] >= response[i] : (j > i && response[j] > response[i])) {
                is_max = false;
                break;
            }
        }
        if (is_max && prominence(response, i) >= threshold) peaks.push_back(i);
    }
    if (peaks.size() > max_peaks) {
        std::partial_sort(peaks.begin(), peaks.begin() + static_cast<std::ptrdiff_t>(max_peaks),
                          peaks.end(), [&](std::size_t a, std::size_t b) {
                              return response[a] > response[b] || (response[a] == response[b] && a < b);
                          });
        peaks.resize(max_peaks);
        std::sort(peaks.begin(), peaks.end());
    }
    return peaks;
}

SweepResult frequency_sweep(const OscillatorNetwork& net, int node, const SweepOptions& options) {
    net.validate();
    if (!(options.f_min > 0.0) || !(options.f_max > options.f_min))
        throw InvalidArgument("sweep range must satisfy 0 < f_min < f_max");
    SweepResult result;
    result.step = options.step > 0.0 ? options.step : (options.f_max - options.f_min) / 2000.0;
    const auto points =
        static_cast<std::size_t>(std::floor((options.f_max - options.f_min) / result.step + 1e-9)) + 1;
    result.grid.resize(points);
    for (std::size_t i = 0; i < points; ++i)
        result.grid[i] = options.f_min + static_cast<double>(i) * result.step;

    const std::vector<double> times = interaction_times(options.t_interact, options.time_samples);
    result.response.resize(points);
    parallel_for(points, options.threads, [&](std::size_t i) {
        ProbeDynamics dyn(net, ProbeSetup{result.grid[i], options.k, node});
        result.response[i] = dyn.max_mean_excitation(times);
    });

    const auto n = static_cast<std::size_t>(net.size());
    for (std::size_t idx : detect_peaks(result.response, options.threshold_factor, n)) {
        double offset = 0.0;
        if (idx > 0 && idx + 1 < points) {
            const double y0 = result.response[idx - 1], y1 = result.response[idx],
                         y2 = result.response[idx + 1];
            const double curvature = y0 - 2.0 * y1 + y2;
            if (curvature < 0.0) offset = std::clamp(0.5 * (y0 - y2) / curvature, -0.5, 0.5);
        }
        result.peaks.push_back(result.grid[idx] + offset * result.step);
    }
    result.resolved = result.peaks.size() == n;
    return result;
}

}  // namespace netprobe
