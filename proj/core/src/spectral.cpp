#include "netprobe/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "netprobe/error.hpp"

namespace netprobe {
namespace {

constexpr double kZeroSnap = 1e-9;

long long nearest_even(double x) { return 2 * std::llround(x / 2.0); }

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

}  // namespace

Spectrum laplace_spectrum(const Eigen::MatrixXd& laplacian) {
    if (laplacian.rows() != laplacian.cols()) throw InvalidArgument("Laplace matrix must be square");
    const double scale = std::max(1.0, laplacian.cwiseAbs().maxCoeff());
    if ((laplacian - laplacian.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw InvalidArgument("Laplace matrix must be symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("symmetric eigensolve failed");
    Spectrum s;
    s.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + laplacian.rows());
    std::sort(s.values.begin(), s.values.end());
    for (double& v : s.values)
        if (std::abs(v) < kZeroSnap) v = 0.0;
    return s;
}

Spectrum laplace_spectrum(const LaplaceMatrix& laplacian) { return laplace_spectrum(laplacian.matrix()); }

ConstraintSet ConstraintSet::without_partial_sums() const {
    ConstraintSet c = *this;
    c.grone_active = false;
    return c;
}

ConstraintSet build_constraints(const Spectrum& spectrum, ConstraintTolerance tol) {
    const int n = static_cast<int>(spectrum.size());
    if (n < 2) throw InvalidArgument("constraints need a spectrum of at least two values");
    if (!std::is_sorted(spectrum.values.begin(), spectrum.values.end()))
        throw InvalidArgument("spectrum must be sorted ascending");

    double sum = 0.0, sum_sq_minus = 0.0;
    for (double l : spectrum.values) {
        sum += l;
        sum_sq_minus += l * l - l;
    }
    if (!std::isfinite(sum) || !std::isfinite(sum_sq_minus))
        throw InconsistentSpectrum("spectrum contains non-finite values");

    ConstraintSet c;
    c.n = n;
    c.total_degree = nearest_even(sum);
    c.total_squared = nearest_even(sum_sq_minus);
    c.degree_residue = std::abs(sum - static_cast<double>(c.total_degree));
    c.squared_residue = std::abs(sum_sq_minus - static_cast<double>(c.total_squared));
    if (c.degree_residue > tol.residue)
        throw InconsistentSpectrum("sum of eigenvalues " + fmt(sum) +
                                   " is not within tolerance of an even integer");
    if (c.squared_residue > tol.residue)
        throw InconsistentSpectrum("sum of lambda^2 - lambda " + fmt(sum_sq_minus) +
                                   " is not within tolerance of an even integer");

    const long long nn = n;
    if (c.total_degree < 2 * (nn - 1) || c.total_degree > nn * (nn - 1))
        throw InconsistentSpectrum("total degree " + std::to_string(c.total_degree) +
                                   " outside [2(N-1), N(N-1)] for N=" + std::to_string(n));
    // Cauchy-Schwarz and d >= 1 bound the square sum from both sides.
    if (c.total_squared * nn < c.total_degree * c.total_degree || c.total_squared < c.total_degree)
        throw InconsistentSpectrum("sum of squared degrees " + std::to_string(c.total_squared) +
                                   " incompatible with total degree " + std::to_string(c.total_degree));

    // Sum of the m largest degrees <= sum of the m largest eigenvalues - 1.
    c.partial_sum_caps.resize(static_cast<std::size_t>(n - 1));
    double top = 0.0;
    for (int m = 1; m < n; ++m) {
        top += spectrum.values[static_cast<std::size_t>(n - m)];
        c.partial_sum_caps[m - 1] = static_cast<long long>(std::floor(top - 1.0 + tol.bound));
    }
    // Rounding must not break the monotone-cap invariant nor exceed D - 1.
    for (int m = 1; m < n - 1; ++m)
        c.partial_sum_caps[m] = std::max(c.partial_sum_caps[m], c.partial_sum_caps[m - 1]);
    c.partial_sum_caps.back() = std::min(c.partial_sum_caps.back(), c.total_degree - 1);

    // Largest eigenvalue >= max degree + 1 (any graph with an edge);
    // algebraic connectivity <= min degree (any non-complete graph; the
    // complete graph has lambda_2 = N and the clamp yields N-1).
    const double lambda_max = spectrum.largest();
    const double lambda_2 = spectrum.values[1];
    c.d_max_bound = static_cast<int>(
        std::clamp<double>(std::floor(lambda_max - 1.0 + tol.bound), 1.0, n - 1.0));
    c.d_min_bound = static_cast<int>(std::clamp<double>(std::ceil(lambda_2 - tol.bound), 1.0, n - 1.0));
    if (c.d_min_bound > c.d_max_bound)
        throw InconsistentSpectrum("degree bounds are empty: min " + std::to_string(c.d_min_bound) +
                                   " > max " + std::to_string(c.d_max_bound));
    return c;
}

bool satisfies(const ConstraintSet& c, const DegreeSequence& degrees) {
    if (static_cast<int>(degrees.size()) != c.n) return false;
    DegreeSequence sorted = degrees.sorted_descending();
    long long sum = 0, sq = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const int d = sorted.values[i];
        if (d < c.d_min_bound || d > c.d_max_bound) return false;
        sum += d;
        sq += static_cast<long long>(d) * d;
        if (c.grone_active && i + 1 < sorted.size() && sum > c.partial_sum_caps[i]) return false;
    }
    return sum == c.total_degree && sq == c.total_squared;
}

Spectrum frequencies_to_spectrum(std::span<const double> frequencies, std::optional<double> omega0,
                                 double g, double tolerance) {
    if (frequencies.empty()) throw InvalidArgument("no frequencies given");
    if (!(g > 0.0)) throw InvalidArgument("coupling constant g must be positive");
    std::vector<double> f(frequencies.begin(), frequencies.end());
    std::sort(f.begin(), f.end());
    const double w0 = omega0.value_or(f.front());
    if (!(w0 > 0.0)) throw InvalidArgument("bare frequency omega0 must be positive");
    if (f.front() < w0 - tolerance)
        throw InvalidArgument("frequency " + fmt(f.front()) + " lies below omega0 = " + fmt(w0));

    Spectrum s;
    s.values.reserve(f.size());
    for (double w : f) s.values.push_back(std::max(0.0, (w * w - w0 * w0) / g));
    return s;
}

std::vector<double> spectrum_to_frequencies(const Spectrum& spectrum, double omega0, double g) {
    std::vector<double> out;
    out.reserve(spectrum.size());
    for (double l : spectrum.values) out.push_back(std::sqrt(omega0 * omega0 + g * std::max(0.0, l)));
    return out;
}

std::vector<double> perturb_values(std::span<const double> values, double epsilon, Rng& rng) {
    if (epsilon < 0.0) throw InvalidArgument("noise magnitude must be non-negative");
    std::vector<double> out(values.begin(), values.end());
    if (epsilon == 0.0) return out;
    std::uniform_real_distribution<double> u(-epsilon, epsilon);
    for (double& v : out) v *= 1.0 + u(rng);
    return out;
}

Spectrum read_spectrum(std::istream& in) {
    Spectrum s;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        std::istringstream ls(line);
        double v = 0.0;
        std::string rest;
        if (!(ls >> v) || (ls >> rest) || !std::isfinite(v))
            throw ParseError("spectrum: line " + std::to_string(lineno) + " is not a single number");
        s.values.push_back(v);
    }
    if (s.values.empty()) throw ParseError("spectrum: no values");
    std::sort(s.values.begin(), s.values.end());
    return s;
}

Spectrum read_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_spectrum(in);
}

void write_spectrum(std::ostream& out, const Spectrum& spectrum) {
    const auto old = out.precision(std::numeric_limits<double>::max_digits10);
    for (double v : spectrum.values) out << v << '\n';
    out.precision(old);
}

}  // namespace netprobe
