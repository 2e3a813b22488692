#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netprobe/graph.hpp"
#include "netprobe/rng.hpp"

namespace netprobe {

// Laplace eigenvalues, ascending.
struct Spectrum {
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double smallest() const { return values.front(); }
    double largest() const { return values.back(); }
};

// Symmetric eigensolve; values within 1e-9 of zero are snapped to 0.
// Throws InvalidArgument for a non-symmetric matrix.
Spectrum laplace_spectrum(const Eigen::MatrixXd& laplacian);
Spectrum laplace_spectrum(const LaplaceMatrix& laplacian);

// Slack used when turning a real spectrum into integer constraints.
struct ConstraintTolerance {
    // Largest accepted |sum - D| and |sum - S| before the spectrum is declared
    // inconsistent. 0.25 for exact spectra; >= 1 always accepts the nearest
    // even integer (probe-noise mode).
    double residue = 0.25;
    // Added to the real-valued degree and partial-sum bounds before rounding.
    double bound = 0.25;
};

// Integer constraints every degree sequence with the given spectrum obeys:
//   sum d_i            = D
//   sum d_i^2          = S
//   sum of the m largest d_i <= partial_sum_caps[m-1]   (m = 1..N-1)
//   d_min_bound <= d_i <= d_max_bound
struct ConstraintSet {
    int n = 0;
    long long total_degree = 0;   // D
    long long total_squared = 0;  // S
    std::vector<long long> partial_sum_caps;
    int d_min_bound = 1;
    int d_max_bound = 1;
    bool grone_active = true;

    // Distance of the raw sums from the chosen integers.
    double degree_residue = 0.0;
    double squared_residue = 0.0;

    // Same constraints with the partial-sum caps switched off.
    ConstraintSet without_partial_sums() const;
};

// Throws InconsistentSpectrum when the sums do not round to admissible even
// integers within tolerance.
ConstraintSet build_constraints(const Spectrum& spectrum, ConstraintTolerance tol = {});

// True when `degrees` (any order) satisfies every active constraint.
bool satisfies(const ConstraintSet& c, const DegreeSequence& degrees);

// lambda_i = (Omega_i^2 - omega0^2) / g, clipped at 0. Without omega0 the
// smallest frequency is used. Throws InvalidArgument when a frequency lies
// below omega0 by more than `tolerance`.
Spectrum frequencies_to_spectrum(std::span<const double> frequencies, std::optional<double> omega0,
                                 double g, double tolerance = 1e-9);

// Omega_i = sqrt(omega0^2 + g lambda_i).
std::vector<double> spectrum_to_frequencies(const Spectrum& spectrum, double omega0, double g);

// v -> v (1 + u), u ~ U[-epsilon, epsilon], independently per entry.
std::vector<double> perturb_values(std::span<const double> values, double epsilon, Rng& rng);

// One eigenvalue per line, plain decimal text. Reading sorts ascending.
Spectrum read_spectrum(std::istream& in);
Spectrum read_spectrum_file(const std::string& path);
void write_spectrum(std::ostream& out, const Spectrum& spectrum);

}  // namespace netprobe
