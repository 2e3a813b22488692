#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "netprobe/graph.hpp"
#include "netprobe/spectral.hpp"

namespace netprobe {

inline constexpr std::size_t kDefaultSolutionCap = 500000;

// Every degree sequence (canonical descending order) admitted by a
// ConstraintSet, listed in lexicographically descending order.
struct SolutionSet {
    std::vector<DegreeSequence> solutions;
    ConstraintSet constraints;
    bool truncated = false;  // the cap was hit; `solutions` is a prefix
    bool fallback = false;   // partial-sum caps were dropped after an empty search

    std::size_t size() const noexcept { return solutions.size(); }
    bool empty() const noexcept { return solutions.empty(); }
};

// Sum |d_i - d'_i| / sum d_i, kept as an exact ratio.
struct Merit {
    long long deviation = 0;
    long long total = 1;

    double value() const noexcept { return static_cast<double>(deviation) / static_cast<double>(total); }
    bool perfect() const noexcept { return deviation == 0; }

    friend bool operator==(const Merit& a, const Merit& b) noexcept {
        return a.deviation * b.total == b.deviation * a.total;
    }
    friend auto operator<=>(const Merit& a, const Merit& b) noexcept {
        return a.deviation * b.total <=> b.deviation * a.total;
    }
};

struct Estimate {
    DegreeSequence sequence;
    std::optional<Merit> merit;  // set only when the true sequence is known
};

// Treats the square sum S as an integer partition into N squares bounded by
// the degree bounds, carrying the linear sum D along for pruning. Each
// completed partition is kept when it meets D and every partial-sum cap.
// Stops after `cap` solutions and marks the set truncated.
SolutionSet enumerate_solutions(const ConstraintSet& constraints, std::size_t cap = kDefaultSolutionCap);

// enumerate_solutions(); if that yields nothing while partial-sum caps are
// active, retries without them and sets `fallback`.
SolutionSet enumerate_with_fallback(const ConstraintSet& constraints,
                                    std::size_t cap = kDefaultSolutionCap);

// Exhaustive reference: all non-increasing sequences over [1, N-1] filtered
// through satisfies(). No pruning. N <= 12.
SolutionSet brute_force_solutions(const ConstraintSet& constraints);

// Compares the descending-sorted forms of both sequences.
Merit figure_of_merit(const DegreeSequence& truth, const DegreeSequence& candidate);

// Solution with the smallest l1 distance to the element-wise mean of all
// solutions; ties go to the lexicographically smallest sequence.
Estimate select_estimate(const SolutionSet& set);
Estimate select_estimate(const SolutionSet& set, const DegreeSequence& truth);

// Header "# D=<D> S=<S> N=<N> grone_active=<0|1> truncated=<0|1>", then one
// comma-separated descending solution per line.
void write_solutions(std::ostream& out, const SolutionSet& set);

}  // namespace netprobe
