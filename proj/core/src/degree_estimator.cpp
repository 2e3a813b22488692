#include "netprobe/degree_estimator.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "netprobe/error.hpp"

namespace netprobe {
namespace {

class Enumerator {
public:
    Enumerator(const ConstraintSet& c, std::size_t cap, SolutionSet& out)
        : c_(c), cap_(cap), out_(out), current_(static_cast<std::size_t>(c.n)) {}

    void run() { descend(0, c_.d_max_bound, c_.total_degree, c_.total_squared, 0); }

private:
    // Can `count` values in [lo, hi] reach linear sum `sum` and square sum `sq`?
    static bool feasible(long long count, long long lo, long long hi, long long sum, long long sq) {
        if (count == 0) return sum == 0 && sq == 0;
        if (sum < count * lo || sum > count * hi) return false;
        if (sq < count * lo * lo || sq > count * hi * hi) return false;
        if (sq * count < sum * sum) return false;          // Cauchy-Schwarz floor
        if (sq > (lo + hi) * sum - count * lo * hi) return false;  // (x-lo)(hi-x) >= 0
        return true;
    }

    // Returns false once the cap is exhausted.
    bool descend(int pos, int hi, long long sum_left, long long sq_left, long long prefix) {
        const int n = c_.n;
        const long long left_after = n - pos - 1;
        const int lo = c_.d_min_bound;
        for (int v = hi; v >= lo; --v) {
            const long long remaining = left_after + 1;
            // Smaller v only makes these worse.
            if (sum_left > remaining * v || sq_left > remaining * v * v) break;
            const long long s = sum_left - v;
            const long long q = sq_left - static_cast<long long>(v) * v;
            if (s < 0 || q < 0) continue;
            const long long p = prefix + v;
            if (c_.grone_active && pos < n - 1 && p > c_.partial_sum_caps[pos]) continue;
            if (!feasible(left_after, lo, v, s, q)) continue;
            current_[pos] = v;
            if (pos == n - 1) {
                if (out_.solutions.size() >= cap_) {
                    out_.truncated = true;
                    return false;
                }
                out_.solutions.push_back(DegreeSequence{current_});
                continue;
            }
            if (!descend(pos + 1, v, s, q, p)) return false;
        }
        return true;
    }

    const ConstraintSet& c_;
    std::size_t cap_;
    SolutionSet& out_;
    std::vector<int> current_;
};

}  // namespace

SolutionSet enumerate_solutions(const ConstraintSet& constraints, std::size_t cap) {
    if (constraints.n < 1) throw InvalidArgument("constraint set has no nodes");
    SolutionSet set;
    set.constraints = constraints;
    Enumerator(constraints, cap, set).run();
    return set;
}

SolutionSet enumerate_with_fallback(const ConstraintSet& constraints, std::size_t cap) {
    SolutionSet set = enumerate_solutions(constraints, cap);
    if (set.empty() && constraints.grone_active) {
        set = enumerate_solutions(constraints.without_partial_sums(), cap);
        set.fallback = true;
    }
    return set;
}

SolutionSet brute_force_solutions(const ConstraintSet& constraints) {
    const int n = constraints.n;
    if (n < 2 || n > 12) throw InvalidArgument("brute force supports 2 <= N <= 12");
    SolutionSet set;
    set.constraints = constraints;

    // Odometer over non-increasing sequences with entries in [1, N-1].
    std::vector<int> seq(static_cast<std::size_t>(n), n - 1);
    while (true) {
        DegreeSequence candidate{seq};
        if (satisfies(constraints, candidate)) set.solutions.push_back(std::move(candidate));
        int i = n - 1;
        while (i >= 0 && seq[i] == 1) --i;
        if (i < 0) break;
        --seq[i];
        for (int j = i + 1; j < n; ++j) seq[j] = seq[i];
    }
    std::sort(set.solutions.begin(), set.solutions.end(), std::greater<>{});
    return set;
}

Merit figure_of_merit(const DegreeSequence& truth, const DegreeSequence& candidate) {
    if (truth.size() != candidate.size())
        throw InvalidArgument("figure of merit needs sequences of equal length");
    const DegreeSequence a = truth.sorted_descending();
    const DegreeSequence b = candidate.sorted_descending();
    Merit m;
    m.total = a.sum();
    if (m.total <= 0) throw InvalidArgument("figure of merit needs a positive total degree");
    m.deviation = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m.deviation += std::abs(a.values[i] - b.values[i]);
    return m;
}

Estimate select_estimate(const SolutionSet& set) {
    if (set.empty()) throw InvalidArgument("cannot select an estimate from an empty solution set");
    const std::size_t n = set.solutions.front().size();
    const auto count = static_cast<long long>(set.size());

    // Compare count * (l1 distance to mean) to stay in integers.
    std::vector<long long> column_sum(n, 0);
    for (const DegreeSequence& s : set.solutions)
        for (std::size_t i = 0; i < n; ++i) column_sum[i] += s.values[i];

    const DegreeSequence* best = nullptr;
    long long best_distance = 0;
    for (const DegreeSequence& s : set.solutions) {
        long long dist = 0;
        for (std::size_t i = 0; i < n; ++i) dist += std::llabs(count * s.values[i] - column_sum[i]);
        if (!best || dist < best_distance || (dist == best_distance && s < *best)) {
            best = &s;
            best_distance = dist;
        }
    }
    return Estimate{*best, std::nullopt};
}

Estimate select_estimate(const SolutionSet& set, const DegreeSequence& truth) {
    Estimate e = select_estimate(set);
    e.merit = figure_of_merit(truth, e.sequence);
    return e;
}

void write_solutions(std::ostream& out, const SolutionSet& set) {
    const ConstraintSet& c = set.constraints;
    out << "# D=" << c.total_degree << " S=" << c.total_squared << " N=" << c.n
        << " grone_active=" << (c.grone_active ? 1 : 0) << " truncated=" << (set.truncated ? 1 : 0)
        << '\n';
    for (const DegreeSequence& s : set.solutions) {
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s.values[i];
        out << '\n';
    }
}

}  // namespace netprobe
