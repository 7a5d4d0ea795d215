#pragma once

#include <cstddef>
#include <vector>

#include "rleclcs/rle_string.hpp"

namespace rleclcs {

/// Closed 1-based interval [start, end] of a string.
struct CInterval {
    std::size_t start;
    std::size_t end;

    friend bool operator==(const CInterval&, const CInterval&) = default;
    friend auto operator<=>(const CInterval&, const CInterval&) = default;
};

/// Minimal C-intervals of a string partitioned by (start run, end run).
///
/// Group h covers intervals[group_starts[h] .. group_starts[h+1]) and each
/// group is a diagonal run {[s, f], [s+1, f+1], ...}.
struct IntervalGroups {
    std::vector<CInterval> intervals;
    std::vector<std::size_t> group_starts;  // group_count() + 1 entries, last == intervals.size()

    std::size_t group_count() const noexcept { return group_starts.empty() ? 0 : group_starts.size() - 1; }
    std::size_t group_size(std::size_t h) const { return group_starts[h + 1] - group_starts[h]; }
    const CInterval& group_min(std::size_t h) const { return intervals[group_starts[h]]; }
};

/// Every minimal C-interval of `a` when C has at least two runs.
///
/// Alternates a forward run-greedy search (smallest f with C a subsequence
/// of A[s_prev+1..f]) and a backward one (largest s with C a subsequence of
/// A[s..f]). Each scanned run costs O(1). `scan_steps`, when given, is
/// incremented once per run visited. Throws std::invalid_argument if C has
/// fewer than two runs.
std::vector<CInterval> minimal_intervals_multirun(const RleString& a, const RleString& c,
                                                  std::size_t* scan_steps = nullptr);

/// Every minimal C-interval of `a` when C = alpha^K: the i-th interval spans
/// the i-th to the (i+K-1)-th occurrence of alpha. Throws std::invalid_argument
/// unless C is exactly one run.
std::vector<CInterval> minimal_intervals_singlerun(const RleString& a, const RleString& c);

/// Dispatches on the run count of C. Empty C yields no intervals.
std::vector<CInterval> minimal_intervals(const RleString& a, const RleString& c,
                                         std::size_t* scan_steps = nullptr);

/// Groups intervals that start in the same run and end in the same run of `a`.
/// Input must have strictly increasing starts and ends (std::invalid_argument otherwise).
IntervalGroups group_intervals(std::vector<CInterval> intervals, const RleString& a);

}  // namespace rleclcs
