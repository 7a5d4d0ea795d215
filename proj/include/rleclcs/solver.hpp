#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rleclcs/cdp_table.hpp"
#include "rleclcs/intervals.hpp"
#include "rleclcs/rle_string.hpp"

namespace rleclcs {

/// Instrumentation collected during a solve. Exact counts, not estimates.
struct SolveCounters {
    std::size_t cdp_cells = 0;    // stored cells of one compressed table
    std::size_t pair_evals = 0;   // interval pairs evaluated
    std::size_t scan_steps = 0;   // runs visited by the multi-run interval scans (A and B)
    std::size_t intervals_a = 0;  // l
    std::size_t intervals_b = 0;  // l'
    std::size_t groups_a = 0;     // g (single-run constraint only)
    std::size_t groups_b = 0;     // g'

    friend bool operator==(const SolveCounters&, const SolveCounters&) = default;
};

struct SolveReport {
    std::optional<std::size_t> length;  // empty: no string contains C and is common to A and B
    std::optional<RleString> answer;    // only with reconstruction and a solution
    SolveCounters counters;
};

/// A maximizing pair of minimal C-intervals and its prefix + suffix LCS sum.
struct BestPair {
    std::size_t sum;
    CInterval in_a;
    CInterval in_b;
};

/// Evaluates every pair. Ties keep the lexicographically smallest (start in A, start in B).
std::optional<BestPair> solve_pairs_multirun(const std::vector<CInterval>& in_a, const std::vector<CInterval>& in_b,
                                             const CompressedDpTable& prefix, const SuffixDpTable& suffix,
                                             std::size_t* pair_evals = nullptr);

/// Per group pair, evaluates the smallest member of each group against every
/// member of the other group. Pair sums are constant along diagonals within a
/// group pair, so this reaches the all-pairs maximum with the same tie-break.
std::optional<BestPair> solve_pairs_singlerun(const IntervalGroups& groups_a, const IntervalGroups& groups_b,
                                              const CompressedDpTable& prefix, const SuffixDpTable& suffix,
                                              std::size_t* pair_evals = nullptr);

/// Assembles X C Y from the two backtracks around the chosen pair, merging boundary runs.
RleString reconstruct(const BestPair& best, const CompressedDpTable& prefix, const SuffixDpTable& suffix,
                      const RleString& c);

/// Length (and optionally one instance) of a longest common subsequence of
/// A and B that contains C as a substring, in O(mN + nM) time.
SolveReport solve(const RleString& a, const RleString& b, const RleString& c, bool reconstruct_answer = false);

}  // namespace rleclcs
