#include "rleclcs/solver.hpp"

#include <tuple>

namespace rleclcs {

namespace {

class PairScorer {
public:
    PairScorer(const CompressedDpTable& prefix, const SuffixDpTable& suffix, std::size_t* evals)
        : prefix_(prefix), suffix_(suffix), evals_(evals) {}

    void offer(const CInterval& x, const CInterval& y) {
        if (evals_ != nullptr) ++*evals_;
        const std::size_t sum = prefix_.lookup(x.start - 1, y.start - 1) + suffix_.lookup(x.end + 1, y.end + 1);
        if (!best_ || sum > best_->sum ||
            (sum == best_->sum &&
             std::tie(x.start, y.start) < std::tie(best_->in_a.start, best_->in_b.start))) {
            best_ = BestPair{sum, x, y};
        }
    }

    std::optional<BestPair> result() const { return best_; }

private:
    const CompressedDpTable& prefix_;
    const SuffixDpTable& suffix_;
    std::size_t* evals_;
    std::optional<BestPair> best_;
};

}  // namespace

std::optional<BestPair> solve_pairs_multirun(const std::vector<CInterval>& in_a, const std::vector<CInterval>& in_b,
                                             const CompressedDpTable& prefix, const SuffixDpTable& suffix,
                                             std::size_t* pair_evals) {
    PairScorer scorer(prefix, suffix, pair_evals);
    for (const CInterval& x : in_a) {
        for (const CInterval& y : in_b) scorer.offer(x, y);
    }
    return scorer.result();
}

std::optional<BestPair> solve_pairs_singlerun(const IntervalGroups& groups_a, const IntervalGroups& groups_b,
                                              const CompressedDpTable& prefix, const SuffixDpTable& suffix,
                                              std::size_t* pair_evals) {
    PairScorer scorer(prefix, suffix, pair_evals);
    for (std::size_t h = 0; h < groups_a.group_count(); ++h) {
        const CInterval& min_a = groups_a.group_min(h);
        for (std::size_t hb = 0; hb < groups_b.group_count(); ++hb) {
            const CInterval& min_b = groups_b.group_min(hb);
            for (std::size_t y = groups_b.group_starts[hb]; y < groups_b.group_starts[hb + 1]; ++y) {
                scorer.offer(min_a, groups_b.intervals[y]);
            }
            for (std::size_t x = groups_a.group_starts[h] + 1; x < groups_a.group_starts[h + 1]; ++x) {
                scorer.offer(groups_a.intervals[x], min_b);
            }
        }
    }
    return scorer.result();
}

RleString reconstruct(const BestPair& best, const CompressedDpTable& prefix, const SuffixDpTable& suffix,
                      const RleString& c) {
    RleBuilder out;
    out.append(prefix.backtrack(best.in_a.start - 1, best.in_b.start - 1));
    out.append(c);
    out.append(suffix.backtrack(best.in_a.end + 1, best.in_b.end + 1));
    return std::move(out).build();
}

SolveReport solve(const RleString& a, const RleString& b, const RleString& c, bool reconstruct_answer) {
    SolveReport report;
    SolveCounters& counters = report.counters;

    const CompressedDpTable prefix = build_prefix_cdp(a, b);
    counters.cdp_cells = prefix.stored_cells();

    if (c.empty()) {
        report.length = prefix.lookup(a.size(), b.size());
        if (reconstruct_answer) report.answer = prefix.backtrack(a.size(), b.size());
        return report;
    }

    const SuffixDpTable suffix = build_suffix_cdp(a, b);
    std::optional<BestPair> best;
    if (c.run_count() > 1) {
        const auto in_a = minimal_intervals_multirun(a, c, &counters.scan_steps);
        const auto in_b = minimal_intervals_multirun(b, c, &counters.scan_steps);
        counters.intervals_a = in_a.size();
        counters.intervals_b = in_b.size();
        best = solve_pairs_multirun(in_a, in_b, prefix, suffix, &counters.pair_evals);
    } else {
        const IntervalGroups groups_a = group_intervals(minimal_intervals_singlerun(a, c), a);
        const IntervalGroups groups_b = group_intervals(minimal_intervals_singlerun(b, c), b);
        counters.intervals_a = groups_a.intervals.size();
        counters.intervals_b = groups_b.intervals.size();
        counters.groups_a = groups_a.group_count();
        counters.groups_b = groups_b.group_count();
        best = solve_pairs_singlerun(groups_a, groups_b, prefix, suffix, &counters.pair_evals);
    }

    if (!best) return report;
    report.length = best->sum + c.size();
    if (reconstruct_answer) report.answer = reconstruct(*best, prefix, suffix, c);
    return report;
}

}  // namespace rleclcs
