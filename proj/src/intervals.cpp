#include "rleclcs/intervals.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>

namespace rleclcs {

namespace {

struct Counter {
    std::size_t* sink;
    void tick() const noexcept {
        if (sink != nullptr) ++*sink;
    }
};

// Smallest f such that C is a subsequence of A[from..f].
std::optional<std::size_t> forward_search(const RleString& a, const RleString& c, std::size_t from,
                                          Counter steps) {
    const std::size_t m = a.run_count();
    const std::size_t k = c.run_count();
    if (from > a.size()) return std::nullopt;

    std::size_t p = a.run_of_unchecked(from);
    std::size_t avail = a.prefix_sum(p) - from + 1;  // unread characters of run p
    std::size_t q = 1;
    std::size_t rest = c.run(1).length;  // characters of run q still to match

    while (p <= m) {
        steps.tick();
        if (a.symbol(p) != c.symbol(q)) {
            ++p;
            if (p <= m) avail = a.run(p).length;
        } else if (avail >= rest) {
            const std::size_t matched_end = a.prefix_sum(p) - avail + rest;
            if (++q > k) return matched_end;
            // c[q] differs from a[p], so the remainder of run p is useless.
            ++p;
            if (p <= m) avail = a.run(p).length;
            rest = c.run(q).length;
        } else {
            // Run p exhausted mid-run of C; run p+1 has another symbol.
            rest -= avail;
            p += 2;
            if (p <= m) avail = a.run(p).length;
        }
    }
    return std::nullopt;
}

// Largest s such that C is a subsequence of A[s..to]; C must occur in A[1..to].
std::size_t backward_search(const RleString& a, const RleString& c, std::size_t to, Counter steps) {
    std::size_t p = a.run_of_unchecked(to);
    std::size_t avail = to - a.prefix_sum(p - 1);
    std::size_t q = c.run_count();
    std::size_t rest = c.run(q).length;

    for (;;) {
        assert(p >= 1);
        steps.tick();
        if (a.symbol(p) != c.symbol(q)) {
            --p;
            avail = a.run(p).length;
        } else if (avail >= rest) {
            const std::size_t matched_start = a.prefix_sum(p - 1) + avail - rest + 1;
            if (--q == 0) return matched_start;
            --p;
            avail = a.run(p).length;
            rest = c.run(q).length;
        } else {
            rest -= avail;
            p -= 2;
            avail = a.run(p).length;
        }
    }
}

}  // namespace

std::vector<CInterval> minimal_intervals_multirun(const RleString& a, const RleString& c,
                                                  std::size_t* scan_steps) {
    if (c.run_count() < 2) {
        throw std::invalid_argument("multi-run enumeration needs a constraint with at least two runs, got " +
                                    std::to_string(c.run_count()));
    }
    const Counter steps{scan_steps};
    std::vector<CInterval> out;
    std::size_t from = 1;
    while (const auto end = forward_search(a, c, from, steps)) {
        const std::size_t start = backward_search(a, c, *end, steps);
        out.push_back({start, *end});
        from = start + 1;
    }
    return out;
}

std::vector<CInterval> minimal_intervals_singlerun(const RleString& a, const RleString& c) {
    if (c.run_count() != 1) {
        throw std::invalid_argument("single-run enumeration needs a one-run constraint, got " +
                                    std::to_string(c.run_count()) + " runs");
    }
    const char alpha = c.symbol(1);
    const std::size_t k = c.size();

    std::vector<std::size_t> positions;
    for (std::size_t p = 1; p <= a.run_count(); ++p) {
        if (a.symbol(p) != alpha) continue;
        for (std::size_t i = a.prefix_sum(p - 1) + 1; i <= a.prefix_sum(p); ++i) positions.push_back(i);
    }

    std::vector<CInterval> out;
    if (positions.size() < k) return out;
    out.reserve(positions.size() - k + 1);
    for (std::size_t x = 0; x + k <= positions.size(); ++x) out.push_back({positions[x], positions[x + k - 1]});
    return out;
}

std::vector<CInterval> minimal_intervals(const RleString& a, const RleString& c, std::size_t* scan_steps) {
    switch (c.run_count()) {
        case 0:
            return {};
        case 1:
            return minimal_intervals_singlerun(a, c);
        default:
            return minimal_intervals_multirun(a, c, scan_steps);
    }
}

IntervalGroups group_intervals(std::vector<CInterval> intervals, const RleString& a) {
    IntervalGroups groups;
    for (std::size_t x = 0; x < intervals.size(); ++x) {
        const CInterval& cur = intervals[x];
        if (cur.start == 0 || cur.start > cur.end || cur.end > a.size()) {
            throw std::invalid_argument("interval [" + std::to_string(cur.start) + "," +
                                        std::to_string(cur.end) + "] outside 1.." + std::to_string(a.size()));
        }
        if (x == 0) {
            groups.group_starts.push_back(0);
            continue;
        }
        const CInterval& prev = intervals[x - 1];
        if (cur.start <= prev.start || cur.end <= prev.end) {
            throw std::invalid_argument("intervals must have strictly increasing starts and ends (index " +
                                        std::to_string(x) + ")");
        }
        const bool same_class = a.run_of_unchecked(cur.start) == a.run_of_unchecked(prev.start) &&
                                a.run_of_unchecked(cur.end) == a.run_of_unchecked(prev.end) &&
                                cur.start == prev.start + 1 && cur.end == prev.end + 1;
        if (!same_class) groups.group_starts.push_back(x);
    }
    if (!intervals.empty()) groups.group_starts.push_back(intervals.size());
    groups.intervals = std::move(intervals);
    return groups;
}

}  // namespace rleclcs
