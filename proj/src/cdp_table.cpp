#include "rleclcs/cdp_table.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace rleclcs {

namespace {

void check_range(std::size_t i, std::size_t lo, std::size_t hi, const char* what) {
    if (i < lo || i > hi) {
        throw std::out_of_range(std::string(what) + " index " + std::to_string(i) + " outside " +
                                std::to_string(lo) + ".." + std::to_string(hi));
    }
}

}  // namespace

CompressedDpTable::CompressedDpTable(RleString a, RleString b)
    : a_(std::move(a)),
      b_(std::move(b)),
      rows_((a_.run_count() + 1) * (b_.size() + 1), 0),
      cols_((a_.size() + 1) * (b_.run_count() + 1), 0) {
    const std::size_t big_m = a_.size();
    const std::size_t big_n = b_.size();
    const std::size_t n = b_.run_count();

    for (std::size_t i = 1; i <= big_m; ++i) {
        if (a_.is_run_end(i)) {
            const std::size_t p = a_.run_of_unchecked(i);
            for (std::size_t j = 1; j <= big_n; ++j) row_cell(p, j) = resolve(i, j);
            for (std::size_t q = 1; q <= n; ++q) col_cell(i, q) = row_cell(p, b_.prefix_sum(q));
        } else {
            for (std::size_t q = 1; q <= n; ++q) col_cell(i, q) = resolve(i, b_.prefix_sum(q));
        }
    }
}

// Requires i to end a run of A or j to end a run of B (0 counts as both).
CompressedDpTable::Value CompressedDpTable::stored(std::size_t i, std::size_t j) const noexcept {
    if (a_.is_run_end(i)) {
        const std::size_t p = i == 0 ? 0 : a_.run_of_unchecked(i);
        return rows_[p * (b_.size() + 1) + j];
    }
    const std::size_t q = j == 0 ? 0 : b_.run_of_unchecked(j);
    return cols_[i * (b_.run_count() + 1) + q];
}

// 1 <= i <= M, 1 <= j <= N.
CompressedDpTable::Value CompressedDpTable::resolve(std::size_t i, std::size_t j) const noexcept {
    const std::size_t p = a_.run_of_unchecked(i);
    const std::size_t q = b_.run_of_unchecked(j);
    const std::size_t a_start = a_.prefix_sum(p - 1);
    const std::size_t b_start = b_.prefix_sum(q - 1);
    if (a_.symbol(p) == b_.symbol(q)) {
        const std::size_t d = std::min(i - a_start, j - b_start);
        return stored(i - d, j - d) + static_cast<Value>(d);
    }
    return std::max(stored(a_start, j), stored(i, b_start));
}

CompressedDpTable::Value CompressedDpTable::lookup(std::size_t i, std::size_t j) const {
    check_range(i, 0, a_.size(), "row");
    check_range(j, 0, b_.size(), "column");
    if (i == 0 || j == 0) return 0;
    if (a_.is_run_end(i) || b_.is_run_end(j)) return stored(i, j);
    return resolve(i, j);
}

RleString CompressedDpTable::backtrack(std::size_t i, std::size_t j) const {
    check_range(i, 0, a_.size(), "row");
    check_range(j, 0, b_.size(), "column");
    std::vector<Run> reversed_runs;
    while (i > 0 && j > 0) {
        const std::size_t p = a_.run_of_unchecked(i);
        const std::size_t q = b_.run_of_unchecked(j);
        const std::size_t a_start = a_.prefix_sum(p - 1);
        const std::size_t b_start = b_.prefix_sum(q - 1);
        if (a_.symbol(p) == b_.symbol(q)) {
            const std::size_t d = std::min(i - a_start, j - b_start);
            if (!reversed_runs.empty() && reversed_runs.back().symbol == a_.symbol(p)) {
                reversed_runs.back().length += d;
            } else {
                reversed_runs.push_back({a_.symbol(p), d});
            }
            i -= d;
            j -= d;
        } else if (lookup(a_start, j) >= lookup(i, b_start)) {
            i = a_start;
        } else {
            j = b_start;
        }
    }
    return RleString(std::vector<Run>(reversed_runs.rbegin(), reversed_runs.rend()));
}

void CompressedDpTable::dump_csv(std::ostream& out) const {
    out << "kind,p_or_q,index,value\n";
    for (std::size_t p = 0; p <= a_.run_count(); ++p) {
        for (std::size_t j = 0; j <= b_.size(); ++j) out << "row," << p << ',' << j << ',' << row(p)[j] << '\n';
    }
    for (std::size_t q = 0; q <= b_.run_count(); ++q) {
        for (std::size_t i = 0; i <= a_.size(); ++i) out << "col," << q << ',' << i << ',' << col(i)[q] << '\n';
    }
}

CompressedDpTable build_prefix_cdp(const RleString& a, const RleString& b) {
    return CompressedDpTable(a, b);
}

SuffixDpTable::SuffixDpTable(const RleString& a, const RleString& b)
    : reversed_(a.reversed(), b.reversed()) {}

CompressedDpTable::Value SuffixDpTable::lookup(std::size_t i, std::size_t j) const {
    check_range(i, 1, size_a() + 1, "suffix row");
    check_range(j, 1, size_b() + 1, "suffix column");
    return reversed_.lookup(size_a() + 1 - i, size_b() + 1 - j);
}

RleString SuffixDpTable::backtrack(std::size_t i, std::size_t j) const {
    check_range(i, 1, size_a() + 1, "suffix row");
    check_range(j, 1, size_b() + 1, "suffix column");
    return reversed_.backtrack(size_a() + 1 - i, size_b() + 1 - j).reversed();
}

SuffixDpTable build_suffix_cdp(const RleString& a, const RleString& b) {
    return SuffixDpTable(a, b);
}

}  // namespace rleclcs
