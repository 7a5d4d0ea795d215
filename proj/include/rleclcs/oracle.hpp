#pragma once

// Reference implementations on plain strings. They share no code with the
// run-length path and serve as ground truth for tests and benchmarks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rleclcs/intervals.hpp"

namespace rleclcs::oracle {

/// Full (M+1) x (N+1) LCS table.
class DpTable {
public:
    DpTable(std::size_t rows, std::size_t cols) : cols_(cols + 1), cells_((rows + 1) * (cols + 1), 0) {}

    std::uint32_t operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
    std::uint32_t& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

    std::size_t rows() const noexcept { return cells_.size() / cols_ - 1; }
    std::size_t cols() const noexcept { return cols_ - 1; }

private:
    std::size_t cols_;
    std::vector<std::uint32_t> cells_;
};

/// table(i, j) = LCS length of a[1..i], b[1..j].
DpTable naive_lcs(std::string_view a, std::string_view b);

/// table(i, j) = LCS length of a[i..M], b[j..N], for 1 <= i <= M+1, 1 <= j <= N+1.
/// Row/column 0 are unused.
DpTable naive_suffix_lcs(std::string_view a, std::string_view b);

bool is_subsequence(std::string_view x, std::string_view y);
bool contains_substring(std::string_view x, std::string_view c);

/// Minimal C-intervals by checking the definition at every (s, f).
std::vector<CInterval> naive_minimal_intervals(std::string_view a, std::string_view c);

/// Quadratic-time minimal intervals: the greedy right-minimal end f(s) for each
/// start, kept when f(s+1) > f(s). Used where the definitional check is too slow.
std::vector<CInterval> scan_minimal_intervals(std::string_view a, std::string_view c);

/// O(MN) reference STR-IC-LCS length: max over minimal-interval pairs of
/// prefix LCS + suffix LCS + |C|. Empty C gives the plain LCS length.
std::optional<std::size_t> deorowicz_str_ic_lcs(std::string_view a, std::string_view b, std::string_view c);

inline constexpr std::size_t kExhaustiveLimit = 15;

/// Tries every subsequence of `a`. Throws std::invalid_argument if |a| > kExhaustiveLimit.
std::optional<std::size_t> exhaustive_str_ic_lcs(std::string_view a, std::string_view b, std::string_view c);

}  // namespace rleclcs::oracle
