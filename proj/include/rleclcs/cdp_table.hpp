#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rleclcs/rle_string.hpp"

namespace rleclcs {

/// Compressed LCS dynamic-programming table of two run-length encoded strings.
///
/// Only the rows ending a run of A and the columns ending a run of B are
/// stored: an (m+1) x (N+1) row table and an (M+1) x (n+1) column table,
/// row/column 0 being zero sentinels. Any other cell L(i,j) of the full
/// table is resolved in O(1) from at most two stored cells:
///
///   - A[i] and B[j] in runs of the same symbol: L(i,j) = L(i-d, j-d) + d,
///     d = distance back to the nearer run start;
///   - different symbols: L(i,j) = max(L(start_p - 1, j), L(i, start_q - 1)).
///
/// Both targets lie on a stored row or column. Construction fills the
/// stored cells with the same two rules, in increasing i then j.
class CompressedDpTable {
public:
    using Value = std::uint32_t;

    CompressedDpTable(RleString a, RleString b);

    const RleString& a() const noexcept { return a_; }
    const RleString& b() const noexcept { return b_; }

    /// LCS length of A[1..i] and B[1..j]; 0 <= i <= M, 0 <= j <= N. Throws std::out_of_range.
    Value lookup(std::size_t i, std::size_t j) const;

    /// row(p)[j] = L(prefix_sum_a(p), j), 0 <= p <= m.
    const Value* row(std::size_t p) const noexcept { return &rows_[p * (b_.size() + 1)]; }
    /// col(i)[q] = L(i, prefix_sum_b(q)), 0 <= i <= M.
    const Value* col(std::size_t i) const noexcept { return &cols_[i * (b_.run_count() + 1)]; }

    /// Stored cells, (m+1)(N+1) + (M+1)(n+1).
    std::size_t stored_cells() const noexcept { return rows_.size() + cols_.size(); }

    /// RLE of one LCS of A[1..i] and B[1..j], in O(m + n) run steps.
    /// On a mismatch tie the walk shortens A first.
    RleString backtrack(std::size_t i, std::size_t j) const;

    /// CSV of stored cells: `kind,p_or_q,index,value` with kind row|col.
    void dump_csv(std::ostream& out) const;

private:
    Value stored(std::size_t i, std::size_t j) const noexcept;
    Value resolve(std::size_t i, std::size_t j) const noexcept;
    Value& row_cell(std::size_t p, std::size_t j) noexcept { return rows_[p * (b_.size() + 1) + j]; }
    Value& col_cell(std::size_t i, std::size_t q) noexcept { return cols_[i * (b_.run_count() + 1) + q]; }

    RleString a_;
    RleString b_;
    std::vector<Value> rows_;
    std::vector<Value> cols_;
};

/// Prefix table of (a, b); alias for the constructor.
CompressedDpTable build_prefix_cdp(const RleString& a, const RleString& b);

/// Suffix LCS lengths L^suf(i,j) = LCS(A[i..M], B[j..N]) via the prefix table of the reversed strings.
class SuffixDpTable {
public:
    SuffixDpTable(const RleString& a, const RleString& b);

    std::size_t size_a() const noexcept { return reversed_.a().size(); }
    std::size_t size_b() const noexcept { return reversed_.b().size(); }

    /// 1 <= i <= M+1, 1 <= j <= N+1; the M+1 / N+1 sentinels are empty suffixes.
    CompressedDpTable::Value lookup(std::size_t i, std::size_t j) const;

    /// RLE of one LCS of A[i..M] and B[j..N].
    RleString backtrack(std::size_t i, std::size_t j) const;

    const CompressedDpTable& reversed_table() const noexcept { return reversed_; }
    std::size_t stored_cells() const noexcept { return reversed_.stored_cells(); }

private:
    CompressedDpTable reversed_;
};

SuffixDpTable build_suffix_cdp(const RleString& a, const RleString& b);

}  // namespace rleclcs
