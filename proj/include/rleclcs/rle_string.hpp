#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rleclcs {

/// One maximal run: `length` copies of `symbol`.
struct Run {
    char symbol;
    std::size_t length;

    friend bool operator==(const Run&, const Run&) = default;
};

/// Thrown by the RLE text parser and the instance reader.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A string held as its run-length encoding.
///
/// Positions are 1-based. For a string of length M with m runs,
/// prefix_sum(p) is the length of the first p runs (prefix_sum(0) == 0)
/// and run_of(i) is the run containing position i, both O(1).
/// Immutable after construction.
class RleString {
public:
    RleString() : prefix_sums_{0}, run_index_{0} {}

    /// Runs must be maximal with positive lengths; throws std::invalid_argument otherwise.
    explicit RleString(std::vector<Run> runs);

    static RleString encode(std::string_view text);

    std::string decode() const;
    RleString reversed() const;

    std::size_t size() const noexcept { return prefix_sums_.back(); }
    std::size_t run_count() const noexcept { return runs_.size(); }
    bool empty() const noexcept { return runs_.empty(); }

    const std::vector<Run>& runs() const noexcept { return runs_; }

    /// Run p, 1-based.
    const Run& run(std::size_t p) const { return runs_[p - 1]; }
    char symbol(std::size_t p) const { return runs_[p - 1].symbol; }

    /// Total length of runs 1..p, for 0 <= p <= m.
    std::size_t prefix_sum(std::size_t p) const { return prefix_sums_[p]; }

    /// Run containing position i, 1 <= i <= M. Throws std::out_of_range.
    std::size_t run_of(std::size_t i) const {
        if (i == 0 || i > size()) {
            throw std::out_of_range("position " + std::to_string(i) + " outside 1.." +
                                    std::to_string(size()));
        }
        return run_index_[i];
    }

    /// Unchecked variant for hot loops (1 <= i <= M).
    std::size_t run_of_unchecked(std::size_t i) const noexcept { return run_index_[i]; }

    /// True iff i == prefix_sum(p) for some 0 <= p <= m.
    bool is_run_end(std::size_t i) const noexcept {
        return i == 0 || (i <= size() && prefix_sums_[run_index_[i]] == i);
    }

    /// Character at position i (1-based, unchecked).
    char at(std::size_t i) const noexcept { return runs_[run_index_[i] - 1].symbol; }

    /// Text form: each run as `<symbol><decimal length>`, e.g. "a5b3a4b2a1".
    std::string to_text() const;

    /// Inverse of to_text. Rejects missing or zero exponents and adjacent equal symbols.
    static RleString parse(std::string_view text);

    friend bool operator==(const RleString& x, const RleString& y) { return x.runs_ == y.runs_; }

private:
    std::vector<Run> runs_;
    std::vector<std::size_t> prefix_sums_;
    std::vector<std::size_t> run_index_;  // run_index_[0] unused
};

/// Appends runs while keeping the result maximal (equal neighbours merge).
class RleBuilder {
public:
    RleBuilder& append(char symbol, std::size_t length);
    RleBuilder& append(const RleString& s);
    RleString build() && { return RleString(std::move(runs_)); }
    const std::vector<Run>& runs() const noexcept { return runs_; }

private:
    std::vector<Run> runs_;
};

}  // namespace rleclcs
