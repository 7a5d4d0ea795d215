#pragma once

// Randomized verification and benchmarking used by the CLI.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rleclcs/instance.hpp"
#include "rleclcs/solver.hpp"

namespace rleclcs {

using LengthSolver = std::function<std::optional<std::size_t>(const Instance&)>;

/// The production solver as a LengthSolver.
std::optional<std::size_t> solve_length(const Instance& inst);

struct VerifyConfig {
    std::size_t trials = 1000;
    std::size_t max_len = 40;
    std::uint64_t seed = 1;
};

struct VerifyResult {
    std::size_t solver_checked = 0;
    std::size_t solver_failed = 0;  // solver vs O(MN) reference
    std::size_t oracle_checked = 0;
    std::size_t oracle_failed = 0;  // O(MN) reference vs exhaustive search
    std::optional<Instance> first_failure;
    std::string first_failure_kind;

    bool ok() const noexcept { return solver_failed == 0 && oracle_failed == 0; }
};

/// Compares `solver` with the O(MN) reference on `trials` random triples of
/// length <= max_len, then the reference with exhaustive search on `trials`
/// triples of length <= min(max_len, 12).
VerifyResult run_verification(const VerifyConfig& config, const LengthSolver& solver = solve_length);

struct BenchConfig {
    std::vector<std::size_t> sizes{500, 1000, 2000};
    std::vector<double> compressibility{0.01, 0.1, 1.0};  // runs per character, m / M
    std::size_t trials = 1;
    std::size_t constraint_len = 4;
    std::size_t alphabet = 4;
    std::uint64_t seed = 1;
    bool run_oracle = true;
};

struct BenchRow {
    std::size_t big_m = 0, big_n = 0, m = 0, n = 0, k = 0, k_runs = 0, trial = 0;
    std::uint64_t solver_ns = 0;
    std::uint64_t oracle_ns = 0;
    SolveCounters counters;
    std::optional<std::size_t> solver_length;
    std::optional<std::size_t> oracle_length;
    bool oracle_ran = false;
};

/// Each (size, compressibility, trial) yields two rows: a multi-run and a single-run constraint.
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Counter bounds and oracle agreement for one row; empty when all hold.
std::optional<std::string> check_bench_row(const BenchRow& row);

/// Upper bound on multi-run scan steps for strings with m and n runs: 4((m + n)K + m + n).
std::size_t scan_step_budget(std::size_t m, std::size_t n, std::size_t k);

}  // namespace rleclcs
