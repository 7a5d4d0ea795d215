#include "rleclcs/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "rleclcs/generate.hpp"
#include "rleclcs/oracle.hpp"

namespace rleclcs {

namespace {

constexpr std::size_t kExhaustiveLen = 12;

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point since) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - since).count());
}

std::string describe(const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("none");
}

}  // namespace

std::optional<std::size_t> solve_length(const Instance& inst) {
    return solve(inst.a, inst.b, inst.c).length;
}

VerifyResult run_verification(const VerifyConfig& config, const LengthSolver& solver) {
    VerifyResult result;
    Rng rng(config.seed);

    auto record_failure = [&](const Instance& inst, std::string kind) {
        if (!result.first_failure) {
            result.first_failure = inst;
            result.first_failure_kind = std::move(kind);
        }
    };

    const TripleShape shape{config.max_len, 8, 3};
    for (std::size_t t = 0; t < config.trials; ++t) {
        const Instance inst = random_triple(shape, rng);
        const auto expected = oracle::deorowicz_str_ic_lcs(inst.a.decode(), inst.b.decode(), inst.c.decode());
        const auto got = solver(inst);
        ++result.solver_checked;
        if (got != expected) {
            ++result.solver_failed;
            record_failure(inst, "solver=" + describe(got) + " reference=" + describe(expected));
        }
    }

    const TripleShape small{std::min(config.max_len, kExhaustiveLen), 8, 3};
    for (std::size_t t = 0; t < config.trials; ++t) {
        const Instance inst = random_triple(small, rng);
        const std::string a = inst.a.decode();
        const std::string b = inst.b.decode();
        const std::string c = inst.c.decode();
        const auto reference = oracle::deorowicz_str_ic_lcs(a, b, c);
        const auto exhaustive = oracle::exhaustive_str_ic_lcs(a, b, c);
        ++result.oracle_checked;
        if (reference != exhaustive) {
            ++result.oracle_failed;
            record_failure(inst, "reference=" + describe(reference) + " exhaustive=" + describe(exhaustive));
        }
    }
    return result;
}

std::size_t scan_step_budget(std::size_t m, std::size_t n, std::size_t k) {
    return 4 * ((m + n) * k + m + n);
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    Rng rng(config.seed);
    for (const std::size_t size : config.sizes) {
        for (const double ratio : config.compressibility) {
            const auto runs = static_cast<std::size_t>(
                std::clamp<double>(std::round(ratio * static_cast<double>(size)), 1.0, static_cast<double>(size)));
            for (std::size_t trial = 0; trial < config.trials; ++trial) {
                const std::string a = generate_runs(size, runs, config.alphabet, rng);
                const std::string b = generate_runs(size, runs, config.alphabet, rng);
                const RleString ra = RleString::encode(a);
                const RleString rb = RleString::encode(b);

                std::string multi = random_subsequence(a, config.constraint_len, rng);
                for (int attempt = 0; attempt < 16 && RleString::encode(multi).run_count() < 2; ++attempt) {
                    multi = random_subsequence(a, config.constraint_len, rng);
                }
                const std::string single(config.constraint_len, a.empty() ? 'a' : a.front());

                for (const std::string& c : {multi, single}) {
                    BenchRow row;
                    const RleString rc = RleString::encode(c);
                    row.big_m = ra.size();
                    row.big_n = rb.size();
                    row.m = ra.run_count();
                    row.n = rb.run_count();
                    row.k = rc.size();
                    row.k_runs = rc.run_count();
                    row.trial = trial;

                    const auto t0 = std::chrono::steady_clock::now();
                    const SolveReport report = solve(ra, rb, rc);
                    row.solver_ns = elapsed_ns(t0);
                    row.counters = report.counters;
                    row.solver_length = report.length;

                    if (config.run_oracle) {
                        const auto t1 = std::chrono::steady_clock::now();
                        row.oracle_length = oracle::deorowicz_str_ic_lcs(a, b, c);
                        row.oracle_ns = elapsed_ns(t1);
                        row.oracle_ran = true;
                    }
                    rows.push_back(row);
                }
            }
        }
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "M,N,m,n,K,kC,trial,solver_ns,oracle_ns,cdp_cells,pair_evals,scan_steps\n";
    for (const BenchRow& r : rows) {
        out << r.big_m << ',' << r.big_n << ',' << r.m << ',' << r.n << ',' << r.k << ',' << r.k_runs << ','
            << r.trial << ',' << r.solver_ns << ',' << r.oracle_ns << ',' << r.counters.cdp_cells << ','
            << r.counters.pair_evals << ',' << r.counters.scan_steps << '\n';
    }
}

std::optional<std::string> check_bench_row(const BenchRow& r) {
    std::ostringstream why;
    const std::size_t cells = (r.m + 1) * (r.big_n + 1) + (r.big_m + 1) * (r.n + 1);
    if (r.counters.cdp_cells != cells) {
        why << "cdp_cells " << r.counters.cdp_cells << " != " << cells << "; ";
    }
    if (r.k_runs > 1) {
        if (r.counters.pair_evals > r.m * r.n) why << "pair_evals " << r.counters.pair_evals << " > m*n; ";
        const std::size_t budget = scan_step_budget(r.m, r.n, r.k);
        if (r.counters.scan_steps > budget) {
            why << "scan_steps " << r.counters.scan_steps << " > " << budget << "; ";
        }
    } else if (r.k_runs == 1) {
        const std::size_t bound =
            r.counters.groups_a * r.counters.intervals_b + r.counters.groups_b * r.counters.intervals_a;
        if (r.counters.pair_evals > bound) why << "pair_evals " << r.counters.pair_evals << " > g*l'+g'*l; ";
        if (r.counters.groups_a > 2 * r.m || r.counters.groups_b > 2 * r.n) why << "group count above 2 * runs; ";
    }
    if (r.oracle_ran && r.oracle_length != r.solver_length) {
        why << "solver " << describe(r.solver_length) << " != reference " << describe(r.oracle_length) << "; ";
    }
    const std::string s = why.str();
    if (s.empty()) return std::nullopt;
    return s.substr(0, s.size() - 2);
}

}  // namespace rleclcs
