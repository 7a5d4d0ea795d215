// rleclcs: STR-IC-LCS solver over run-length encoded strings.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rleclcs/cdp_table.hpp"
#include "rleclcs/generate.hpp"
#include "rleclcs/harness.hpp"
#include "rleclcs/instance.hpp"
#include "rleclcs/intervals.hpp"
#include "rleclcs/solver.hpp"

namespace {

using namespace rleclcs;

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitInputError = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RLECLCS_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable RLECLCS_SEED='" << env << "'\n";
        }
    }
    return 1;
}

struct InputOptions {
    std::string path;
    std::optional<std::string> a, b, c;

    void attach(CLI::App& cmd) {
        cmd.add_option("instance", path, "Instance file: three lines raw:<text> or rle:<runs>");
        cmd.add_option("-a,--a", a, "A as raw:<text>, rle:<runs> or a bare literal");
        cmd.add_option("-b,--b", b, "B, same forms as --a");
        cmd.add_option("-c,--c", c, "C, same forms as --a");
    }

    static RleString record(const std::string& s) {
        if (s.starts_with("raw:") || s.starts_with("rle:")) return parse_record(s);
        return RleString::encode(s);
    }

    Instance load() const {
        Instance inst;
        if (!path.empty()) inst = read_instance_file(path);
        if (a) inst.a = record(*a);
        if (b) inst.b = record(*b);
        if (c) inst.c = record(*c);
        if (path.empty() && (!a || !b)) throw ParseError("give an instance file or at least --a and --b");
        return inst;
    }
};

nlohmann::ordered_json counters_json(const SolveCounters& c) {
    return {{"cdp_cells", c.cdp_cells},     {"pair_evals", c.pair_evals}, {"scan_steps", c.scan_steps},
            {"intervals_a", c.intervals_a}, {"intervals_b", c.intervals_b}, {"groups_a", c.groups_a},
            {"groups_b", c.groups_b}};
}

int cmd_solve(const InputOptions& input, bool reconstruct, bool json) {
    const Instance inst = input.load();
    const SolveReport report = solve(inst.a, inst.b, inst.c, reconstruct || json);
    if (json) {
        nlohmann::ordered_json out;
        out["length"] = report.length ? nlohmann::ordered_json(*report.length) : nlohmann::ordered_json(nullptr);
        out["answer"] = report.answer ? nlohmann::ordered_json(report.answer->decode()) : nlohmann::ordered_json(nullptr);
        out["answer_rle"] = report.answer ? nlohmann::ordered_json(report.answer->to_text()) : nlohmann::ordered_json(nullptr);
        out["counters"] = counters_json(report.counters);
        std::cout << out.dump(2) << '\n';
    } else if (report.length) {
        std::cout << "length=" << *report.length << '\n';
        if (reconstruct) {
            std::cout << "answer=" << report.answer->decode() << '\n';
            std::cout << "answer_rle=" << report.answer->to_text() << '\n';
        }
    } else {
        std::cout << "no-solution\n";
    }
    return report.length ? kExitOk : kExitNoSolution;
}

int cmd_intervals(const InputOptions& input, const std::string& side, bool with_groups) {
    const Instance inst = input.load();
    const RleString& text = side == "b" ? inst.b : inst.a;
    const IntervalGroups groups = group_intervals(minimal_intervals(text, inst.c), text);
    for (std::size_t h = 0; h < groups.group_count(); ++h) {
        for (std::size_t x = groups.group_starts[h]; x < groups.group_starts[h + 1]; ++x) {
            std::cout << groups.intervals[x].start << ' ' << groups.intervals[x].end;
            if (with_groups) std::cout << ' ' << h + 1;
            std::cout << '\n';
        }
    }
    return kExitOk;
}

int cmd_lcs(const InputOptions& input, bool reconstruct, const std::string& dump_path) {
    const Instance inst = input.load();
    const CompressedDpTable table = build_prefix_cdp(inst.a, inst.b);
    std::cout << "length=" << table.lookup(inst.a.size(), inst.b.size()) << '\n';
    if (reconstruct) {
        const RleString z = table.backtrack(inst.a.size(), inst.b.size());
        std::cout << "answer=" << z.decode() << '\n' << "answer_rle=" << z.to_text() << '\n';
    }
    if (!dump_path.empty()) {
        std::ofstream out(dump_path);
        if (!out) throw ParseError("cannot write '" + dump_path + "'");
        table.dump_csv(out);
    }
    return kExitOk;
}

int cmd_gen(std::size_t len, std::size_t runs, std::size_t alphabet, std::uint64_t seed, bool as_rle) {
    Rng rng(seed);
    std::string s;
    try {
        s = generate_runs(len, runs, alphabet, rng);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    std::cout << (as_rle ? RleString::encode(s).to_text() : s) << '\n';
    return kExitOk;
}

int cmd_bench(const BenchConfig& config, const std::string& csv_path, bool check) {
    std::ofstream file;
    if (!csv_path.empty()) {
        file.open(csv_path);
        if (!file) {
            std::cerr << "error: cannot write '" << csv_path << "'\n";
            return kExitInputError;
        }
    }
    const std::vector<BenchRow> rows = run_bench(config);
    write_bench_csv(csv_path.empty() ? std::cout : file, rows);

    int status = kExitOk;
    if (check) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (const auto why = check_bench_row(rows[r])) {
                std::cerr << "row " << r + 1 << ": " << *why << '\n';
                status = kExitNoSolution;
            }
        }
    }
    return status;
}

int cmd_verify(const VerifyConfig& config) {
    const VerifyResult r = run_verification(config);
    std::cout << "solver-vs-reference: " << r.solver_checked - r.solver_failed << " passed, " << r.solver_failed
              << " failed\n";
    std::cout << "reference-vs-exhaustive: " << r.oracle_checked - r.oracle_failed << " passed, " << r.oracle_failed
              << " failed\n";
    if (r.first_failure) {
        std::cout << "# first failure: " << r.first_failure_kind << '\n';
        write_instance(std::cout, *r.first_failure);
    }
    std::cout << (r.ok() ? "PASS" : "FAIL") << '\n';
    return r.ok() ? kExitOk : kExitNoSolution;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained LCS (C as a substring) over run-length encoded strings"};
    app.require_subcommand(1);

    InputOptions solve_in, intervals_in, lcs_in;
    bool reconstruct = false, json = false, lcs_reconstruct = false, with_groups = false;
    std::string side = "a", dump_path;

    auto* solve = app.add_subcommand("solve", "Length (and optionally an instance) of an STR-IC-LCS");
    solve_in.attach(*solve);
    solve->add_flag("-r,--reconstruct", reconstruct, "Print an answer string (raw and RLE)");
    solve->add_flag("--json", json, "Emit {length, answer, answer_rle, counters}");

    auto* intervals = app.add_subcommand("intervals", "Minimal C-intervals, one `s f` per line");
    intervals_in.attach(*intervals);
    intervals->add_option("--side", side, "Which string to scan")->check(CLI::IsMember({"a", "b"}));
    intervals->add_flag("--groups", with_groups, "Append the 1-based group index");

    auto* lcs = app.add_subcommand("lcs", "Plain LCS of A and B through the compressed table");
    lcs_in.attach(*lcs);
    lcs->add_flag("-r,--reconstruct", lcs_reconstruct, "Print one LCS");
    lcs->add_option("--dump-cdp", dump_path, "Write stored table cells as CSV");

    std::size_t gen_len = 0, gen_runs = 0, gen_alphabet = 2;
    std::optional<std::uint64_t> gen_seed;
    bool gen_rle = false;
    auto* gen = app.add_subcommand("gen", "Random string with a given number of runs");
    gen->add_option("--len", gen_len, "String length M")->required();
    gen->add_option("--runs", gen_runs, "Number of maximal runs m")->required();
    gen->add_option("--alphabet", gen_alphabet, "Alphabet size k (2..26)");
    gen->add_option("--seed", gen_seed, "RNG seed (default: $RLECLCS_SEED or 1)");
    gen->add_flag("--rle", gen_rle, "Print in run format");

    BenchConfig bench_config;
    std::optional<std::uint64_t> bench_seed;
    std::string csv_path;
    bool bench_check = false, no_oracle = false;
    auto* bench = app.add_subcommand("bench", "Time solver and reference; CSV with operation counters");
    bench->add_option("--sizes", bench_config.sizes, "String lengths M = N")->delimiter(',');
    bench->add_option("--compressibility", bench_config.compressibility, "Runs per character m/M in (0,1]")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    bench->add_option("--trials", bench_config.trials, "Trials per configuration");
    bench->add_option("--constraint-len", bench_config.constraint_len, "Constraint length K");
    bench->add_option("--alphabet", bench_config.alphabet, "Alphabet size (2..26)");
    bench->add_option("--seed", bench_seed, "RNG seed (default: $RLECLCS_SEED or 1)");
    bench->add_option("--csv", csv_path, "Output path (default: stdout)");
    bench->add_flag("--check", bench_check, "Exit 1 if any counter bound or reference agreement fails");
    bench->add_flag("--no-oracle", no_oracle, "Skip the O(MN) reference");

    VerifyConfig verify_config;
    std::optional<std::uint64_t> verify_seed;
    auto* verify = app.add_subcommand("verify", "Randomized agreement with the reference implementations");
    verify->add_option("--trials", verify_config.trials, "Random triples per suite");
    verify->add_option("--max-len", verify_config.max_len, "Maximum |A|, |B|");
    verify->add_option("--seed", verify_seed, "RNG seed (default: $RLECLCS_SEED or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (*solve) return cmd_solve(solve_in, reconstruct, json);
        if (*intervals) return cmd_intervals(intervals_in, side, with_groups);
        if (*lcs) return cmd_lcs(lcs_in, lcs_reconstruct, dump_path);
        if (*gen) return cmd_gen(gen_len, gen_runs, gen_alphabet, gen_seed.value_or(default_seed()), gen_rle);
        if (*bench) {
            bench_config.seed = bench_seed.value_or(default_seed());
            bench_config.run_oracle = !no_oracle;
            return cmd_bench(bench_config, csv_path, bench_check);
        }
        if (*verify) {
            verify_config.seed = verify_seed.value_or(default_seed());
            return cmd_verify(verify_config);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
