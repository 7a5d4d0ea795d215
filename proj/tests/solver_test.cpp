#include "rleclcs/solver.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rleclcs/generate.hpp"
#include "rleclcs/oracle.hpp"

using namespace rleclcs;

namespace {

void expect_valid_answer(const SolveReport& r, const std::string& a, const std::string& b, const std::string& c) {
    ASSERT_TRUE(r.length);
    ASSERT_TRUE(r.answer);
    const std::string z = r.answer->decode();
    EXPECT_EQ(z.size(), *r.length);
    EXPECT_TRUE(oracle::contains_substring(z, c)) << z;
    EXPECT_TRUE(oracle::is_subsequence(z, a)) << z;
    EXPECT_TRUE(oracle::is_subsequence(z, b)) << z;
}

struct SingleRunExample {
    RleString a = RleString::parse("a5b3a4b2a1");
    RleString b = RleString::parse("a1b3a7b3");
    RleString c = RleString::parse("a5");
    CompressedDpTable prefix = build_prefix_cdp(a, b);
    SuffixDpTable suffix = build_suffix_cdp(a, b);
};

}  // namespace

TEST(Solve, SmallExample) {
    const SolveReport r =
        solve(RleString::encode("abacab"), RleString::encode("babcaba"), RleString::encode("bb"), true);
    EXPECT_EQ(r.length, 3u);
    expect_valid_answer(r, "abacab", "babcaba", "bb");
}

TEST(Solve, NoSolution) {
    const SolveReport r =
        solve(RleString::encode("abacab"), RleString::encode("babcaba"), RleString::encode("ccc"), true);
    EXPECT_FALSE(r.length);
    EXPECT_FALSE(r.answer);
    // Constraint longer than a string, and more runs than a string.
    EXPECT_FALSE(solve(RleString::encode("ab"), RleString::encode("abab"), RleString::encode("aba")).length);
    EXPECT_FALSE(solve(RleString::encode(""), RleString::encode("a"), RleString::encode("a")).length);
}

TEST(Solve, SingleRunExample) {
    const SingleRunExample ex;
    const SolveReport r = solve(ex.a, ex.b, ex.c, true);
    EXPECT_EQ(r.length, 10u);
    expect_valid_answer(r, ex.a.decode(), ex.b.decode(), ex.c.decode());
    EXPECT_EQ(r.counters.groups_a, 3u);
    EXPECT_EQ(r.counters.groups_b, 2u);
    EXPECT_EQ(r.counters.intervals_a, 6u);
    EXPECT_EQ(r.counters.intervals_b, 4u);
}

TEST(Solve, IdentityAndEmptyConstraint) {
    const RleString abc = RleString::encode("abc");
    EXPECT_EQ(solve(abc, abc, abc).length, 3u);

    const SolveReport r = solve(RleString::encode("abacab"), RleString::encode("babcaba"), RleString{}, true);
    EXPECT_EQ(r.length, 5u);
    expect_valid_answer(r, "abacab", "babcaba", "");
    EXPECT_EQ(solve(RleString{}, RleString{}, RleString{}).length, 0u);
}

TEST(Solve, CountersTrackTableSize) {
    const RleString a = RleString::encode("aabbbcc");
    const RleString b = RleString::encode("abcabc");
    const SolveReport r = solve(a, b, RleString::encode("bc"));
    EXPECT_EQ(r.counters.cdp_cells, (3 + 1) * (6 + 1) + (7 + 1) * (6 + 1));
    EXPECT_EQ(r.counters.pair_evals, r.counters.intervals_a * r.counters.intervals_b);
}

TEST(SolvePairs, MultirunEvaluatesEveryPairOnce) {
    const RleString a = RleString::encode("abacab");
    const RleString b = RleString::encode("babcaba");
    const RleString c = RleString::encode("ab");
    const auto pre = build_prefix_cdp(a, b);
    const auto suf = build_suffix_cdp(a, b);
    const auto in_a = minimal_intervals_multirun(a, c);
    const auto in_b = minimal_intervals_multirun(b, c);
    std::size_t evals = 0;
    const auto best = solve_pairs_multirun(in_a, in_b, pre, suf, &evals);
    ASSERT_TRUE(best);
    EXPECT_EQ(evals, in_a.size() * in_b.size());
    EXPECT_EQ(best->sum + 2, oracle::deorowicz_str_ic_lcs("abacab", "babcaba", "ab"));

    evals = 0;
    EXPECT_TRUE(solve_pairs_multirun({in_a[0]}, {in_b[0]}, pre, suf, &evals));
    EXPECT_EQ(evals, 1u);
    EXPECT_FALSE(solve_pairs_multirun({}, in_b, pre, suf));
    EXPECT_FALSE(solve_pairs_multirun(in_a, {}, pre, suf));
}

TEST(SolvePairs, SinglerunEvaluatesSixCombinationsOnSecondGroups) {
    const SingleRunExample ex;
    const auto ga = group_intervals(minimal_intervals_singlerun(ex.a, ex.c), ex.a);
    const auto gb = group_intervals(minimal_intervals_singlerun(ex.b, ex.c), ex.b);

    // Restrict to G(2) x G'(2).
    IntervalGroups only_a{{ga.intervals.begin() + 1, ga.intervals.begin() + 5}, {0, 4}};
    IntervalGroups only_b{{gb.intervals.begin() + 1, gb.intervals.end()}, {0, 3}};
    std::size_t evals = 0;
    const auto best = solve_pairs_singlerun(only_a, only_b, ex.prefix, ex.suffix, &evals);
    EXPECT_EQ(evals, 6u);
    ASSERT_TRUE(best);
    EXPECT_EQ(best->sum, 5u);
    EXPECT_EQ(best->in_a, (CInterval{2, 9}));
    EXPECT_EQ(best->in_b, (CInterval{5, 9}));

    evals = 0;
    solve_pairs_singlerun(ga, gb, ex.prefix, ex.suffix, &evals);
    EXPECT_LE(evals, ga.group_count() * gb.intervals.size() + gb.group_count() * ga.intervals.size());

    IntervalGroups one_a{{{1, 5}}, {0, 1}};
    IntervalGroups one_b{{{1, 8}}, {0, 1}};
    evals = 0;
    solve_pairs_singlerun(one_a, one_b, ex.prefix, ex.suffix, &evals);
    EXPECT_EQ(evals, 1u);
}

TEST(SolvePairs, SingleRunPairSumBlock) {
    const SingleRunExample ex;
    const std::vector<CInterval> ga{{2, 9}, {3, 10}, {4, 11}, {5, 12}};
    const std::vector<CInterval> gb{{5, 9}, {6, 10}, {7, 11}};
    const std::vector<std::vector<unsigned>> want{{5, 4, 3}, {5, 5, 4}, {4, 5, 5}, {3, 4, 5}};
    for (std::size_t x = 0; x < ga.size(); ++x) {
        for (std::size_t y = 0; y < gb.size(); ++y) {
            const unsigned sum = ex.prefix.lookup(ga[x].start - 1, gb[y].start - 1) +
                                 ex.suffix.lookup(ga[x].end + 1, gb[y].end + 1);
            EXPECT_EQ(sum, want[x][y]) << x << "," << y;
        }
    }
}

TEST(Reconstruct, MergesBoundaryRuns) {
    // X = "a", C = "ab", Y = "b": the answer "aabb" has two runs.
    const RleString a = RleString::encode("aab");
    const RleString b = RleString::encode("aabb");
    const SolveReport r = solve(RleString::encode("aabb"), b, RleString::encode("ab"), true);
    ASSERT_TRUE(r.answer);
    EXPECT_EQ(r.answer->to_text(), "a2b2");

    const auto pre = build_prefix_cdp(a, b);
    const auto suf = build_suffix_cdp(a, b);
    const RleString only_c = reconstruct(BestPair{0, {1, 3}, {1, 4}}, pre, suf, RleString::encode("aab"));
    EXPECT_EQ(only_c.decode(), "aab");
}

TEST(SolveProperty, MatchesDeorowicz) {
    Rng rng(41);
    const TripleShape shape{40, 8, 3};
    for (int trial = 0; trial < 3000; ++trial) {
        const Instance inst = random_triple(shape, rng);
        const std::string a = inst.a.decode(), b = inst.b.decode(), c = inst.c.decode();
        const SolveReport r = solve(inst.a, inst.b, inst.c, true);
        ASSERT_EQ(r.length, oracle::deorowicz_str_ic_lcs(a, b, c)) << a << " / " << b << " / " << c;
        if (r.length && !c.empty()) {
            expect_valid_answer(r, a, b, c);
            ASSERT_LE(r.answer->run_count(), inst.a.run_count() + inst.b.run_count() + inst.c.run_count());
        }
        if (r.length) ASSERT_LE(*r.length, oracle::naive_lcs(a, b)(a.size(), b.size()));
    }
}

TEST(SolveProperty, MatchesExhaustiveAndLcsBound) {
    Rng rng(42);
    const TripleShape shape{12, 6, 3};
    for (int trial = 0; trial < 1000; ++trial) {
        const Instance inst = random_triple(shape, rng);
        const std::string a = inst.a.decode(), b = inst.b.decode(), c = inst.c.decode();
        const auto got = solve(inst.a, inst.b, inst.c).length;
        ASSERT_EQ(got, oracle::exhaustive_str_ic_lcs(a, b, c)) << a << " / " << b << " / " << c;
        if (!got) continue;
        // Equality with the plain LCS iff some LCS has C as a substring.
        const std::size_t plain = oracle::naive_lcs(a, b)(a.size(), b.size());
        ASSERT_LE(*got, plain);
        bool lcs_contains_c = false;
        for (std::size_t mask = 0; mask < (std::size_t{1} << a.size()) && !lcs_contains_c; ++mask) {
            std::string z;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (mask >> i & 1) z.push_back(a[i]);
            }
            lcs_contains_c = z.size() == plain && oracle::is_subsequence(z, b) && oracle::contains_substring(z, c);
        }
        ASSERT_EQ(*got == plain, lcs_contains_c);
    }
}

TEST(SolveProperty, GroupedMatchesAllPairsAndDiagonalsAreConstant) {
    Rng rng(43);
    std::uniform_int_distribution<std::size_t> runs(1, 10), klen(1, 4);
    for (int trial = 0; trial < 500; ++trial) {
        const std::string a = generate_runs(60, runs(rng), 2, rng);
        const std::string b = generate_runs(50, runs(rng), 2, rng);
        const RleString ra = RleString::encode(a), rb = RleString::encode(b);
        const RleString c = RleString::encode(std::string(klen(rng), 'a'));
        const auto ga = group_intervals(minimal_intervals_singlerun(ra, c), ra);
        const auto gb = group_intervals(minimal_intervals_singlerun(rb, c), rb);
        const auto pre = build_prefix_cdp(ra, rb);
        const auto suf = build_suffix_cdp(ra, rb);

        const auto all = solve_pairs_multirun(ga.intervals, gb.intervals, pre, suf);
        const auto grouped = solve_pairs_singlerun(ga, gb, pre, suf);
        ASSERT_EQ(all.has_value(), grouped.has_value());
        if (!all) continue;
        ASSERT_EQ(all->sum, grouped->sum);
        ASSERT_EQ(all->in_a, grouped->in_a);
        ASSERT_EQ(all->in_b, grouped->in_b);

        auto pair_sum = [&](const CInterval& x, const CInterval& y) {
            return pre.lookup(x.start - 1, y.start - 1) + suf.lookup(x.end + 1, y.end + 1);
        };
        for (std::size_t h = 0; h < ga.group_count(); ++h) {
            for (std::size_t hb = 0; hb < gb.group_count(); ++hb) {
                // Grouped evaluation restricted to one group pair reaches that pair's all-pairs maximum.
                const IntervalGroups one_a{{ga.intervals.begin() + static_cast<std::ptrdiff_t>(ga.group_starts[h]),
                                            ga.intervals.begin() + static_cast<std::ptrdiff_t>(ga.group_starts[h + 1])},
                                           {0, ga.group_size(h)}};
                const IntervalGroups one_b{{gb.intervals.begin() + static_cast<std::ptrdiff_t>(gb.group_starts[hb]),
                                            gb.intervals.begin() + static_cast<std::ptrdiff_t>(gb.group_starts[hb + 1])},
                                           {0, gb.group_size(hb)}};
                std::size_t evals = 0;
                const auto local = solve_pairs_singlerun(one_a, one_b, pre, suf, &evals);
                const auto local_all = solve_pairs_multirun(one_a.intervals, one_b.intervals, pre, suf);
                ASSERT_EQ(local->sum, local_all->sum) << a << " / " << b << " / " << c.decode();
                ASSERT_EQ(evals, ga.group_size(h) + gb.group_size(hb) - 1);

                for (std::size_t x = ga.group_starts[h]; x + 1 < ga.group_starts[h + 1]; ++x) {
                    for (std::size_t y = gb.group_starts[hb]; y + 1 < gb.group_starts[hb + 1]; ++y) {
                        ASSERT_EQ(pair_sum(ga.intervals[x], gb.intervals[y]),
                                  pair_sum(ga.intervals[x + 1], gb.intervals[y + 1]));
                    }
                }
            }
        }
    }
}
