#include "rleclcs/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace oracle = rleclcs::oracle;
using rleclcs::CInterval;

namespace {

std::string random_text(std::mt19937_64& rng, std::size_t max_len, int alphabet) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> ch(0, alphabet - 1);
    std::string s(len(rng), 'a');
    for (char& c : s) c = static_cast<char>('a' + ch(rng));
    return s;
}

}  // namespace

TEST(Oracle, NaiveLcs) {
    EXPECT_EQ(oracle::naive_lcs("abacab", "babcaba")(6, 7), 5u);
    EXPECT_EQ(oracle::naive_lcs("", "x")(0, 1), 0u);
    EXPECT_EQ(oracle::naive_lcs("bbbaaaa", "aaaabbbaa")(7, 9), 5u);
    EXPECT_EQ(oracle::naive_suffix_lcs("bbbaaaa", "aaaabbbaa")(1, 1), 5u);
    EXPECT_EQ(oracle::naive_suffix_lcs("bbbaaaa", "aaaabbbaa")(8, 1), 0u);
}

TEST(Oracle, NaiveLcsRecurrence) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::string a = random_text(rng, 30, 3);
        const std::string b = random_text(rng, 30, 3);
        const auto t = oracle::naive_lcs(a, b);
        for (std::size_t i = 1; i <= a.size(); ++i) {
            for (std::size_t j = 1; j <= b.size(); ++j) {
                ASSERT_LE(t(i - 1, j), t(i, j));
                ASSERT_LE(t(i, j - 1), t(i, j));
                ASSERT_LE(t(i, j) - t(i - 1, j), 1u);
                ASSERT_LE(t(i, j) - t(i, j - 1), 1u);
                if (a[i - 1] == b[j - 1]) ASSERT_EQ(t(i, j), t(i - 1, j - 1) + 1);
            }
        }
    }
}

TEST(Oracle, SubsequenceAndSubstring) {
    EXPECT_TRUE(oracle::is_subsequence("abb", "babcaba"));
    EXPECT_TRUE(oracle::is_subsequence("", "anything"));
    EXPECT_FALSE(oracle::is_subsequence("abbb", "babcaba"));
    EXPECT_TRUE(oracle::contains_substring("abb", "bb"));
    EXPECT_FALSE(oracle::contains_substring("abab", "bb"));
}

TEST(Oracle, NaiveMinimalIntervals) {
    using I = std::vector<CInterval>;
    EXPECT_EQ(oracle::naive_minimal_intervals("abacab", "bb"), (I{{2, 6}}));
    EXPECT_EQ(oracle::naive_minimal_intervals("aa", "a"), (I{{1, 1}, {2, 2}}));
    EXPECT_EQ(oracle::naive_minimal_intervals("aaabbb", "ab"), (I{{3, 4}}));
    EXPECT_TRUE(oracle::naive_minimal_intervals("abc", "").empty());
}

TEST(Oracle, ScanIntervalsMatchDefinition) {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<std::size_t> klen(1, 6);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::string a = random_text(rng, 40, 3);
        std::string c(klen(rng), 'a');
        for (char& ch : c) ch = static_cast<char>('a' + rng() % 3);
        ASSERT_EQ(oracle::scan_minimal_intervals(a, c), oracle::naive_minimal_intervals(a, c)) << a << " / " << c;
    }
}

TEST(Oracle, Deorowicz) {
    EXPECT_EQ(oracle::deorowicz_str_ic_lcs("abacab", "babcaba", "bb"), 3u);
    EXPECT_EQ(oracle::deorowicz_str_ic_lcs("abacab", "babcaba", ""), 5u);
    EXPECT_EQ(oracle::deorowicz_str_ic_lcs("aaaaabbbaaaabba", "abbbaaaaaaabbb", "aaaaa"), 10u);
    EXPECT_FALSE(oracle::deorowicz_str_ic_lcs("abacab", "babcaba", "ccc"));
}

TEST(Oracle, Exhaustive) {
    EXPECT_EQ(oracle::exhaustive_str_ic_lcs("abacab", "babcaba", "bb"), 3u);
    EXPECT_EQ(oracle::exhaustive_str_ic_lcs("abcab", "abcab", "abcab"), 5u);
    EXPECT_FALSE(oracle::exhaustive_str_ic_lcs("ab", "ba", "ab"));
    // Truncated variant of the single-run example, small enough to enumerate.
    EXPECT_EQ(oracle::exhaustive_str_ic_lcs("aaaaabbbaaaab", "abbbaaaaaaab", "aaaaa"),
              oracle::deorowicz_str_ic_lcs("aaaaabbbaaaab", "abbbaaaaaaab", "aaaaa"));
    EXPECT_THROW(oracle::exhaustive_str_ic_lcs(std::string(16, 'a'), "a", "a"), std::invalid_argument);
}

TEST(OracleProperty, DeorowiczMatchesExhaustive) {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<std::size_t> klen(0, 4);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::string a = random_text(rng, 12, 1 + trial % 3);
        const std::string b = random_text(rng, 12, 3);
        std::string c(klen(rng), 'a');
        for (char& ch : c) ch = static_cast<char>('a' + rng() % 3);
        ASSERT_EQ(oracle::deorowicz_str_ic_lcs(a, b, c), oracle::exhaustive_str_ic_lcs(a, b, c))
            << a << " / " << b << " / " << c;
    }
}
