#include "rleclcs/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rleclcs/oracle.hpp"

namespace rleclcs {

namespace {

std::size_t uniform(std::size_t lo, std::size_t hi, Rng& rng) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// One LCS of a and b, read off the full table.
std::string some_lcs(const std::string& a, const std::string& b) {
    const oracle::DpTable t = oracle::naive_lcs(a, b);
    std::string out;
    std::size_t i = a.size();
    std::size_t j = b.size();
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1]) {
            out.push_back(a[i - 1]);
            --i;
            --j;
        } else if (t(i - 1, j) >= t(i, j - 1)) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

std::string generate_runs(std::size_t length, std::size_t runs, std::size_t alphabet, Rng& rng) {
    if (runs < 1 || runs > length) {
        throw std::invalid_argument("run count must satisfy 1 <= runs <= length (runs=" + std::to_string(runs) +
                                    ", length=" + std::to_string(length) + ")");
    }
    if (alphabet < 2 || alphabet > kMaxAlphabet) {
        throw std::invalid_argument("alphabet size must be in 2.." + std::to_string(kMaxAlphabet));
    }

    std::vector<std::size_t> candidates(length - 1);
    std::iota(candidates.begin(), candidates.end(), std::size_t{1});
    std::vector<std::size_t> cuts;
    cuts.reserve(runs + 1);
    cuts.push_back(0);
    std::sample(candidates.begin(), candidates.end(), std::back_inserter(cuts), runs - 1, rng);
    cuts.push_back(length);

    std::string out;
    out.reserve(length);
    char prev = 0;
    for (std::size_t r = 0; r < runs; ++r) {
        char ch;
        if (r == 0) {
            ch = static_cast<char>('a' + uniform(0, alphabet - 1, rng));
        } else {
            // Uniform among the alphabet minus the previous symbol.
            std::size_t pick = uniform(0, alphabet - 2, rng);
            if (pick >= static_cast<std::size_t>(prev - 'a')) ++pick;
            ch = static_cast<char>('a' + pick);
        }
        out.append(cuts[r + 1] - cuts[r], ch);
        prev = ch;
    }
    return out;
}

std::string random_string(std::size_t max_len, std::size_t alphabet, Rng& rng) {
    const std::size_t len = uniform(0, max_len, rng);
    std::string out(len, 'a');
    for (char& ch : out) ch = static_cast<char>('a' + uniform(0, alphabet - 1, rng));
    return out;
}

std::string random_subsequence(const std::string& source, std::size_t len, Rng& rng) {
    std::string out;
    std::sample(source.begin(), source.end(), std::back_inserter(out), std::min(len, source.size()), rng);
    return out;
}

Instance random_triple(const TripleShape& shape, Rng& rng) {
    const std::string a = random_string(shape.max_len, shape.alphabet, rng);
    const std::string b = random_string(shape.max_len, shape.alphabet, rng);
    std::string c;
    if (uniform(0, 1, rng) == 0) {
        c = random_subsequence(some_lcs(a, b), uniform(1, shape.max_constraint, rng), rng);
    } else {
        const std::size_t len = uniform(0, shape.max_constraint, rng);
        c.resize(len);
        for (char& ch : c) ch = static_cast<char>('a' + uniform(0, shape.alphabet - 1, rng));
    }
    return {RleString::encode(a), RleString::encode(b), RleString::encode(c)};
}

}  // namespace rleclcs
