#pragma once

#include <cstddef>
#include <random>
#include <string>

#include "rleclcs/instance.hpp"

namespace rleclcs {

using Rng = std::mt19937_64;

inline constexpr std::size_t kMaxAlphabet = 26;

/// String over 'a'.. of exactly `length` characters and exactly `runs` maximal runs.
/// Run lengths are a uniform composition of `length` into `runs` parts.
/// Throws std::invalid_argument unless 1 <= runs <= length and 2 <= alphabet <= 26.
std::string generate_runs(std::size_t length, std::size_t runs, std::size_t alphabet, Rng& rng);

/// Uniform string with length in [0, max_len].
std::string random_string(std::size_t max_len, std::size_t alphabet, Rng& rng);

/// Random subsequence of `source` with length min(len, |source|).
std::string random_subsequence(const std::string& source, std::size_t len, Rng& rng);

struct TripleShape {
    std::size_t max_len = 40;
    std::size_t max_constraint = 8;
    std::size_t alphabet = 3;
};

/// Random (A, B, C). Half the time C is drawn from a common subsequence of
/// A and B, otherwise C is uniform.
Instance random_triple(const TripleShape& shape, Rng& rng);

}  // namespace rleclcs
