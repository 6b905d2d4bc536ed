#pragma once

// Reference implementations used only to check the production code paths.
// Each one is deliberately naive and shares no code with what it checks.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ngstem/corpus_index.hpp"
#include "ngstem/unicode.hpp"

namespace ngstem::checks {

/// Sum of counts of every entry whose word starts with `prefix`.
std::uint64_t linear_scan_frequency(std::span<const CorpusEntry> entries, TokenView prefix);

/// Plain exponential recursion over the three edit operations.
std::size_t recursive_levenshtein(TokenView s, TokenView t);

/// Exact two-sided signed-rank p for tie-free data by counting, for every
/// subset of {1..n}, whether its rank sum is at least as extreme.
double exact_signed_rank_p(std::size_t n, std::int64_t statistic);

using Rng = std::mt19937_64;

/// Small alphabet with one non-ASCII letter so prefixes collide often.
Token random_word(Rng& rng, std::size_t min_len, std::size_t max_len);

/// Stem-plus-suffix families mixed with noise words; counts in [1, 500].
std::vector<CorpusEntry> random_corpus(Rng& rng);

}  // namespace ngstem::checks
