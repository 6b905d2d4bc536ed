#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace ngstem::checks {

struct PropertyReport {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when everything held

  bool passed() const { return cases > 0 && failures == 0; }
};

/// Prefix index against a linear scan, monotonicity along every word,
/// floor semantics and order-independence of the build.
PropertyReport prefix_index_properties(std::uint64_t seed, std::size_t cases);

/// Stem is a prefix of the normalized word; |word| <= 3 leaves it intact,
/// otherwise 4 <= |stem| <= |word|. Random gamma, floor and OOV handling.
PropertyReport stem_bounds_properties(std::uint64_t seed, std::size_t cases);

/// With gamma = 0, multiplying all counts by k > 0 leaves every stem unchanged.
PropertyReport scale_invariance_properties(std::uint64_t seed, std::size_t cases);

/// Metric axioms and agreement with the recursive oracle, lengths <= 7.
PropertyReport levenshtein_properties(std::uint64_t seed, std::size_t cases);

/// Tie-free samples with 8 <= N_r <= 20: continuity-corrected normal p
/// within 0.05 of exact enumeration; W unchanged by a common positive affine
/// map of x and y and by swapping x with y.
PropertyReport wilcoxon_properties(std::uint64_t seed, std::size_t cases);

/// levenshtein(word, stem(word)) = |word| - |stem(word)| on random corpora.
PropertyReport stem_distance_properties(std::uint64_t seed, std::size_t cases);

}  // namespace ngstem::checks
