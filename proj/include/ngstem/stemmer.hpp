#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ngstem/corpus_index.hpp"
#include "ngstem/unicode.hpp"

namespace ngstem {

struct StemmerConfig {
  /// Largest frequency drop between consecutive prefixes that is still
  /// treated as "no drop".
  std::uint64_t gamma = 0;
  /// Prefix counts below this are read as 0.
  std::uint64_t frequency_floor = 0;
  /// Return words whose 4-character prefix is unknown to the corpus unchanged.
  bool oov_passthrough = true;

  /// Stemming starts from the 4-gram; shorter words are never stemmed.
  static constexpr std::size_t min_word_len = 4;
};

/// Frequencies F_4 .. F_L of the leading prefixes of one word.
struct NGramProfile {
  Token word;
  std::vector<std::uint64_t> frequencies;

  std::size_t length() const { return word.size(); }
  /// F_i, the frequency of the first `i` characters (4 <= i <= length()).
  std::uint64_t at(std::size_t i) const;
};

/// Second-order deviation. The first one computed in a run compares against
/// the initial lambda, which is an unbounded sentinel; that result is
/// represented as negative infinity rather than through a concrete large
/// integer.
struct SecondOrderDeviation {
  bool negative_infinity = false;
  std::int64_t value = 0;

  bool positive() const { return !negative_infinity && value > 0; }
  friend bool operator==(const SecondOrderDeviation&, const SecondOrderDeviation&) = default;
};

enum class StopReason {
  word_too_short,
  end_of_word,
  positive_second_deviation,
  oov_passthrough,
};

std::string_view to_string(StopReason reason);

struct StemStep {
  std::size_t i = 0;
  std::uint64_t frequency = 0;
  std::uint64_t lambda = 0;
  /// Empty when the step ended the word and delta was never computed.
  std::optional<SecondOrderDeviation> delta;
  std::size_t psi = 0;

  friend bool operator==(const StemStep&, const StemStep&) = default;
};

struct StemTrace {
  std::vector<StemStep> steps;
  StopReason stop_reason = StopReason::end_of_word;
  bool phase2_applied = false;

  friend bool operator==(const StemTrace&, const StemTrace&) = default;
};

struct StemResult {
  Token word;  // normalized
  Token stem;  // always a prefix of word
  StemTrace trace;

  friend bool operator==(const StemResult&, const StemResult&) = default;
};

/// Throws std::invalid_argument when the word is shorter than 4 characters.
NGramProfile ngram_profile(const PrefixFrequencyIndex& index, TokenView word,
                           const StemmerConfig& config);

/// |F_i - F_{i-1}| for i > 4 and 0 for i = 4. Throws std::out_of_range
/// outside [4, length()].
std::uint64_t first_order_deviation(const NGramProfile& profile, std::size_t i);

/// lambda_i - lambda_{i-1}. An empty `previous` stands for the sentinel
/// initial lambda and always yields negative infinity.
SecondOrderDeviation second_order_deviation(std::uint64_t lambda,
                                            std::optional<std::uint64_t> previous);

struct Phase1Outcome {
  std::size_t psi = 0;
  StemTrace trace;
};

/// Walks i = 5 .. L. At each step: compute lambda_i; if it exceeds gamma the
/// candidate becomes whichever of i, i-1 has the larger frequency, otherwise
/// it becomes i; stop at the end of the word; otherwise compute delta_i and
/// stop when it is positive.
Phase1Outcome phase1(const NGramProfile& profile, const StemmerConfig& config);

/// Flat-tail strip: when psi reached the full word and the last three prefix
/// frequencies are equal, drop three characters provided more than three
/// remain. Records the outcome in `trace`.
std::size_t phase2(const NGramProfile& profile, std::size_t psi, const StemmerConfig& config,
                   StemTrace& trace);

/// Full procedure over one raw token. Throws std::invalid_argument on an
/// empty word.
StemResult stem(const PrefixFrequencyIndex& index, TokenView word, const StemmerConfig& config);

struct BatchItem {
  std::optional<StemResult> result;
  std::string error;  // set when result is empty
};

/// Element-wise stem(). Failures are collected per item; the batch never
/// aborts. `workers` > 1 splits the input across threads, output order is
/// unaffected.
std::vector<BatchItem> stem_batch(const PrefixFrequencyIndex& index, std::span<const Token> words,
                                  const StemmerConfig& config, unsigned workers = 1);

}  // namespace ngstem
