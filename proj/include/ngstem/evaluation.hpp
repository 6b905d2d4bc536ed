#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ngstem/unicode.hpp"

namespace ngstem {

/// Unit-cost edit distance over scalar values.
std::size_t levenshtein(TokenView s, TokenView t);

/// A word with a baseline stem (a) and a candidate stem (b).
struct StemPair {
  Token word;
  Token stem_a;
  Token stem_b;
};

struct DistanceRecord {
  Token word;
  Token stem_a;
  Token stem_b;
  std::size_t ld_a = 0;
  std::size_t ld_b = 0;
  std::int64_t d = 0;  // ld_a - ld_b
};

/// Distances are taken after normalizing all three strings.
std::vector<DistanceRecord> paired_distances(std::span<const StemPair> pairs);

enum class WilcoxonMethod { normal_approx, exact_enumeration };

std::string_view to_string(WilcoxonMethod method);

struct WilcoxonOptions {
  /// Shrinks |S| by one rank step before standardizing.
  bool continuity_correction = false;
  /// Uses the variance of the observed (tied, averaged) ranks instead of the
  /// tie-free closed form.
  bool tie_correction = false;
};

struct WilcoxonResult {
  double w = 0.0;
  std::size_t n_r = 0;
  double z = 0.0;
  double p_two_sided = 1.0;
  WilcoxonMethod method = WilcoxonMethod::normal_approx;
};

/// Signed ranks of the nonzero paired differences x_i - y_i, average ranks
/// for ties, W = |sum sign * rank| and a two-sided normal p. Throws
/// std::invalid_argument on empty or mismatched input.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    const WilcoxonOptions& options = {});

/// Exact two-sided p, P(|S| >= W), over all 2^N_r sign assignments of the
/// observed ranks. Throws std::invalid_argument when N_r > 20.
WilcoxonResult wilcoxon_exact(std::span<const double> x, std::span<const double> y);

inline constexpr std::size_t kMaxExactSampleSize = 20;

struct ComparisonReport {
  std::size_t n = 0;
  std::size_t n_r = 0;
  double w = 0.0;
  double z = 0.0;
  double p_two_sided = 1.0;
  double alpha = 0.05;
  bool reject_null = false;
  double mean_ld_a = 0.0;
  double mean_ld_b = 0.0;
  std::size_t identical_stem_count = 0;
  std::vector<DistanceRecord> records;
};

/// Throws std::invalid_argument on empty records or alpha outside (0, 1).
ComparisonReport compare_report(std::span<const DistanceRecord> records, double alpha,
                                const WilcoxonOptions& options = {});

/// A pairs-file row with optional stored distances.
struct PairRow {
  StemPair pair;
  std::optional<std::size_t> expected_ld_a;
  std::optional<std::size_t> expected_ld_b;
  std::size_t line = 0;
};

/// `word<TAB>stem_a<TAB>stem_b[<TAB>ld_a[<TAB>ld_b]]`; `#` and blank lines
/// skipped. Throws InputError naming the line.
std::vector<PairRow> read_pairs_tsv(std::istream& in);

struct LdMismatch {
  std::size_t line = 0;
  Token word;
  char column = 'a';  // 'a' or 'b'
  std::size_t expected = 0;
  std::size_t recomputed = 0;
};

/// Compares stored distances against `records` (same order as `rows`).
std::vector<LdMismatch> validate_distances(std::span<const PairRow> rows,
                                           std::span<const DistanceRecord> records);

}  // namespace ngstem
