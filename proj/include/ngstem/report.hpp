#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ngstem/evaluation.hpp"
#include "ngstem/stemmer.hpp"

namespace ngstem {

/// Everything produced by one evaluation of a pairs file.
struct EvaluationRun {
  std::vector<PairRow> rows;
  std::vector<DistanceRecord> records;
  std::vector<LdMismatch> mismatches;
  ComparisonReport report;
};

/// Reads pairs, recomputes both distances, checks stored distances and runs
/// the signed-rank comparison. Throws InputError for malformed rows and
/// std::invalid_argument for an empty file or bad alpha.
EvaluationRun run_evaluation(std::istream& pairs, double alpha, const WilcoxonOptions& options = {});

enum class OutputFormat { tsv, json };

/// Fixed key order, reals with six decimals; identical input gives
/// identical bytes.
std::string format_report(const ComparisonReport& report, OutputFormat format,
                          bool include_records);

std::string format_mismatches(std::span<const LdMismatch> mismatches);

/// One row (TSV) or one object (JSON) per input word, input order.
std::string format_stems(std::span<const StemResult> results, OutputFormat format, bool trace);

/// Six-decimal fixed rendering used by every report.
std::string fixed6(double value);

}  // namespace ngstem
