#include "ngstem/report.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace ngstem {

EvaluationRun run_evaluation(std::istream& pairs, double alpha, const WilcoxonOptions& options) {
  EvaluationRun run;
  run.rows = read_pairs_tsv(pairs);
  std::vector<StemPair> plain;
  plain.reserve(run.rows.size());
  for (const PairRow& row : run.rows) plain.push_back(row.pair);
  run.records = paired_distances(plain);
  run.mismatches = validate_distances(run.rows, run.records);
  run.report = compare_report(run.records, alpha, options);
  return run;
}

std::string fixed6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  std::string text(buffer);
  if (text == "-0.000000") text.erase(0, 1);
  return text;
}

namespace {

std::string quoted(const Token& token) { return nlohmann::json(encode_utf8(token)).dump(); }

std::string delta_text(const std::optional<SecondOrderDeviation>& delta) {
  if (!delta) return "undefined";
  if (delta->negative_infinity) return "-inf";
  return std::to_string(delta->value);
}

}  // namespace

std::string format_report(const ComparisonReport& report, OutputFormat format,
                          bool include_records) {
  std::ostringstream out;
  if (format == OutputFormat::json) {
    // Written by hand: nlohmann::json cannot pin a fixed decimal count.
    out << "{\n"
        << "  \"n\": " << report.n << ",\n"
        << "  \"n_r\": " << report.n_r << ",\n"
        << "  \"w\": " << fixed6(report.w) << ",\n"
        << "  \"z\": " << fixed6(report.z) << ",\n"
        << "  \"p_two_sided\": " << fixed6(report.p_two_sided) << ",\n"
        << "  \"alpha\": " << fixed6(report.alpha) << ",\n"
        << "  \"reject_null\": " << (report.reject_null ? "true" : "false") << ",\n"
        << "  \"mean_ld_a\": " << fixed6(report.mean_ld_a) << ",\n"
        << "  \"mean_ld_b\": " << fixed6(report.mean_ld_b) << ",\n"
        << "  \"identical_stem_count\": " << report.identical_stem_count;
    if (include_records) {
      out << ",\n  \"records\": [";
      for (std::size_t k = 0; k < report.records.size(); ++k) {
        const DistanceRecord& r = report.records[k];
        out << (k == 0 ? "\n" : ",\n") << "    {\"word\": " << quoted(r.word)
            << ", \"stem_a\": " << quoted(r.stem_a) << ", \"stem_b\": " << quoted(r.stem_b)
            << ", \"ld_a\": " << r.ld_a << ", \"ld_b\": " << r.ld_b << ", \"d\": " << r.d << "}";
      }
      out << (report.records.empty() ? "]" : "\n  ]");
    }
    out << "\n}\n";
    return out.str();
  }

  out << "n\t" << report.n << '\n'
      << "n_r\t" << report.n_r << '\n'
      << "w\t" << fixed6(report.w) << '\n'
      << "z\t" << fixed6(report.z) << '\n'
      << "p_two_sided\t" << fixed6(report.p_two_sided) << '\n'
      << "alpha\t" << fixed6(report.alpha) << '\n'
      << "reject_null\t" << (report.reject_null ? "true" : "false") << '\n'
      << "mean_ld_a\t" << fixed6(report.mean_ld_a) << '\n'
      << "mean_ld_b\t" << fixed6(report.mean_ld_b) << '\n'
      << "identical_stem_count\t" << report.identical_stem_count << '\n';
  if (include_records) {
    out << "\nword\tstem_a\tstem_b\tld_a\tld_b\td\n";
    for (const DistanceRecord& r : report.records) {
      out << encode_utf8(r.word) << '\t' << encode_utf8(r.stem_a) << '\t' << encode_utf8(r.stem_b)
          << '\t' << r.ld_a << '\t' << r.ld_b << '\t' << r.d << '\n';
    }
  }
  return out.str();
}

std::string format_mismatches(std::span<const LdMismatch> mismatches) {
  std::ostringstream out;
  for (const LdMismatch& m : mismatches) {
    out << "line " << m.line << ": " << encode_utf8(m.word) << " ld_" << m.column << " stored "
        << m.expected << ", recomputed " << m.recomputed << '\n';
  }
  return out.str();
}

std::string format_stems(std::span<const StemResult> results, OutputFormat format, bool trace) {
  if (format == OutputFormat::json) {
    auto rows = nlohmann::ordered_json::array();
    for (const StemResult& r : results) {
      nlohmann::ordered_json row;
      row["word"] = encode_utf8(r.word);
      row["stem"] = encode_utf8(r.stem);
      if (trace) {
        row["stop_reason"] = std::string(to_string(r.trace.stop_reason));
        row["phase2_applied"] = r.trace.phase2_applied;
        auto steps = nlohmann::ordered_json::array();
        for (const StemStep& s : r.trace.steps) {
          nlohmann::ordered_json step;
          step["i"] = s.i;
          step["F"] = s.frequency;
          step["lambda"] = s.lambda;
          if (!s.delta) {
            step["delta"] = nullptr;
          } else if (s.delta->negative_infinity) {
            step["delta"] = "-inf";
          } else {
            step["delta"] = s.delta->value;
          }
          step["psi"] = s.psi;
          steps.push_back(std::move(step));
        }
        row["steps"] = std::move(steps);
      }
      rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
  }

  std::ostringstream out;
  for (const StemResult& r : results) {
    out << encode_utf8(r.word) << '\t' << encode_utf8(r.stem);
    if (trace) {
      out << '\t' << to_string(r.trace.stop_reason) << '\t'
          << (r.trace.phase2_applied ? "phase2" : "-") << '\t';
      for (std::size_t k = 0; k < r.trace.steps.size(); ++k) {
        const StemStep& s = r.trace.steps[k];
        out << (k ? ";" : "") << s.i << ':' << s.frequency << ':' << s.lambda << ':'
            << delta_text(s.delta) << ':' << s.psi;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ngstem
