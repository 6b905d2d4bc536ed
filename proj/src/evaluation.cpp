#include "ngstem/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ngstem/corpus_index.hpp"
#include "ngstem/errors.hpp"

namespace ngstem {

std::size_t levenshtein(TokenView s, TokenView t) {
  if (s.size() < t.size()) std::swap(s, t);
  // Single row over the shorter string.
  std::vector<std::size_t> row(t.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= s.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (s[i - 1] == t[j - 1] ? 0 : 1);
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[t.size()];
}

std::vector<DistanceRecord> paired_distances(std::span<const StemPair> pairs) {
  std::vector<DistanceRecord> records;
  records.reserve(pairs.size());
  for (const StemPair& p : pairs) {
    DistanceRecord r;
    r.word = normalize_token(p.word);
    r.stem_a = normalize_token(p.stem_a);
    r.stem_b = normalize_token(p.stem_b);
    r.ld_a = levenshtein(r.word, r.stem_a);
    r.ld_b = levenshtein(r.word, r.stem_b);
    r.d = static_cast<std::int64_t>(r.ld_a) - static_cast<std::int64_t>(r.ld_b);
    records.push_back(std::move(r));
  }
  return records;
}

std::string_view to_string(WilcoxonMethod method) {
  return method == WilcoxonMethod::normal_approx ? "normal-approx" : "exact-enumeration";
}

namespace {

struct SignedRanks {
  std::vector<double> differences;  // nonzero only
  std::vector<double> ranks;        // average ranks of |difference|
  double statistic = 0.0;           // W = |sum sign * rank|
};

SignedRanks signed_ranks(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("paired samples differ in length (" + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()) + ")");
  }
  if (x.empty()) throw std::invalid_argument("paired samples are empty");

  SignedRanks out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (d != 0.0) out.differences.push_back(d);
  }
  const std::size_t n = out.differences.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(out.differences[a]) < std::fabs(out.differences[b]);
  });

  out.ranks.assign(n, 0.0);
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    const double magnitude = std::fabs(out.differences[order[start]]);
    while (end < n && std::fabs(out.differences[order[end]]) == magnitude) ++end;
    // Positions start..end-1 hold ranks start+1..end; all get their mean.
    const double average = (static_cast<double>(start + 1) + static_cast<double>(end)) / 2.0;
    for (std::size_t k = start; k < end; ++k) out.ranks[order[k]] = average;
    start = end;
  }

  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += out.differences[i] > 0 ? out.ranks[i] : -out.ranks[i];
  out.statistic = std::fabs(sum);
  return out;
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    const WilcoxonOptions& options) {
  const SignedRanks sr = signed_ranks(x, y);
  WilcoxonResult result;
  result.method = WilcoxonMethod::normal_approx;
  result.w = sr.statistic;
  result.n_r = sr.differences.size();
  if (result.n_r == 0) {
    result.z = 0.0;
    result.p_two_sided = 1.0;
    return result;
  }

  const auto n = static_cast<double>(result.n_r);
  double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 6.0;
  if (options.tie_correction) {
    variance = 0.0;
    for (double r : sr.ranks) variance += r * r;
  }
  const double numerator =
      options.continuity_correction ? std::max(0.0, result.w - 1.0) : result.w;
  result.z = numerator / std::sqrt(variance);
  result.p_two_sided = std::clamp(std::erfc(result.z / std::sqrt(2.0)), 0.0, 1.0);
  return result;
}

WilcoxonResult wilcoxon_exact(std::span<const double> x, std::span<const double> y) {
  const SignedRanks sr = signed_ranks(x, y);
  WilcoxonResult result;
  result.method = WilcoxonMethod::exact_enumeration;
  result.w = sr.statistic;
  result.n_r = sr.differences.size();
  if (result.n_r > kMaxExactSampleSize) {
    throw std::invalid_argument("exact enumeration limited to " +
                                std::to_string(kMaxExactSampleSize) + " nonzero differences, got " +
                                std::to_string(result.n_r));
  }
  if (result.n_r == 0) return result;

  // Average ranks are multiples of 1/2; doubling keeps the enumeration in
  // integers so |S| >= W is compared exactly.
  std::vector<std::int64_t> doubled;
  doubled.reserve(result.n_r);
  for (double r : sr.ranks) doubled.push_back(std::llround(2.0 * r));
  const std::int64_t target = std::llround(2.0 * result.w);

  const std::uint64_t assignments = std::uint64_t{1} << result.n_r;
  std::uint64_t extreme = 0;
  for (std::uint64_t mask = 0; mask < assignments; ++mask) {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < doubled.size(); ++k) {
      sum += (mask >> k) & 1U ? doubled[k] : -doubled[k];
    }
    if ((sum < 0 ? -sum : sum) >= target) ++extreme;
  }
  result.p_two_sided = static_cast<double>(extreme) / static_cast<double>(assignments);

  const auto n = static_cast<double>(result.n_r);
  result.z = result.w / std::sqrt(n * (n + 1.0) * (2.0 * n + 1.0) / 6.0);
  return result;
}

ComparisonReport compare_report(std::span<const DistanceRecord> records, double alpha,
                                const WilcoxonOptions& options) {
  if (records.empty()) throw std::invalid_argument("no records to compare");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");

  std::vector<double> a;
  std::vector<double> b;
  ComparisonReport report;
  report.n = records.size();
  report.alpha = alpha;
  for (const DistanceRecord& r : records) {
    a.push_back(static_cast<double>(r.ld_a));
    b.push_back(static_cast<double>(r.ld_b));
    if (r.stem_a == r.stem_b) ++report.identical_stem_count;
  }
  const WilcoxonResult w = wilcoxon_signed_rank(a, b, options);
  report.n_r = w.n_r;
  report.w = w.w;
  report.z = w.z;
  report.p_two_sided = w.p_two_sided;
  report.reject_null = w.p_two_sided < alpha;
  report.mean_ld_a = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size());
  report.mean_ld_b = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(b.size());
  report.records.assign(records.begin(), records.end());
  return report;
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::size_t parse_distance(std::string_view text, std::size_t line_no, const char* column) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError(line_no, std::string("malformed ") + column + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<PairRow> read_pairs_tsv(std::istream& in) {
  std::vector<PairRow> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 5) {
      throw InputError(line_no, "expected 3 to 5 tab-separated fields, got " +
                                    std::to_string(fields.size()));
    }
    PairRow row;
    row.line = line_no;
    try {
      row.pair.word = normalize_token(fields[0]);
      row.pair.stem_a = normalize_token(fields[1]);
      row.pair.stem_b = normalize_token(fields[2]);
    } catch (const std::invalid_argument& e) {
      throw InputError(line_no, std::string("bad word or stem: ") + e.what());
    }
    if (fields.size() >= 4) row.expected_ld_a = parse_distance(fields[3], line_no, "ld_a");
    if (fields.size() == 5) row.expected_ld_b = parse_distance(fields[4], line_no, "ld_b");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<LdMismatch> validate_distances(std::span<const PairRow> rows,
                                           std::span<const DistanceRecord> records) {
  if (rows.size() != records.size()) {
    throw std::invalid_argument("row and record counts differ");
  }
  std::vector<LdMismatch> mismatches;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const PairRow& row = rows[k];
    if (row.expected_ld_a && *row.expected_ld_a != records[k].ld_a) {
      mismatches.push_back({row.line, records[k].word, 'a', *row.expected_ld_a, records[k].ld_a});
    }
    if (row.expected_ld_b && *row.expected_ld_b != records[k].ld_b) {
      mismatches.push_back({row.line, records[k].word, 'b', *row.expected_ld_b, records[k].ld_b});
    }
  }
  return mismatches;
}

}  // namespace ngstem
