#include "ngstem/checks/acceptance.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "ngstem/checks/properties.hpp"
#include "ngstem/corpus_index.hpp"
#include "ngstem/report.hpp"
#include "ngstem/stemmer.hpp"

namespace ngstem::checks {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kPropertyCases = 500;
constexpr double kReproductionBudgetSeconds = 1.0;
constexpr double kPropertyBudgetSeconds = 30.0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PrefixFrequencyIndex index_from(const std::string& tsv) {
  std::istringstream in(tsv);
  const auto entries = read_corpus_tsv(in);
  return PrefixFrequencyIndex::build(entries);
}

// Exceptions become failed checks so one broken fixture cannot hide the rest.
CheckResult guarded(std::string id, std::string name, const std::function<void(CheckResult&)>& body) {
  CheckResult result{std::move(id), std::move(name), false, {}};
  try {
    body(result);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("error: ") + e.what();
  }
  return result;
}

CheckResult wilcoxon_reproduction(const FixtureSet& fixtures) {
  return guarded("1", "wilcoxon-reproduction", [&](CheckResult& r) {
    const auto start = Clock::now();
    std::istringstream in(fixtures.random_words);
    const EvaluationRun run = run_evaluation(in, 0.05);
    const double elapsed = seconds_since(start);
    const ComparisonReport& rep = run.report;
    const bool in_window = rep.p_two_sided >= 0.44 && rep.p_two_sided <= 0.64;
    r.passed = rep.n == 100 && in_window && !rep.reject_null && elapsed < kReproductionBudgetSeconds;
    r.detail = "n=" + std::to_string(rep.n) + " n_r=" + std::to_string(rep.n_r) +
               " W=" + fixed6(rep.w) + " p=" + fixed6(rep.p_two_sided) +
               " reject_null=" + (rep.reject_null ? "true" : "false") + " (window [0.44, 0.64])";
    if (elapsed >= kReproductionBudgetSeconds) r.detail += " exceeded 1 s budget";
  });
}

CheckResult levenshtein_reproduction(const FixtureSet& fixtures) {
  return guarded("2", "levenshtein-reproduction", [&](CheckResult& r) {
    const auto start = Clock::now();
    std::istringstream in(fixtures.random_words);
    const EvaluationRun run = run_evaluation(in, 0.05);
    const double elapsed = seconds_since(start);
    std::set<std::size_t> bad_lines;
    for (const LdMismatch& m : run.mismatches) bad_lines.insert(m.line);
    std::size_t complete_rows = 0;
    for (const PairRow& row : run.rows) {
      if (row.expected_ld_a && row.expected_ld_b) ++complete_rows;
    }
    const std::size_t matching = complete_rows - bad_lines.size();
    r.passed = run.rows.size() == 100 && complete_rows == 100 && matching >= 98 &&
               elapsed < kReproductionBudgetSeconds;
    r.detail = std::to_string(matching) + "/" + std::to_string(run.rows.size()) +
               " rows match stored distances (need >= 98)";
    for (const LdMismatch& m : run.mismatches) {
      r.detail += "; line " + std::to_string(m.line) + " " + encode_utf8(m.word) + " ld_" +
                  m.column + " stored " + std::to_string(m.expected) + " recomputed " +
                  std::to_string(m.recomputed);
    }
    if (elapsed >= kReproductionBudgetSeconds) r.detail += " exceeded 1 s budget";
  });
}

CheckResult juggling_trace(const FixtureSet& fixtures) {
  return guarded("3", "juggling-trace", [&](CheckResult& r) {
    const auto index = index_from(fixtures.juggling);
    const StemResult result = stem(index, U"juggling", StemmerConfig{});
    const auto& steps = result.trace.steps;
    const bool shape = steps.size() == 2 && steps[0].i == 5 && steps[1].i == 6;
    const bool values = shape && steps[0].lambda == 186 && steps[1].lambda == 401 &&
                        steps[1].delta && !steps[1].delta->negative_infinity &&
                        steps[1].delta->value == 215 && steps[1].psi == 5;
    r.passed = result.stem == U"juggl" && values &&
               result.trace.stop_reason == StopReason::positive_second_deviation;
    std::ostringstream detail;
    detail << "stem=" << encode_utf8(result.stem) << " stop=" << to_string(result.trace.stop_reason);
    for (const StemStep& s : steps) {
      detail << " [i=" << s.i << " F=" << s.frequency << " lambda=" << s.lambda << " delta="
             << (!s.delta ? std::string("undefined")
                          : s.delta->negative_infinity ? std::string("-inf")
                                                       : std::to_string(s.delta->value))
             << " psi=" << s.psi << "]";
    }
    r.detail = detail.str();
  });
}

CheckResult cluster_conflation(const FixtureSet& fixtures) {
  return guarded("4", "cluster-conflation", [&](CheckResult& r) {
    struct Cluster {
      const char* label;
      const std::string* corpus;
      std::vector<Token> words;
      std::optional<Token> expected;  // exact stem, when pinned
    };
    const std::vector<Cluster> clusters{
        {"en", &fixtures.create_cluster,
         {U"create", U"creates", U"creating", U"created", U"creation", U"creative"}, U"creat"},
        {"es", &fixtures.trabajar_cluster,
         {U"trabajan", U"trabajar", U"trabajado", U"trabajador"}, std::nullopt},
        {"pt", &fixtures.dificil_cluster, {U"dificil", U"dificilmente"}, std::nullopt},
    };
    r.passed = true;
    for (const Cluster& cluster : clusters) {
      const auto index = index_from(*cluster.corpus);
      std::set<Token> stems;
      bool prefixes = true;
      for (const Token& w : cluster.words) {
        const Token s = stem(index, w, StemmerConfig{}).stem;
        prefixes = prefixes && w.starts_with(s);
        stems.insert(s);
      }
      bool ok = stems.size() == 1 && prefixes;
      if (cluster.expected) ok = ok && *stems.begin() == *cluster.expected;
      r.passed = r.passed && ok;
      if (!r.detail.empty()) r.detail += " ";
      r.detail += std::string(cluster.label) + "={";
      bool first = true;
      for (const Token& s : stems) {
        r.detail += (first ? "" : ",") + encode_utf8(s);
        first = false;
      }
      r.detail += "}";
    }
  });
}

}  // namespace

std::vector<CheckResult> run_acceptance(const FixtureSet& fixtures) {
  std::vector<CheckResult> checks;
  checks.push_back(wilcoxon_reproduction(fixtures));
  checks.push_back(levenshtein_reproduction(fixtures));
  checks.push_back(juggling_trace(fixtures));
  checks.push_back(cluster_conflation(fixtures));

  struct Suite {
    const char* id;
    const char* name;
    PropertyReport (*run)(std::uint64_t, std::size_t);
    std::uint64_t seed;
  };
  const Suite suites[] = {
      {"5a", "prefix-frequency-monotone-and-linear-scan", prefix_index_properties, 0x5A01},
      {"5b", "stem-prefix-and-length-bounds", stem_bounds_properties, 0x5B02},
      {"5c", "stem-scale-invariance", scale_invariance_properties, 0x5C03},
      {"5d", "levenshtein-metric-and-recursive-oracle", levenshtein_properties, 0x5D04},
      {"5e", "wilcoxon-normal-vs-exact", wilcoxon_properties, 0x5E05},
      {"5f", "stem-distance-identity", stem_distance_properties, 0x5F06},
  };
  const auto start = Clock::now();
  bool all_suites = true;
  for (const Suite& suite : suites) {
    checks.push_back(guarded(suite.id, suite.name, [&](CheckResult& r) {
      const PropertyReport report = suite.run(suite.seed, kPropertyCases);
      r.passed = report.passed() && report.cases >= kPropertyCases;
      r.detail = std::to_string(report.cases - report.failures) + "/" +
                 std::to_string(report.cases) + " cases hold";
      if (!report.first_failure.empty()) r.detail += "; first failure " + report.first_failure;
    }));
    all_suites = all_suites && checks.back().passed;
  }
  const bool in_budget = seconds_since(start) < kPropertyBudgetSeconds;
  checks.push_back({"5", "property-suites", all_suites && in_budget,
                    in_budget ? "6 suites x 500 cases" : "6 suites x 500 cases, exceeded 30 s budget"});
  return checks;
}

std::string format_checks(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const CheckResult& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id << ' ' << c.name << ": " << c.detail << '\n';
    if (c.passed) ++passed;
  }
  out << passed << '/' << checks.size() << " checks passed\n";
  return out.str();
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace ngstem::checks
