#include "ngstem/checks/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ngstem/checks/oracles.hpp"
#include "ngstem/corpus_index.hpp"
#include "ngstem/evaluation.hpp"
#include "ngstem/stemmer.hpp"

namespace ngstem::checks {
namespace {

// Records the first failure of a case; later ones only bump the counter.
class CaseLog {
 public:
  explicit CaseLog(PropertyReport& report) : report_(report) {}

  void fail(std::size_t case_index, const std::string& what) {
    if (failed_) return;
    failed_ = true;
    ++report_.failures;
    if (report_.first_failure.empty()) {
      report_.first_failure = "case " + std::to_string(case_index) + ": " + what;
    }
  }

 private:
  PropertyReport& report_;
  bool failed_ = false;
};

std::string show(TokenView t) { return "'" + encode_utf8(t) + "'"; }

StemmerConfig random_config(Rng& rng) {
  static constexpr std::uint64_t kGammas[] = {0, 0, 1, 3, 25};
  static constexpr std::uint64_t kFloors[] = {0, 0, 0, 2, 10};
  std::uniform_int_distribution<std::size_t> pick(0, 4);
  StemmerConfig config;
  config.gamma = kGammas[pick(rng)];
  config.frequency_floor = kFloors[pick(rng)];
  config.oov_passthrough = std::bernoulli_distribution(0.5)(rng);
  return config;
}

// A query word: usually a corpus word, sometimes an arbitrary one.
Token random_query(Rng& rng, const std::vector<CorpusEntry>& entries) {
  if (!entries.empty() && std::bernoulli_distribution(0.75)(rng)) {
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    return entries[pick(rng)].word;
  }
  return random_word(rng, 1, 10);
}

}  // namespace

PropertyReport prefix_index_properties(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  PropertyReport report;
  for (std::size_t c = 0; c < cases; ++c, ++report.cases) {
    CaseLog log(report);
    std::vector<CorpusEntry> entries = random_corpus(rng);
    const auto index = PrefixFrequencyIndex::build(entries);

    const std::uint64_t sum = std::accumulate(
        entries.begin(), entries.end(), std::uint64_t{0},
        [](std::uint64_t acc, const CorpusEntry& e) { return acc + static_cast<std::uint64_t>(e.count); });
    if (index.total_tokens() != sum || index.frequency(U"") != sum) {
      log.fail(c, "total_tokens differs from the sum of counts");
    }

    std::vector<CorpusEntry> shuffled = entries;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto rebuilt = PrefixFrequencyIndex::build(shuffled);
    const std::uint64_t floor = std::uniform_int_distribution<std::uint64_t>(1, 600)(rng);

    for (const CorpusEntry& e : entries) {
      std::uint64_t parent = index.frequency(U"");
      for (std::size_t len = 1; len <= e.word.size(); ++len) {
        const TokenView prefix = TokenView(e.word).substr(0, len);
        const std::uint64_t got = prefix_frequency(index, prefix);
        const std::uint64_t expected = linear_scan_frequency(entries, prefix);
        if (got != expected) {
          log.fail(c, "frequency(" + show(prefix) + ") = " + std::to_string(got) +
                          ", linear scan says " + std::to_string(expected));
        }
        if (got > parent) log.fail(c, "frequency rises at " + show(prefix));
        if (rebuilt.frequency(prefix) != got) log.fail(c, "build depends on entry order");
        const std::uint64_t floored = prefix_frequency(index, prefix, floor);
        if (floored != (expected >= floor ? expected : 0)) {
          log.fail(c, "floor " + std::to_string(floor) + " mishandled at " + show(prefix));
        }
        parent = got;
      }
      Token extended = e.word;
      extended.push_back(U'z');
      if (index.frequency(extended) != linear_scan_frequency(entries, extended)) {
        log.fail(c, "absent prefix " + show(extended) + " is not 0");
      }
    }
  }
  return report;
}

PropertyReport stem_bounds_properties(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  PropertyReport report;
  for (std::size_t c = 0; c < cases; ++c, ++report.cases) {
    CaseLog log(report);
    const auto entries = random_corpus(rng);
    const auto index = PrefixFrequencyIndex::build(entries);
    const StemmerConfig config = random_config(rng);
    for (int q = 0; q < 4; ++q) {
      const Token word = random_query(rng, entries);
      const StemResult r = stem(index, word, config);
      if (TokenView(r.word).substr(0, r.stem.size()) != r.stem) {
        log.fail(c, show(r.stem) + " is not a prefix of " + show(r.word));
      }
      if (r.word.size() <= 3 && r.stem != r.word) log.fail(c, "short word " + show(r.word) + " changed");
      if (r.word.size() >= 4 && (r.stem.size() < 4 || r.stem.size() > r.word.size())) {
        log.fail(c, "stem " + show(r.stem) + " of " + show(r.word) + " violates length bounds");
      }
      for (const StemStep& s : r.trace.steps) {
        if (s.psi < 4 || s.psi > r.word.size()) log.fail(c, "psi outside [4, L] in trace");
      }
    }
  }
  return report;
}

PropertyReport scale_invariance_properties(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  PropertyReport report;
  std::uniform_int_distribution<std::int64_t> factor(2, 1000);
  for (std::size_t c = 0; c < cases; ++c, ++report.cases) {
    CaseLog log(report);
    const auto entries = random_corpus(rng);
    auto scaled = entries;
    const std::int64_t k = factor(rng);
    for (CorpusEntry& e : scaled) e.count *= k;
    const auto index = PrefixFrequencyIndex::build(entries);
    const auto scaled_index = PrefixFrequencyIndex::build(scaled);
    StemmerConfig config;
    config.oov_passthrough = std::bernoulli_distribution(0.5)(rng);
    for (int q = 0; q < 4; ++q) {
      const Token word = random_query(rng, entries);
      const Token a = stem(index, word, config).stem;
      const Token b = stem(scaled_index, word, config).stem;
      if (a != b) {
        log.fail(c, show(word) + " stems to " + show(a) + " but to " + show(b) + " after x" +
                        std::to_string(k));
      }
    }
  }
  return report;
}

PropertyReport levenshtein_properties(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  PropertyReport report;
  for (std::size_t c = 0; c < cases; ++c, ++report.cases) {
    CaseLog log(report);
    const Token s = random_word(rng, 0, 7);
    const Token t = random_word(rng, 0, 7);
    const Token u = random_word(rng, 0, 7);
    const std::size_t st = levenshtein(s, t);
    const std::size_t ts = levenshtein(t, s);
    const std::size_t su = levenshtein(s, u);
    const std::size_t ut = levenshtein(u, t);
    if (st != recursive_levenshtein(s, t)) {
      log.fail(c, "levenshtein(" + show(s) + ", " + show(t) + ") disagrees with recursion");
    }
    if (st != ts) log.fail(c, "asymmetric on " + show(s) + ", " + show(t));
    if (levenshtein(s, s) != 0) log.fail(c, "nonzero self distance for " + show(s));
    if ((st == 0) != (s == t)) log.fail(c, "zero distance between distinct strings");
    if (st > su + ut) log.fail(c, "triangle inequality broken via " + show(u));
  }
  return report;
}

PropertyReport wilcoxon_properties(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  PropertyReport report;
  std::uniform_int_distribution<std::size_t> size(8, kMaxExactSampleSize);
  std::uniform_int_distribution<int> zeros(0, 3);
  std::uniform_real_distribution<double> base(0.0, 50.0);
  std::bernoulli_distribution sign(0.5);
  const WilcoxonOptions corrected{.continuity_correction = true, .tie_correction = false};

  for (std::size_t c = 0; c < cases; ++c, ++report.cases) {
    CaseLog log(report);
    const std::size_t n_r = size(rng);
    // Distinct magnitudes 1..n_r in random order with random signs, plus a
    // few zero differences that must be discarded.
    std::vector<double> magnitudes(n_r);
    std::iota(magnitudes.begin(), magnitudes.end(), 1.0);
    std::shuffle(magnitudes.begin(), magnitudes.end(), rng);
    std::vector<double> x;
    std::vector<double> y;
    for (double m : magnitudes) {
      const double b = std::round(base(rng));
      y.push_back(b);
      x.push_back(sign(rng) ? b + m : b - m);
    }
    for (int z = zeros(rng); z > 0; --z) {
      const double b = std::round(base(rng));
      x.push_back(b);
      y.push_back(b);
    }

    const WilcoxonResult approx = wilcoxon_signed_rank(x, y, corrected);
    const WilcoxonResult exact = wilcoxon_exact(x, y);
    if (approx.n_r != n_r || exact.n_r != n_r) log.fail(c, "zero differences were not discarded");
    if (std::fabs(approx.p_two_sided - exact.p_two_sided) > 0.05) {
      std::ostringstream msg;
      msg << "N_r=" << n_r << " W=" << approx.w << " normal p=" << approx.p_two_sided
          << " exact p=" << exact.p_two_sided;
      log.fail(c, msg.str());
    }

    std::vector<double> x2 = x;
    std::vector<double> y2 = y;
    const double scale = std::uniform_int_distribution<int>(1, 9)(rng);
    const double shift = std::uniform_int_distribution<int>(-20, 20)(rng);
    for (double& v : x2) v = scale * v + shift;
    for (double& v : y2) v = scale * v + shift;
    const WilcoxonResult mapped = wilcoxon_signed_rank(x2, y2);
    const WilcoxonResult plain = wilcoxon_signed_rank(x, y);
    if (mapped.w != plain.w || mapped.p_two_sided != plain.p_two_sided) {
      log.fail(c, "W changed under a positive affine map");
    }
    const WilcoxonResult swapped = wilcoxon_signed_rank(y, x);
    if (swapped.w != plain.w || swapped.p_two_sided != plain.p_two_sided) {
      log.fail(c, "W changed when swapping the samples");
    }
  }
  return report;
}

PropertyReport stem_distance_properties(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  PropertyReport report;
  for (std::size_t c = 0; c < cases; ++c, ++report.cases) {
    CaseLog log(report);
    const auto entries = random_corpus(rng);
    const auto index = PrefixFrequencyIndex::build(entries);
    const StemmerConfig config = random_config(rng);
    for (int q = 0; q < 4; ++q) {
      const StemResult r = stem(index, random_query(rng, entries), config);
      if (levenshtein(r.word, r.stem) != r.word.size() - r.stem.size()) {
        log.fail(c, "distance from " + show(r.word) + " to its stem " + show(r.stem) +
                        " is not the stripped length");
      }
    }
  }
  return report;
}

}  // namespace ngstem::checks
