#include "ngstem/stemmer.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace ngstem {

std::uint64_t NGramProfile::at(std::size_t i) const {
  if (i < StemmerConfig::min_word_len || i > length()) {
    throw std::out_of_range("n-gram length " + std::to_string(i) + " outside [4, " +
                            std::to_string(length()) + "]");
  }
  return frequencies[i - StemmerConfig::min_word_len];
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::word_too_short: return "word-too-short";
    case StopReason::end_of_word: return "end-of-word";
    case StopReason::positive_second_deviation: return "positive-second-deviation";
    case StopReason::oov_passthrough: return "oov-passthrough";
  }
  return "unknown";
}

NGramProfile ngram_profile(const PrefixFrequencyIndex& index, TokenView word,
                           const StemmerConfig& config) {
  if (word.size() < StemmerConfig::min_word_len) {
    throw std::invalid_argument("word shorter than 4 characters has no n-gram profile");
  }
  NGramProfile profile{Token(word), {}};
  profile.frequencies.reserve(word.size() - StemmerConfig::min_word_len + 1);
  for (std::size_t i = StemmerConfig::min_word_len; i <= word.size(); ++i) {
    profile.frequencies.push_back(index.frequency(word.substr(0, i), config.frequency_floor));
  }
  return profile;
}

std::uint64_t first_order_deviation(const NGramProfile& profile, std::size_t i) {
  const std::uint64_t current = profile.at(i);
  if (i == StemmerConfig::min_word_len) return 0;
  const std::uint64_t previous = profile.at(i - 1);
  return current > previous ? current - previous : previous - current;
}

SecondOrderDeviation second_order_deviation(std::uint64_t lambda,
                                            std::optional<std::uint64_t> previous) {
  if (!previous) return {.negative_infinity = true, .value = 0};
  return {.negative_infinity = false,
          .value = static_cast<std::int64_t>(lambda) - static_cast<std::int64_t>(*previous)};
}

Phase1Outcome phase1(const NGramProfile& profile, const StemmerConfig& config) {
  const std::size_t length = profile.length();
  if (length < StemmerConfig::min_word_len) {
    throw std::invalid_argument("phase 1 needs a word of at least 4 characters");
  }
  Phase1Outcome out;
  out.psi = StemmerConfig::min_word_len;
  out.trace.stop_reason = StopReason::end_of_word;

  std::optional<std::uint64_t> previous_lambda;  // lambda_4: the sentinel
  for (std::size_t i = StemmerConfig::min_word_len + 1; i <= length; ++i) {
    const std::uint64_t lambda = first_order_deviation(profile, i);
    if (lambda > config.gamma) {
      out.psi = profile.at(i) > profile.at(i - 1) ? i : i - 1;
    } else {
      out.psi = i;
    }

    StemStep step{.i = i, .frequency = profile.at(i), .lambda = lambda, .delta = {}, .psi = out.psi};
    if (i == length) {
      out.trace.steps.push_back(step);
      out.trace.stop_reason = StopReason::end_of_word;
      break;
    }
    step.delta = second_order_deviation(lambda, previous_lambda);
    out.trace.steps.push_back(step);
    if (step.delta->positive()) {
      out.trace.stop_reason = StopReason::positive_second_deviation;
      break;
    }
    previous_lambda = lambda;
  }
  return out;
}

std::size_t phase2(const NGramProfile& profile, std::size_t psi, const StemmerConfig& /*config*/,
                   StemTrace& trace) {
  trace.phase2_applied = false;
  const std::size_t length = profile.length();
  if (psi != length || length < StemmerConfig::min_word_len + 2) return psi;
  const bool flat_tail =
      profile.at(length - 2) == profile.at(length - 1) && profile.at(length - 1) == profile.at(length);
  if (!flat_tail || psi <= 6) return psi;  // psi - 3 must stay above 3
  trace.phase2_applied = true;
  return psi - 3;
}

StemResult stem(const PrefixFrequencyIndex& index, TokenView word, const StemmerConfig& config) {
  StemResult result;
  result.word = normalize_token(word);
  if (result.word.size() < StemmerConfig::min_word_len) {
    result.stem = result.word;
    result.trace.stop_reason = StopReason::word_too_short;
    return result;
  }

  const NGramProfile profile = ngram_profile(index, result.word, config);
  if (config.oov_passthrough && profile.at(StemmerConfig::min_word_len) == 0) {
    result.stem = result.word;
    result.trace.stop_reason = StopReason::oov_passthrough;
    return result;
  }

  Phase1Outcome outcome = phase1(profile, config);
  result.trace = std::move(outcome.trace);
  const std::size_t psi = phase2(profile, outcome.psi, config, result.trace);
  result.stem = result.word.substr(0, psi);
  return result;
}

std::vector<BatchItem> stem_batch(const PrefixFrequencyIndex& index, std::span<const Token> words,
                                  const StemmerConfig& config, unsigned workers) {
  std::vector<BatchItem> out(words.size());
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      try {
        out[k].result = stem(index, words[k], config);
      } catch (const std::exception& e) {
        out[k].error = e.what();
      }
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(words.size())));
  if (workers <= 1) {
    run(0, words.size());
    return out;
  }
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (words.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < words.size(); begin += chunk) {
      pool.emplace_back(run, begin, std::min(words.size(), begin + chunk));
    }
  }
  return out;
}

}  // namespace ngstem
