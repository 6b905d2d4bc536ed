#include "ngstem/checks/oracles.hpp"

#include <algorithm>
#include <array>

namespace ngstem::checks {

std::uint64_t linear_scan_frequency(std::span<const CorpusEntry> entries, TokenView prefix) {
  std::uint64_t total = 0;
  for (const CorpusEntry& e : entries) {
    if (e.word.size() >= prefix.size() && TokenView(e.word).substr(0, prefix.size()) == prefix) {
      total += static_cast<std::uint64_t>(e.count);
    }
  }
  return total;
}

std::size_t recursive_levenshtein(TokenView s, TokenView t) {
  if (s.empty()) return t.size();
  if (t.empty()) return s.size();
  const std::size_t cost = s.back() == t.back() ? 0 : 1;
  const TokenView s_rest = s.substr(0, s.size() - 1);
  const TokenView t_rest = t.substr(0, t.size() - 1);
  return std::min({recursive_levenshtein(s_rest, t) + 1, recursive_levenshtein(s, t_rest) + 1,
                   recursive_levenshtein(s_rest, t_rest) + cost});
}

double exact_signed_rank_p(std::size_t n, std::int64_t statistic) {
  const std::int64_t total = static_cast<std::int64_t>(n * (n + 1) / 2);
  std::uint64_t extreme = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::int64_t positive = 0;
    for (std::size_t r = 1; r <= n; ++r) {
      if ((mask >> (r - 1)) & 1U) positive += static_cast<std::int64_t>(r);
    }
    const std::int64_t s = 2 * positive - total;
    if ((s < 0 ? -s : s) >= statistic) ++extreme;
  }
  return static_cast<double>(extreme) / static_cast<double>(subsets);
}

Token random_word(Rng& rng, std::size_t min_len, std::size_t max_len) {
  static constexpr std::array<char32_t, 5> kAlphabet{U'a', U'b', U'c', U'd', U'é'};
  std::uniform_int_distribution<std::size_t> length(min_len, max_len);
  std::uniform_int_distribution<std::size_t> letter(0, kAlphabet.size() - 1);
  Token word(length(rng), U'a');
  for (char32_t& c : word) c = kAlphabet[letter(rng)];
  return word;
}

std::vector<CorpusEntry> random_corpus(Rng& rng) {
  static const std::array<Token, 8> kSuffixes{U"", U"s", U"ing", U"ed", U"er", U"ation", U"ly", U"ness"};
  std::uniform_int_distribution<std::int64_t> count(1, 500);
  std::uniform_int_distribution<std::size_t> families(1, 4);
  std::uniform_int_distribution<std::size_t> members(1, 6);
  std::uniform_int_distribution<std::size_t> suffix(0, kSuffixes.size() - 1);
  std::uniform_int_distribution<std::size_t> noise(0, 8);

  std::vector<CorpusEntry> entries;
  const std::size_t family_count = families(rng);
  for (std::size_t f = 0; f < family_count; ++f) {
    const Token base = random_word(rng, 3, 6);
    const std::size_t member_count = members(rng);
    for (std::size_t m = 0; m < member_count; ++m) {
      entries.push_back({base + kSuffixes[suffix(rng)], count(rng)});
    }
  }
  const std::size_t noise_count = noise(rng);
  for (std::size_t k = 0; k < noise_count; ++k) {
    entries.push_back({random_word(rng, 1, 9), count(rng)});
  }
  return entries;
}

}  // namespace ngstem::checks
