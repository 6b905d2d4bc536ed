#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ngstem/unicode.hpp"

namespace ngstem {

/// One word of the corpus and its token frequency.
struct CorpusEntry {
  Token word;
  std::int64_t count = 0;
};

/// Lowercases every character; throws std::invalid_argument on empty input.
Token normalize_token(TokenView raw);
Token normalize_token(std::string_view utf8);

/// Maximal runs of alphabetic characters, normalized, in text order.
std::vector<Token> tokenize_text(TokenView text);

/// Immutable prefix trie. Every node holds the summed count of all corpus
/// words that start with the node's prefix, so a lookup answers the same
/// question as a wildcard query `prefix*` against the corpus.
class PrefixFrequencyIndex {
 public:
  /// Duplicate words are merged by summing. Throws InputError naming the
  /// 1-based entry position when a count is < 1, a word is empty or a word
  /// contains whitespace.
  static PrefixFrequencyIndex build(std::span<const CorpusEntry> entries);

  /// Cumulative count for `prefix`, or 0 when that count is below `floor`.
  /// The empty prefix yields total_tokens().
  std::uint64_t frequency(TokenView prefix, std::uint64_t floor = 0) const;

  std::uint64_t total_tokens() const { return nodes_.empty() ? 0 : nodes_.front().count; }
  /// Distinct words after merging duplicates.
  std::size_t entry_count() const { return entry_count_; }

  /// The `k` most frequent prefixes of exactly `length` characters, by
  /// descending count and then lexicographically.
  std::vector<std::pair<Token, std::uint64_t>> top_prefixes(std::size_t length,
                                                            std::size_t k) const;

 private:
  struct Node {
    std::uint64_t count = 0;
    // Sorted by character.
    std::vector<std::pair<char32_t, std::uint32_t>> children;
  };

  const Node* find(TokenView prefix) const;

  std::vector<Node> nodes_;
  std::size_t entry_count_ = 0;
};

/// Free-function form of PrefixFrequencyIndex::frequency. Rejects an empty
/// prefix with std::invalid_argument.
std::uint64_t prefix_frequency(const PrefixFrequencyIndex& index, TokenView prefix,
                               std::uint64_t floor = 0);

/// `word<TAB>count` lines; `#` lines and blank lines are skipped. Words are
/// normalized on read. Throws InputError with the offending line number.
std::vector<CorpusEntry> read_corpus_tsv(std::istream& in);

/// Tokenizes free text and counts every token once per occurrence.
std::vector<CorpusEntry> read_raw_text(std::istream& in);

/// Opens `path` and dispatches to read_corpus_tsv or read_raw_text.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path, bool raw_text);

}  // namespace ngstem
