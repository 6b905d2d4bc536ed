#include "ngstem/corpus_index.hpp"

#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "ngstem/checks/oracles.hpp"
#include "ngstem/errors.hpp"

namespace ngstem {
namespace {

std::vector<CorpusEntry> cat_car_dog() { return {{U"cat", 3}, {U"car", 2}, {U"dog", 5}}; }

TEST(NormalizeTokenTest, CaseFolds) {
  EXPECT_EQ(normalize_token(U"Parsons"), U"parsons");
  EXPECT_EQ(normalize_token(U"juggling"), U"juggling");
  EXPECT_EQ(normalize_token(U"CREAT"), U"creat");
  EXPECT_EQ(normalize_token("DIFÍCIL"), U"difícil");
}

TEST(NormalizeTokenTest, KeepsDiacritics) { EXPECT_EQ(normalize_token(U"Coração"), U"coração"); }

TEST(NormalizeTokenTest, RejectsEmpty) {
  EXPECT_THROW(normalize_token(TokenView{}), std::invalid_argument);
  EXPECT_THROW(normalize_token(std::string_view{}), std::invalid_argument);
}

TEST(TokenizeTextTest, SplitsOnNonAlphabetic) {
  EXPECT_EQ(tokenize_text(U"The cat, the CAT!"), (std::vector<Token>{U"the", U"cat", U"the", U"cat"}));
  EXPECT_TRUE(tokenize_text(U"").empty());
  EXPECT_EQ(tokenize_text(U"it's"), (std::vector<Token>{U"it", U"s"}));
  EXPECT_EQ(tokenize_text(U"año2024 Año"), (std::vector<Token>{U"año", U"año"}));
}

TEST(BuildIndexTest, SumsCounts) {
  const auto index = PrefixFrequencyIndex::build(cat_car_dog());
  EXPECT_EQ(index.total_tokens(), 10u);
  EXPECT_EQ(index.entry_count(), 3u);
}

TEST(BuildIndexTest, MergesDuplicates) {
  const std::vector<CorpusEntry> entries{{U"cat", 3}, {U"cat", 4}};
  const auto index = PrefixFrequencyIndex::build(entries);
  EXPECT_EQ(index.frequency(U"cat"), checks::linear_scan_frequency(entries, U"cat"));
  EXPECT_EQ(index.frequency(U"cat"), 7u);
  EXPECT_EQ(index.entry_count(), 1u);
}

TEST(BuildIndexTest, EmptyCorpus) {
  const auto index = PrefixFrequencyIndex::build({});
  EXPECT_EQ(index.total_tokens(), 0u);
  EXPECT_EQ(index.frequency(U"a"), 0u);
}

TEST(BuildIndexTest, RejectsBadEntriesWithPosition) {
  const std::vector<CorpusEntry> zero{{U"cat", 3}, {U"dog", 0}};
  try {
    PrefixFrequencyIndex::build(zero);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("entry 2"), std::string::npos) << e.what();
  }
  const std::vector<CorpusEntry> negative{{U"cat", -1}};
  EXPECT_THROW(PrefixFrequencyIndex::build(negative), InputError);
  const std::vector<CorpusEntry> empty_word{{U"", 4}};
  EXPECT_THROW(PrefixFrequencyIndex::build(empty_word), InputError);
  const std::vector<CorpusEntry> spaced{{U"ca t", 4}};
  EXPECT_THROW(PrefixFrequencyIndex::build(spaced), InputError);
}

TEST(PrefixFrequencyTest, MatchesLinearScan) {
  const auto entries = cat_car_dog();
  const auto index = PrefixFrequencyIndex::build(entries);
  EXPECT_EQ(checks::linear_scan_frequency(entries, U"ca"), 5u);
  EXPECT_EQ(prefix_frequency(index, U"ca", 0), 5u);
  EXPECT_EQ(prefix_frequency(index, U"cats", 0), 0u);
  EXPECT_EQ(prefix_frequency(index, U"ca", 10), 0u);
  EXPECT_EQ(prefix_frequency(index, U"ca", 5), 5u);
  EXPECT_EQ(prefix_frequency(index, U"d", 0), 5u);
}

TEST(PrefixFrequencyTest, RejectsEmptyPrefix) {
  const auto index = PrefixFrequencyIndex::build(cat_car_dog());
  EXPECT_THROW(prefix_frequency(index, U""), std::invalid_argument);
  EXPECT_EQ(index.frequency(U""), 10u);
}

TEST(PrefixFrequencyTest, NonAsciiPrefixesCountScalars) {
  const std::vector<CorpusEntry> entries{{U"difícil", 4}, {U"dificil", 2}, {U"difícilmente", 3}};
  const auto index = PrefixFrequencyIndex::build(entries);
  EXPECT_EQ(index.frequency(U"difí"), 7u);
  EXPECT_EQ(index.frequency(U"difi"), 2u);
  EXPECT_EQ(index.frequency(U"dif"), 9u);
}

TEST(TopPrefixesTest, OrdersByCountThenLexically) {
  const std::vector<CorpusEntry> entries{
      {U"abcd", 2}, {U"abce", 2}, {U"zzzz", 4}, {U"mmmmm", 4}, {U"ab", 100}, {U"bcde", 1}};
  const auto index = PrefixFrequencyIndex::build(entries);
  const auto top = index.top_prefixes(4, 3);
  ASSERT_EQ(top.size(), 3u);
  EXPECT_EQ(top[0], (std::pair<Token, std::uint64_t>{U"mmmm", 4}));
  EXPECT_EQ(top[1], (std::pair<Token, std::uint64_t>{U"zzzz", 4}));
  EXPECT_EQ(top[2].first, U"abcd");
}

TEST(ReadCorpusTsvTest, ParsesCommentsDuplicatesAndCase) {
  std::istringstream in("# comment\nCat\t3\n\ncat\t4\r\ndog\t5\n");
  const auto entries = read_corpus_tsv(in);
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[0].word, U"cat");
  const auto index = PrefixFrequencyIndex::build(entries);
  EXPECT_EQ(index.frequency(U"cat"), 7u);
  EXPECT_EQ(index.total_tokens(), 12u);
}

TEST(ReadCorpusTsvTest, ReportsMalformedLine) {
  for (const char* text : {"cat\t3\ndog\tfive\n", "cat\t3\ndog\n", "cat\t3\ndog\t0\n",
                           "cat\t3\ndog\t-2\n", "cat\t3\n\t4\n", "cat\t3\ndog\t4x\n"}) {
    std::istringstream in(text);
    try {
      read_corpus_tsv(in);
      FAIL() << "accepted: " << text;
    } catch (const InputError& e) {
      EXPECT_EQ(e.line(), 2u) << text;
    }
  }
}

TEST(ReadRawTextTest, CountsTokens) {
  std::istringstream in("The cat, the CAT!\nit's a cat\n");
  const auto entries = read_raw_text(in);
  const auto index = PrefixFrequencyIndex::build(entries);
  EXPECT_EQ(index.frequency(U"cat"), 3u);
  EXPECT_EQ(index.frequency(U"the"), 2u);
  EXPECT_EQ(index.total_tokens(), 8u);
  EXPECT_EQ(index.entry_count(), 5u);
}

TEST(ReadRawTextTest, RejectsInvalidUtf8) {
  std::istringstream in("fine\nbad \xFF byte\n");
  try {
    read_raw_text(in);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(LoadCorpusTest, MissingFileIsInputError) {
  EXPECT_THROW(load_corpus("/nonexistent/corpus.tsv", false), InputError);
}

TEST(LoadCorpusTest, BundledJugglingFixtureReproducesTable) {
  const auto index = PrefixFrequencyIndex::build(load_corpus(NGSTEM_DATA_DIR "/juggling.tsv", false));
  EXPECT_EQ(index.frequency(U"jugg"), 915u);
  EXPECT_EQ(index.frequency(U"juggl"), 729u);
  EXPECT_EQ(index.frequency(U"juggli"), 328u);
  EXPECT_EQ(index.frequency(U"jugglin"), 328u);
  EXPECT_EQ(index.frequency(U"juggling"), 328u);
}

}  // namespace
}  // namespace ngstem
