#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "ngstem/evaluation.hpp"
#include "ngstem/fixtures.hpp"

namespace ngstem::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ngstem_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
  }

  static std::string data(const char* name) { return std::string(NGSTEM_DATA_DIR) + "/" + name; }

  fs::path dir_;
};

TEST_F(CliTest, IndexStats) {
  const auto corpus = write("c.tsv", "cat\t3\ncar\t2\ndog\t5\n");
  const auto r = invoke({"index", "stats", "--corpus", corpus});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "entries=3 tokens=10\n");
}

TEST_F(CliTest, IndexStatsEmptyAndTopPrefixes) {
  EXPECT_EQ(invoke({"index", "stats", "--corpus", write("e.tsv", "")}).out, "entries=0 tokens=0\n");
  const auto r = invoke({"index", "stats", "--corpus", data(kCreateClusterFile), "--top", "1"});
  EXPECT_EQ(r.out, "entries=6 tokens=45\ncrea\t45\n");
}

TEST_F(CliTest, IndexStatsRawText) {
  const auto text = write("t.txt", "The cat, the CAT!\n");
  EXPECT_EQ(invoke({"index", "stats", "--raw-text", "--corpus", text, "--top", "0"}).out,
            "entries=2 tokens=4\n");
}

TEST_F(CliTest, MalformedCorpusNamesLine) {
  const auto corpus = write("bad.tsv", "cat\t3\ndog\tmany\n");
  const auto r = invoke({"index", "stats", "--corpus", corpus});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(CliTest, MissingCorpusIsInputError) {
  EXPECT_EQ(invoke({"index", "stats", "--corpus", (dir_ / "none.tsv").string()}).code, kExitInputError);
  EXPECT_EQ(invoke({"bogus"}).code, kExitInputError);
  EXPECT_EQ(invoke({}).code, kExitInputError);
}

TEST_F(CliTest, StemCreateCluster) {
  const auto r = invoke({"stem", "--corpus", data(kCreateClusterFile), "create creates", "created", "cat"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "create\tcreat\ncreates\tcreat\ncreated\tcreat\ncat\tcat\n");
}

TEST_F(CliTest, StemJugglingTrace) {
  const auto r = invoke({"stem", "--corpus", data(kJugglingFile), "--trace", "--format", "json", "juggling"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto parsed = nlohmann::json::parse(r.out);
  EXPECT_EQ(parsed[0]["stem"], "juggl");
  EXPECT_EQ(parsed[0]["stop_reason"], "positive-second-deviation");
  EXPECT_EQ(parsed[0]["steps"][1]["i"], 6);
  EXPECT_EQ(parsed[0]["steps"][1]["delta"], 215);
}

TEST_F(CliTest, StemFromInputFileAndOutFile) {
  const auto words = write("words.txt", "trabajan trabajar\ntrabajado\n\ntrabajador\n");
  const auto out_path = (dir_ / "stems.tsv").string();
  const auto r = invoke({"stem", "--corpus", data(kTrabajarClusterFile), "--input", words, "--out", out_path,
                         "--workers", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out_path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "trabajan\ttraba\ntrabajar\ttraba\ntrabajado\ttraba\ntrabajador\ttraba\n");
}

TEST_F(CliTest, StemFlags) {
  const auto corpus = data(kJugglingFile);
  EXPECT_EQ(invoke({"stem", "--corpus", corpus, "unknowable"}).out, "unknowable\tunknowable\n");
  EXPECT_EQ(invoke({"stem", "--corpus", corpus, "--no-oov-passthrough", "unknowable"}).out,
            "unknowable\tunknowa\n");
  EXPECT_EQ(invoke({"stem", "--corpus", corpus, "--floor", "400", "juggling"}).out, "juggling\tjuggl\n");
  EXPECT_EQ(invoke({"stem", "--corpus", corpus, "--gamma", "-1", "juggling"}).code, kExitInputError);
}

TEST_F(CliTest, StemNeedsWords) {
  const auto r = invoke({"stem", "--corpus", data(kJugglingFile)});
  EXPECT_EQ(r.code, kExitInputError);
  const auto blank = write("blank.txt", "  \n");
  EXPECT_EQ(invoke({"stem", "--corpus", data(kJugglingFile), "--input", blank}).code, kExitInputError);
}

TEST_F(CliTest, StemOutputIsStableUnderRestemming) {
  const auto corpus = data(kCreateClusterFile);
  const auto first = invoke({"stem", "--corpus", corpus, "creating creation creative cat"});
  std::istringstream rows(first.out);
  std::string line;
  std::vector<std::string> stems;
  while (std::getline(rows, line)) stems.push_back(line.substr(line.find('\t') + 1));
  std::vector<std::string> args{"stem", "--corpus", corpus};
  args.insert(args.end(), stems.begin(), stems.end());
  const auto second = invoke(args);
  std::istringstream again(second.out);
  for (const std::string& s : stems) {
    ASSERT_TRUE(std::getline(again, line));
    const std::string restemmed = line.substr(line.find('\t') + 1);
    EXPECT_EQ(s.rfind(restemmed, 0), 0u) << s << " -> " << restemmed;
  }
}

TEST_F(CliTest, EvalBundledTable) {
  const auto r = invoke({"eval", data(kRandomWordsFile), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto parsed = nlohmann::json::parse(r.out);
  EXPECT_EQ(parsed["reject_null"], false);
  EXPECT_NEAR(parsed["p_two_sided"].get<double>(), 0.54, 0.10);
  EXPECT_EQ(r.out, invoke({"eval", data(kRandomWordsFile), "--format", "json"}).out);
}

TEST_F(CliTest, EvalIdenticalStems) {
  const auto pairs = write("same.tsv", "walking\twalk\twalk\nhaze\thaze\thaze\n");
  const auto r = invoke({"eval", pairs});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("p_two_sided\t1.000000\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, EvalToyMatchesExactEnumeration) {
  // d = 2, 3, -1 -> ranks 2, 3, 1 -> |S| = 4; exact p = 4/8 = 0.5 (oracle:
  // sign patterns with |S| >= 4 are +++, ---, ++-, --+).
  const auto pairs = write("toy.tsv", "abcdef\tabcd\tabcdef\nabcdefg\tabcd\tabcdefg\nabcde\tabcde\tabcd\n");
  const auto r = invoke({"eval", pairs, "--records"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("w\t4.000000\n"), std::string::npos) << r.out;
  const std::vector<double> x{2, 3, 0};
  const std::vector<double> y{0, 0, 1};
  EXPECT_DOUBLE_EQ(wilcoxon_exact(x, y).p_two_sided, 0.5);
}

TEST_F(CliTest, EvalMismatchExitsThree) {
  const auto pairs = write("bad_ld.tsv", "Parsons\tParson\tParson\t1\t1\nAgreement\tAgreement\tAgree\t0\t3\n");
  const auto r = invoke({"eval", pairs});
  EXPECT_EQ(r.code, kExitValidationMismatch);
  EXPECT_NE(r.err.find("line 2: agreement ld_b stored 3, recomputed 4"), std::string::npos) << r.err;
  EXPECT_FALSE(r.out.empty());
}

TEST_F(CliTest, EvalMalformedRowExitsTwo) {
  const auto pairs = write("bad.tsv", "a\tb\tc\nfoo\tbar\n");
  const auto r = invoke({"eval", pairs});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(invoke({"eval", data(kRandomWordsFile), "--alpha", "1.5"}).code, kExitInputError);
  EXPECT_EQ(invoke({"eval", write("empty.tsv", "# nothing\n")}).code, kExitInputError);
}

TEST_F(CliTest, SelftestPassesAndIsDeterministic) {
  const auto first = invoke({"selftest"});
  EXPECT_EQ(first.code, kExitOk) << first.out;
  EXPECT_EQ(first.out, invoke({"selftest"}).out);
}

TEST_F(CliTest, SelftestFromDiskMatchesBundled) {
  EXPECT_EQ(invoke({"selftest", "--data-dir", NGSTEM_DATA_DIR}).out, invoke({"selftest"}).out);
}

TEST_F(CliTest, SelftestNamesCorruptedFixture) {
  for (const char* name : {kRandomWordsFile, kJugglingFile, kCreateClusterFile, kTrabajarClusterFile,
                           kDificilClusterFile}) {
    fs::copy_file(data(name), dir_ / name);
  }
  // Break one stored distance and one juggling count.
  std::ifstream table_in(dir_ / kRandomWordsFile);
  std::stringstream table;
  table << table_in.rdbuf();
  table_in.close();
  std::string text = table.str();
  text.replace(text.find("Agreement\tAgreement\tAgree\t0\t4"), 29, "Agreement\tAgreement\tAgree\t0\t9");
  write(kRandomWordsFile, text);
  write(kJugglingFile, "jugged\t186\njuggle\t250\njuggling\t328\n");

  const auto r = invoke({"selftest", "--data-dir", dir_.string()});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.out.find("FAIL 3 juggling-trace"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS 2 levenshtein-reproduction: 99/100"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("stored 9 recomputed 4"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace ngstem::cli
