#pragma once

#include <filesystem>
#include <string>

namespace ngstem {

/// Reference data shipped with the toolkit.
struct FixtureSet {
  std::string random_words;      // 100 words, two stems each, stored distances
  std::string juggling;          // corpus with jugg* = 915 ... juggling* = 328
  std::string create_cluster;    // English create/creates/... cluster
  std::string trabajar_cluster;  // Spanish trabajan/trabajar/... cluster
  std::string dificil_cluster;   // Portuguese dificil/dificilmente cluster
};

inline constexpr const char* kRandomWordsFile = "random_words_100.tsv";
inline constexpr const char* kJugglingFile = "juggling.tsv";
inline constexpr const char* kCreateClusterFile = "create_cluster.tsv";
inline constexpr const char* kTrabajarClusterFile = "trabajar_cluster.tsv";
inline constexpr const char* kDificilClusterFile = "dificil_cluster.tsv";

/// Copies compiled into the library.
const FixtureSet& bundled_fixtures();

/// Reads the same files from `dir`. Throws InputError when one is missing.
FixtureSet load_fixtures(const std::filesystem::path& dir);

}  // namespace ngstem
