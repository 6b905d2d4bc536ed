#include "ngstem/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "ngstem/errors.hpp"

namespace ngstem {
namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(0, "cannot open fixture '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

FixtureSet load_fixtures(const std::filesystem::path& dir) {
  return FixtureSet{
      slurp(dir / kRandomWordsFile),     slurp(dir / kJugglingFile),
      slurp(dir / kCreateClusterFile),   slurp(dir / kTrabajarClusterFile),
      slurp(dir / kDificilClusterFile),
  };
}

}  // namespace ngstem
