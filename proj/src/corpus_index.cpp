#include "ngstem/corpus_index.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "ngstem/errors.hpp"

namespace ngstem {

Token normalize_token(TokenView raw) {
  if (raw.empty()) throw std::invalid_argument("cannot normalize an empty token");
  Token out(raw);
  for (char32_t& c : out) c = to_lower(c);
  return out;
}

Token normalize_token(std::string_view utf8) { return normalize_token(decode_utf8(utf8)); }

std::vector<Token> tokenize_text(TokenView text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_alphabetic(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_alphabetic(text[j])) ++j;
    tokens.push_back(normalize_token(text.substr(i, j - i)));
    i = j;
  }
  return tokens;
}

PrefixFrequencyIndex PrefixFrequencyIndex::build(std::span<const CorpusEntry> entries) {
  std::map<Token, std::uint64_t> merged;
  for (std::size_t row = 0; row < entries.size(); ++row) {
    const CorpusEntry& e = entries[row];
    if (e.word.empty()) throw InputError(0, "entry " + std::to_string(row + 1) + ": empty word");
    if (e.count < 1) {
      throw InputError(0, "entry " + std::to_string(row + 1) + " (" + encode_utf8(e.word) +
                              "): count must be positive, got " + std::to_string(e.count));
    }
    if (std::any_of(e.word.begin(), e.word.end(), is_space)) {
      throw InputError(0, "entry " + std::to_string(row + 1) + ": word contains whitespace");
    }
    auto& slot = merged[e.word];
    const auto add = static_cast<std::uint64_t>(e.count);
    if (slot > std::numeric_limits<std::uint64_t>::max() - add) {
      throw InputError(0, "entry " + std::to_string(row + 1) + ": count overflow");
    }
    slot += add;
  }

  PrefixFrequencyIndex index;
  index.entry_count_ = merged.size();
  index.nodes_.emplace_back();
  // Words arrive in lexicographic order, so new children are always appended
  // after existing ones and every child list stays sorted.
  for (const auto& [word, count] : merged) {
    std::uint32_t at = 0;
    index.nodes_[at].count += count;
    for (char32_t c : word) {
      auto& children = index.nodes_[at].children;
      if (children.empty() || children.back().first != c) {
        const auto next = static_cast<std::uint32_t>(index.nodes_.size());
        index.nodes_[at].children.emplace_back(c, next);
        index.nodes_.emplace_back();
        at = next;
      } else {
        at = children.back().second;
      }
      index.nodes_[at].count += count;
    }
  }
  return index;
}

const PrefixFrequencyIndex::Node* PrefixFrequencyIndex::find(TokenView prefix) const {
  if (nodes_.empty()) return nullptr;
  const Node* node = &nodes_.front();
  for (char32_t c : prefix) {
    auto it = std::lower_bound(node->children.begin(), node->children.end(), c,
                               [](const auto& child, char32_t key) { return child.first < key; });
    if (it == node->children.end() || it->first != c) return nullptr;
    node = &nodes_[it->second];
  }
  return node;
}

std::uint64_t PrefixFrequencyIndex::frequency(TokenView prefix, std::uint64_t floor) const {
  const Node* node = find(prefix);
  if (node == nullptr || node->count < floor) return 0;
  return node->count;
}

std::vector<std::pair<Token, std::uint64_t>> PrefixFrequencyIndex::top_prefixes(
    std::size_t length, std::size_t k) const {
  std::vector<std::pair<Token, std::uint64_t>> found;
  if (nodes_.empty() || length == 0) return found;
  Token path;
  // Depth-first walk down to `length`.
  auto walk = [&](auto&& self, std::uint32_t at) -> void {
    if (path.size() == length) {
      found.emplace_back(path, nodes_[at].count);
      return;
    }
    for (const auto& [c, child] : nodes_[at].children) {
      path.push_back(c);
      self(self, child);
      path.pop_back();
    }
  };
  walk(walk, 0);
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (found.size() > k) found.resize(k);
  return found;
}

std::uint64_t prefix_frequency(const PrefixFrequencyIndex& index, TokenView prefix,
                               std::uint64_t floor) {
  if (prefix.empty()) throw std::invalid_argument("prefix must be non-empty");
  return index.frequency(prefix, floor);
}

namespace {

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool skippable(std::string_view line) {
  return line.empty() || line.front() == '#' ||
         line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

std::vector<CorpusEntry> read_corpus_tsv(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim_cr(raw);
    if (skippable(line)) continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw InputError(line_no, "expected word<TAB>count");
    const std::string_view word = line.substr(0, tab);
    const std::string_view count_text = line.substr(tab + 1);
    if (word.empty()) throw InputError(line_no, "empty word");

    std::int64_t count = 0;
    const auto* first = count_text.data();
    const auto* last = first + count_text.size();
    auto [ptr, ec] = std::from_chars(first, last, count);
    if (ec != std::errc{} || ptr != last) {
      throw InputError(line_no, "malformed count '" + std::string(count_text) + "'");
    }
    if (count < 1) throw InputError(line_no, "count must be positive");

    Token token;
    try {
      token = normalize_token(word);
    } catch (const std::invalid_argument& e) {
      throw InputError(line_no, e.what());
    }
    if (std::any_of(token.begin(), token.end(), is_space)) {
      throw InputError(line_no, "word contains whitespace");
    }
    entries.push_back({std::move(token), count});
  }
  return entries;
}

std::vector<CorpusEntry> read_raw_text(std::istream& in) {
  std::map<Token, std::int64_t> counts;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    Token text;
    try {
      text = decode_utf8(raw);
    } catch (const std::invalid_argument& e) {
      throw InputError(line_no, e.what());
    }
    for (Token& t : tokenize_text(text)) ++counts[std::move(t)];
  }
  std::vector<CorpusEntry> entries;
  entries.reserve(counts.size());
  for (auto& [word, count] : counts) entries.push_back({word, count});
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path, bool raw_text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(0, "cannot open corpus '" + path.string() + "'");
  return raw_text ? read_raw_text(in) : read_corpus_tsv(in);
}

}  // namespace ngstem
