#include "lexcontrast/seeds.h"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_set>

#include "lexcontrast/error.h"
#include "lexcontrast/text.h"

namespace lexcontrast {

namespace {

constexpr size_t kMinSeedLength = 3;

std::optional<std::string> Rewrite(std::string_view word,
                                   std::string_view from_prefix,
                                   std::string_view from_suffix,
                                   std::string_view to_prefix,
                                   std::string_view to_suffix) {
  if (word.size() <= from_prefix.size() + from_suffix.size()) {
    return std::nullopt;  // stem must be non-empty
  }
  if (!word.starts_with(from_prefix) || !word.ends_with(from_suffix)) {
    return std::nullopt;
  }
  std::string_view stem = word.substr(
      from_prefix.size(), word.size() - from_prefix.size() - from_suffix.size());
  std::string mate;
  mate.reserve(to_prefix.size() + stem.size() + to_suffix.size());
  mate.append(to_prefix).append(stem).append(to_suffix);
  return mate;
}

AffixPattern MakePattern(int id, std::string p1, std::string s1,
                         std::string p2, std::string s2) {
  return AffixPattern{id, std::move(p1), std::move(s1), std::move(p2),
                      std::move(s2)};
}

}  // namespace

std::optional<std::string> AffixPattern::Forward(std::string_view word) const {
  return Rewrite(word, prefix1, suffix1, prefix2, suffix2);
}

std::optional<std::string> AffixPattern::Backward(std::string_view word) const {
  return Rewrite(word, prefix2, suffix2, prefix1, suffix1);
}

std::string AffixPattern::Describe() const {
  return prefix1 + "X" + suffix1 + "/" + prefix2 + "X" + suffix2;
}

const std::vector<AffixPattern> &BuiltinAffixPatterns() {
  static const std::vector<AffixPattern> patterns = {
      MakePattern(1, "", "", "anti", ""),
      MakePattern(2, "", "", "dis", ""),
      MakePattern(3, "", "", "im", ""),
      MakePattern(4, "", "", "in", ""),
      MakePattern(5, "", "", "mal", ""),
      MakePattern(6, "", "", "mis", ""),
      MakePattern(7, "", "", "non", ""),
      MakePattern(8, "", "", "un", ""),
      // legal -> illegal, regular -> irregular: the leading letter is kept.
      MakePattern(9, "l", "", "ill", ""),
      MakePattern(10, "r", "", "irr", ""),
      MakePattern(11, "im", "", "ex", ""),
      MakePattern(12, "in", "", "ex", ""),
      MakePattern(13, "up", "", "down", ""),
      MakePattern(14, "over", "", "under", ""),
      MakePattern(15, "", "less", "", "ful"),
  };
  return patterns;
}

std::string SeedSource::Describe() const {
  switch (origin) {
    case SeedOrigin::kAffix:
      return "affix:" + std::to_string(pattern_id);
    case SeedOrigin::kExternalList:
      return "external_list";
    case SeedOrigin::kAdjacency:
      return "adjacency";
  }
  return "external_list";
}

SeedPair SeedPair::Make(std::string_view a, std::string_view b,
                        SeedSource source) {
  std::string first = NormalizeWord(a);
  std::string second = NormalizeWord(b);
  if (first.empty() || second.empty()) {
    throw ValidationError("seed pair has an empty member");
  }
  if (first == second) {
    throw ValidationError("seed pair pairs '" + first + "' with itself");
  }
  if (second < first) std::swap(first, second);
  return SeedPair{std::move(first), std::move(second), source};
}

CategoryPair CategoryPair::Make(int a, int b) {
  if (a == b) {
    throw ValidationError("category " + std::to_string(a) +
                          " paired with itself");
  }
  return a < b ? CategoryPair{a, b} : CategoryPair{b, a};
}

std::vector<SeedPair> GenerateAffixSeeds(
    const Thesaurus &thesaurus, std::span<const AffixPattern> patterns) {
  // Keyed on the word pair so the lowest pattern id survives regardless of
  // the order in which patterns or words are visited.
  std::map<std::pair<std::string, std::string>, int> best;
  const std::vector<std::string> &vocabulary = thesaurus.vocabulary();
  std::unordered_set<std::string_view> known(vocabulary.begin(),
                                             vocabulary.end());

  auto consider = [&](const std::string &word, const std::string &mate,
                      int id) {
    if (mate == word || !known.count(mate)) return;
    if (std::min(word.size(), mate.size()) < kMinSeedLength) return;
    auto key = word < mate ? std::make_pair(word, mate)
                           : std::make_pair(mate, word);
    auto [it, inserted] = best.emplace(std::move(key), id);
    if (!inserted) it->second = std::min(it->second, id);
  };

  for (const std::string &word : vocabulary) {
    if (!IsUnigram(word) || word.size() < kMinSeedLength) continue;
    for (const AffixPattern &pattern : patterns) {
      if (auto mate = pattern.Forward(word)) consider(word, *mate, pattern.id);
      if (auto mate = pattern.Backward(word)) consider(word, *mate, pattern.id);
    }
  }

  std::vector<SeedPair> seeds;
  seeds.reserve(best.size());
  for (const auto &[words, id] : best) {
    seeds.push_back(SeedPair{words.first, words.second, SeedSource::Affix(id)});
  }
  return seeds;
}

std::vector<SeedPair> ParseSeedList(std::istream &in, const std::string &source,
                                    const Thesaurus *filter) {
  std::map<std::pair<std::string, std::string>, SeedPair> unique;
  LineReader reader(in);
  std::string line;
  while (reader.Next(&line)) {
    if (IsCommentOrBlank(line)) continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 2) {
      throw ParseError(source, reader.line_number(),
                       "expected word1<TAB>word2");
    }
    if (NormalizeWord(fields[0]).empty() || NormalizeWord(fields[1]).empty()) {
      throw ParseError(source, reader.line_number(), "empty word");
    }
    SeedPair pair;
    try {
      pair = SeedPair::Make(fields[0], fields[1], SeedSource::ExternalList());
    } catch (const ValidationError &e) {
      throw ValidationError(source + ":" + std::to_string(reader.line_number()) +
                            ": " + e.what());
    }
    if (filter != nullptr &&
        (!filter->Contains(pair.first) || !filter->Contains(pair.second))) {
      continue;
    }
    unique.emplace(std::make_pair(pair.first, pair.second), std::move(pair));
  }
  std::vector<SeedPair> seeds;
  seeds.reserve(unique.size());
  for (auto &[key, pair] : unique) seeds.push_back(std::move(pair));
  return seeds;
}

std::vector<SeedPair> LoadSeedList(const std::string &path,
                                   const Thesaurus *filter) {
  std::ifstream in = OpenInput(path);
  return ParseSeedList(in, path, filter);
}

void WriteSeedList(std::span<const SeedPair> seeds, std::ostream &out) {
  for (const SeedPair &seed : seeds) {
    out << seed.first << '\t' << seed.second << '\n';
  }
}

std::vector<SeedPair> MergeSeeds(std::span<const std::vector<SeedPair>> lists) {
  std::map<std::pair<std::string, std::string>, SeedPair> unique;
  for (const auto &list : lists) {
    for (const SeedPair &seed : list) {
      auto key = std::make_pair(seed.first, seed.second);
      auto [it, inserted] = unique.emplace(key, seed);
      if (!inserted && seed.source < it->second.source) it->second = seed;
    }
  }
  std::vector<SeedPair> merged;
  merged.reserve(unique.size());
  for (auto &[key, seed] : unique) merged.push_back(std::move(seed));
  return merged;
}

std::set<CategoryPair> ParseAdjacencyAnnotations(std::istream &in,
                                                 const std::string &source) {
  std::set<CategoryPair> pairs;
  LineReader reader(in);
  std::string line;
  while (reader.Next(&line)) {
    if (IsCommentOrBlank(line)) continue;
    auto fields = Split(line, '\t');
    int64_t a = 0;
    int64_t b = 0;
    if (fields.size() != 2 || !ParseInt64(fields[0], &a) ||
        !ParseInt64(fields[1], &b) || a <= 0 || b <= 0 ||
        a > 1'000'000'000 || b > 1'000'000'000) {
      throw ParseError(source, reader.line_number(),
                       "expected catnum1<TAB>catnum2 with positive numbers");
    }
    if (a == b) {
      throw ParseError(source, reader.line_number(),
                       "category paired with itself");
    }
    pairs.insert(CategoryPair::Make(static_cast<int>(a), static_cast<int>(b)));
  }
  return pairs;
}

std::set<CategoryPair> LoadAdjacencyAnnotations(const std::string &path) {
  std::ifstream in = OpenInput(path);
  return ParseAdjacencyAnnotations(in, path);
}

}  // namespace lexcontrast
