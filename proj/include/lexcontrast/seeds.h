#ifndef LEXCONTRAST_SEEDS_H_
#define LEXCONTRAST_SEEDS_H_

#include <compare>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexcontrast/thesaurus.h"

namespace lexcontrast {

// Morphological schema pairing word1 = prefix1 + X + suffix1 with
// word2 = prefix2 + X + suffix2 for a shared non-empty stem X.
struct AffixPattern {
  int id = 0;
  std::string prefix1;
  std::string suffix1;
  std::string prefix2;
  std::string suffix2;

  // word1 -> word2, or nullopt if the word does not fit template 1.
  std::optional<std::string> Forward(std::string_view word) const;
  // word2 -> word1, or nullopt if the word does not fit template 2.
  std::optional<std::string> Backward(std::string_view word) const;

  // Human readable schema, e.g. "X/unX" or "lX/illX".
  std::string Describe() const;
};

// The fifteen English affix patterns, ids 1..15.
const std::vector<AffixPattern> &BuiltinAffixPatterns();

enum class SeedOrigin { kAffix, kExternalList, kAdjacency };

struct SeedSource {
  SeedOrigin origin = SeedOrigin::kExternalList;
  int pattern_id = 0;  // only meaningful for kAffix

  static SeedSource Affix(int id) { return {SeedOrigin::kAffix, id}; }
  static SeedSource ExternalList() { return {SeedOrigin::kExternalList, 0}; }
  static SeedSource Adjacency() { return {SeedOrigin::kAdjacency, 0}; }

  std::string Describe() const;
  auto operator<=>(const SeedSource &) const = default;
};

// An opposite pair stored in canonical order (first < second).
struct SeedPair {
  std::string first;
  std::string second;
  SeedSource source;

  // Canonicalizes the order. Throws ValidationError if a == b or either
  // word is empty.
  static SeedPair Make(std::string_view a, std::string_view b,
                       SeedSource source);

  bool Involves(std::string_view word) const {
    return first == word || second == word;
  }
  auto operator<=>(const SeedPair &) const = default;
};

// Unordered pair of category numbers, stored low < high.
struct CategoryPair {
  int low = 0;
  int high = 0;

  // Throws ValidationError if a == b.
  static CategoryPair Make(int a, int b);
  bool Contains(int number) const { return low == number || high == number; }
  auto operator<=>(const CategoryPair &) const = default;
};

// Applies every pattern to every unigram of the thesaurus in both
// directions. A pair is emitted when the mate is also in the thesaurus and
// the shorter member has at least three characters. When two patterns
// generate the same pair the lowest pattern id is kept. Output is sorted.
std::vector<SeedPair> GenerateAffixSeeds(const Thesaurus &thesaurus,
                                         std::span<const AffixPattern> patterns);

// Seed file: `word1<TAB>word2` per line, '#' comments. Pairs are
// canonicalized and deduplicated. When `filter` is given, pairs with a
// member missing from it are dropped.
std::vector<SeedPair> ParseSeedList(std::istream &in,
                                    const std::string &source = "<input>",
                                    const Thesaurus *filter = nullptr);
std::vector<SeedPair> LoadSeedList(const std::string &path,
                                   const Thesaurus *filter = nullptr);
void WriteSeedList(std::span<const SeedPair> seeds, std::ostream &out);

// Merges seed lists; on duplicate word pairs the lowest source wins
// (affix before external list before adjacency, lower pattern id first).
std::vector<SeedPair> MergeSeeds(std::span<const std::vector<SeedPair>> lists);

// Adjacency annotations: `catnum1<TAB>catnum2` per line. Pairs need not be
// consecutive.
std::set<CategoryPair> ParseAdjacencyAnnotations(
    std::istream &in, const std::string &source = "<input>");
std::set<CategoryPair> LoadAdjacencyAnnotations(const std::string &path);

}  // namespace lexcontrast

#endif  // LEXCONTRAST_SEEDS_H_
