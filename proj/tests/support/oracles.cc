#include "oracles.h"

#include <algorithm>
#include <cstdlib>

namespace lexcontrast::testing {

PairCounts BruteForcePairCounts(
    const std::vector<std::vector<std::string>> &sentences, int window) {
  PairCounts counts;
  for (const auto &tokens : sentences) {
    for (size_t i = 0; i < tokens.size(); ++i) {
      for (size_t j = i + 1; j < tokens.size(); ++j) {
        if (static_cast<int>(j - i) > window - 1) continue;
        std::string a = tokens[i];
        std::string b = tokens[j];
        if (b < a) std::swap(a, b);
        ++counts[{a, b}];
      }
    }
  }
  return counts;
}

namespace {

// Stem of `word` under prefix/suffix, or "" if it does not fit.
std::string StemUnder(const std::string &word, const std::string &prefix,
                      const std::string &suffix) {
  if (word.size() <= prefix.size() + suffix.size()) return "";
  if (word.compare(0, prefix.size(), prefix) != 0) return "";
  if (word.compare(word.size() - suffix.size(), suffix.size(), suffix) != 0) {
    return "";
  }
  return word.substr(prefix.size(), word.size() - prefix.size() - suffix.size());
}

}  // namespace

std::map<std::pair<std::string, std::string>, int> BruteForceAffixPairs(
    const std::vector<std::string> &vocabulary,
    const std::vector<AffixPattern> &patterns) {
  std::map<std::pair<std::string, std::string>, int> found;
  for (const std::string &a : vocabulary) {
    for (const std::string &b : vocabulary) {
      if (a == b) continue;
      if (a.find(' ') != std::string::npos || b.find(' ') != std::string::npos) {
        continue;
      }
      if (std::min(a.size(), b.size()) < 3) continue;
      for (const AffixPattern &p : patterns) {
        std::string stem_a = StemUnder(a, p.prefix1, p.suffix1);
        std::string stem_b = StemUnder(b, p.prefix2, p.suffix2);
        if (stem_a.empty() || stem_a != stem_b) continue;
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = found.find(key);
        if (it == found.end() || p.id < it->second) found[key] = p.id;
      }
    }
  }
  return found;
}

ContrastTier NaiveContrastTier(const Thesaurus &thesaurus,
                               const std::vector<SeedPair> &seeds,
                               const AdjacencyMode &adjacency,
                               const std::string &w1, const std::string &w2) {
  auto adjacent = [&](int a, int b) {
    switch (adjacency.kind()) {
      case AdjacencyMode::Kind::kOff:
        return false;
      case AdjacencyMode::Kind::kHeuristic:
        return std::abs(a - b) == 1;
      case AdjacencyMode::Kind::kManual:
        for (const CategoryPair &pair : adjacency.manual_pairs()) {
          if ((pair.low == a && pair.high == b) ||
              (pair.low == b && pair.high == a)) {
            return true;
          }
        }
        return false;
    }
    return false;
  };

  bool one = false;
  bool two = false;
  bool three = false;
  for (const WordLocation &x : thesaurus.Locate(w1)) {
    for (const WordLocation &y : thesaurus.Locate(w2)) {
      if (adjacent(x.category_number, y.category_number)) one = true;
      // Adjacency-marked category pairs are contrasting too.
      if (adjacency.kind() != AdjacencyMode::Kind::kOff &&
          adjacent(x.category_number, y.category_number)) {
        three = true;
      }
      for (const SeedPair &seed : seeds) {
        for (const WordLocation &u : thesaurus.Locate(seed.first)) {
          for (const WordLocation &v : thesaurus.Locate(seed.second)) {
            if (u.category_number == v.category_number) continue;
            auto same = [](const WordLocation &p, const WordLocation &q) {
              return p.category_number == q.category_number &&
                     p.paragraph_index == q.paragraph_index;
            };
            if ((same(x, u) && same(y, v)) || (same(x, v) && same(y, u))) {
              two = true;
            }
            bool cats = (x.category_number == u.category_number &&
                         y.category_number == v.category_number) ||
                        (x.category_number == v.category_number &&
                         y.category_number == u.category_number);
            if (cats) three = true;
          }
        }
      }
    }
  }
  if (one) return ContrastTier::kI;
  if (two) return ContrastTier::kII;
  if (three) return ContrastTier::kIII;
  return ContrastTier::kNone;
}

}  // namespace lexcontrast::testing
