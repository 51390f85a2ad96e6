#include "lexcontrast/contrast.h"

#include <algorithm>
#include <ostream>

#include "lexcontrast/error.h"
#include "lexcontrast/text.h"

namespace lexcontrast {

bool AdjacencyMode::Adjacent(int a, int b) const {
  switch (kind_) {
    case Kind::kOff:
      return false;
    case Kind::kHeuristic:
      return a + 1 == b || b + 1 == a;
    case Kind::kManual:
      return a != b && manual_pairs_.count(CategoryPair::Make(a, b)) > 0;
  }
  return false;
}

std::string AdjacencyMode::Describe() const {
  switch (kind_) {
    case Kind::kOff:
      return "off";
    case Kind::kHeuristic:
      return "heuristic";
    case Kind::kManual:
      return "manual(" + std::to_string(manual_pairs_.size()) + ")";
  }
  return "off";
}

std::string DescribeProvenance(unsigned provenance) {
  static constexpr std::pair<unsigned, const char *> kNames[] = {
      {kProvenanceAffix, "affix"},
      {kProvenanceExternalList, "external_list"},
      {kProvenanceAdjacencyHeuristic, "adjacency_heuristic"},
      {kProvenanceAdjacencyManual, "adjacency_manual"},
  };
  std::string out;
  for (const auto &[bit, name] : kNames) {
    if (!(provenance & bit)) continue;
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

PrimeParagraphPair PrimeParagraphPair::Make(ParagraphRef a, ParagraphRef b) {
  if (b < a) std::swap(a, b);
  return PrimeParagraphPair{a, b};
}

bool ContrastIndex::IsContrasting(int a, int b) const {
  if (a == b) return false;
  return contrasting_categories_.count(CategoryPair::Make(a, b)) > 0;
}

bool ContrastIndex::IsPrime(ParagraphRef a, ParagraphRef b) const {
  if (a.category_number == b.category_number) return false;
  return prime_paragraphs_.count(PrimeParagraphPair::Make(a, b)) > 0;
}

namespace {

unsigned ProvenanceOf(const SeedSource &source) {
  switch (source.origin) {
    case SeedOrigin::kAffix:
      return kProvenanceAffix;
    case SeedOrigin::kExternalList:
      return kProvenanceExternalList;
    case SeedOrigin::kAdjacency:
      return kProvenanceAdjacencyManual;
  }
  return kProvenanceExternalList;
}

ParagraphRef RefOf(const WordLocation &location) {
  return ParagraphRef{location.category_number, location.paragraph_index};
}

}  // namespace

ContrastIndex BuildContrastIndex(const Thesaurus &thesaurus,
                                 std::span<const SeedPair> seeds,
                                 const AdjacencyMode &adjacency) {
  ContrastIndex index;
  index.adjacency_ = adjacency;

  for (const SeedPair &seed : seeds) {
    auto first = thesaurus.Locate(seed.first);
    auto second = thesaurus.Locate(seed.second);
    if (first.empty() || second.empty()) continue;
    unsigned provenance = ProvenanceOf(seed.source);
    for (const WordLocation &u : first) {
      for (const WordLocation &v : second) {
        if (u.category_number == v.category_number) continue;
        index.contrasting_categories_[CategoryPair::Make(
            u.category_number, v.category_number)] |= provenance;
        auto &inducing =
            index.prime_paragraphs_[PrimeParagraphPair::Make(RefOf(u),
                                                             RefOf(v))];
        if (inducing.empty() || inducing.back() != seed) {
          inducing.push_back(seed);
        }
      }
    }
  }

  switch (adjacency.kind()) {
    case AdjacencyMode::Kind::kOff:
      break;
    case AdjacencyMode::Kind::kHeuristic:
      for (const Category &category : thesaurus.categories()) {
        if (thesaurus.FindCategory(category.number + 1) != nullptr) {
          index.contrasting_categories_[CategoryPair::Make(
              category.number, category.number + 1)] |=
              kProvenanceAdjacencyHeuristic;
        }
      }
      break;
    case AdjacencyMode::Kind::kManual:
      for (const CategoryPair &pair : adjacency.manual_pairs()) {
        index.contrasting_categories_[pair] |= kProvenanceAdjacencyManual;
      }
      break;
  }

  for (auto &[pair, inducing] : index.prime_paragraphs_) {
    std::sort(inducing.begin(), inducing.end());
    inducing.erase(std::unique(inducing.begin(), inducing.end()),
                   inducing.end());
  }
  return index;
}

std::string_view TierName(ContrastTier tier) {
  switch (tier) {
    case ContrastTier::kI:
      return "I";
    case ContrastTier::kII:
      return "II";
    case ContrastTier::kIII:
      return "III";
    case ContrastTier::kNone:
      return "none";
  }
  return "none";
}

bool ParseTier(std::string_view name, ContrastTier *tier) {
  std::string folded = CaseFold(Trim(name));
  if (folded == "i" || folded == "1") {
    *tier = ContrastTier::kI;
  } else if (folded == "ii" || folded == "2") {
    *tier = ContrastTier::kII;
  } else if (folded == "iii" || folded == "3") {
    *tier = ContrastTier::kIII;
  } else if (folded == "none") {
    *tier = ContrastTier::kNone;
  } else {
    return false;
  }
  return true;
}

bool InAdjacentCategories(const Thesaurus &thesaurus, std::string_view w1,
                          std::string_view w2, const AdjacencyMode &adjacency) {
  if (adjacency.kind() == AdjacencyMode::Kind::kOff) return false;
  std::vector<int> first = thesaurus.CategoriesOf(w1);
  std::vector<int> second = thesaurus.CategoriesOf(w2);
  for (int a : first) {
    for (int b : second) {
      if (adjacency.Adjacent(a, b)) return true;
    }
  }
  return false;
}

bool ShareCategory(const Thesaurus &thesaurus, std::string_view w1,
                   std::string_view w2) {
  std::vector<int> first = thesaurus.CategoriesOf(w1);
  std::vector<int> second = thesaurus.CategoriesOf(w2);
  std::vector<int> common;
  std::set_intersection(first.begin(), first.end(), second.begin(),
                        second.end(), std::back_inserter(common));
  return !common.empty();
}

bool InPrimeParagraphs(const ContrastIndex &index, const Thesaurus &thesaurus,
                       std::string_view w1, std::string_view w2) {
  if (index.prime_paragraphs().empty()) return false;
  for (const WordLocation &u : thesaurus.Locate(w1)) {
    for (const WordLocation &v : thesaurus.Locate(w2)) {
      if (index.IsPrime(RefOf(u), RefOf(v))) return true;
    }
  }
  return false;
}

bool InContrastingCategories(const ContrastIndex &index,
                             const Thesaurus &thesaurus, std::string_view w1,
                             std::string_view w2) {
  std::vector<int> first = thesaurus.CategoriesOf(w1);
  std::vector<int> second = thesaurus.CategoriesOf(w2);
  for (int a : first) {
    for (int b : second) {
      if (index.IsContrasting(a, b)) return true;
    }
  }
  return false;
}

ContrastTier ClassifyContrast(const ContrastIndex &index,
                              const Thesaurus &thesaurus, std::string_view w1,
                              std::string_view w2,
                              const AdjacencyMode &adjacency) {
  if (InAdjacentCategories(thesaurus, w1, w2, adjacency)) {
    return ContrastTier::kI;
  }
  if (InPrimeParagraphs(index, thesaurus, w1, w2)) return ContrastTier::kII;
  if (InContrastingCategories(index, thesaurus, w1, w2)) {
    return ContrastTier::kIII;
  }
  return ContrastTier::kNone;
}

ContrastTier ClassifyContrast(const ContrastIndex &index,
                              const Thesaurus &thesaurus, std::string_view w1,
                              std::string_view w2) {
  return ClassifyContrast(index, thesaurus, w1, w2, index.adjacency());
}

ContrastJudgment ContrastJudgment::Make(ContrastTier tier,
                                        std::optional<double> pmi,
                                        std::string_view w1,
                                        std::string_view w2) {
  std::string a = NormalizeWord(w1);
  std::string b = NormalizeWord(w2);
  if (b < a) std::swap(a, b);
  return ContrastJudgment{tier, pmi, {std::move(a), std::move(b)}};
}

std::strong_ordering CompareDegree(const ContrastJudgment &a,
                                   const ContrastJudgment &b) {
  if (a.tier != b.tier) {
    return static_cast<int>(a.tier) <=> static_cast<int>(b.tier);
  }
  if (a.pmi.has_value() != b.pmi.has_value()) {
    return a.pmi.has_value() ? std::strong_ordering::greater
                             : std::strong_ordering::less;
  }
  if (a.pmi && *a.pmi != *b.pmi) {
    return *a.pmi < *b.pmi ? std::strong_ordering::less
                           : std::strong_ordering::greater;
  }
  // Smaller pair is "more" contrasting so that the order stays total.
  return b.pair <=> a.pair;
}

namespace {

uint64_t PackPair(int a, int b) {
  if (b < a) std::swap(a, b);
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
         static_cast<uint32_t>(b);
}

std::vector<int> WordIds(const Thesaurus &thesaurus,
                         std::span<const std::string> words) {
  std::vector<int> ids;
  ids.reserve(words.size());
  for (const std::string &word : words) ids.push_back(thesaurus.WordId(word));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void CrossProduct(std::span<const int> a, std::span<const int> b,
                  std::vector<uint64_t> *out) {
  for (int x : a) {
    for (int y : b) {
      if (x != y) out->push_back(PackPair(x, y));
    }
  }
}

void SortUnique(std::vector<uint64_t> *pairs) {
  std::sort(pairs->begin(), pairs->end());
  pairs->erase(std::unique(pairs->begin(), pairs->end()), pairs->end());
}

}  // namespace

size_t WriteLexicon(const ContrastIndex &index, const Thesaurus &thesaurus,
                    std::span<const ContrastTier> tiers, std::ostream &out) {
  if (tiers.empty()) throw UsageError("no lexicon tiers requested");
  bool want_one = false;
  bool want_two = false;
  for (ContrastTier tier : tiers) {
    if (tier == ContrastTier::kI) {
      want_one = true;
    } else if (tier == ContrastTier::kII) {
      want_two = true;
    } else {
      throw UsageError("lexicon tiers are limited to I and II, got " +
                       std::string(TierName(tier)));
    }
  }

  const AdjacencyMode &adjacency = index.adjacency();
  std::vector<uint64_t> class_one;
  if (want_one) {
    std::vector<CategoryPair> adjacent;
    if (adjacency.kind() == AdjacencyMode::Kind::kHeuristic) {
      for (const Category &category : thesaurus.categories()) {
        if (thesaurus.FindCategory(category.number + 1) != nullptr) {
          adjacent.push_back({category.number, category.number + 1});
        }
      }
    } else if (adjacency.kind() == AdjacencyMode::Kind::kManual) {
      for (const CategoryPair &pair : adjacency.manual_pairs()) {
        if (thesaurus.FindCategory(pair.low) != nullptr &&
            thesaurus.FindCategory(pair.high) != nullptr) {
          adjacent.push_back(pair);
        }
      }
    }
    for (const CategoryPair &pair : adjacent) {
      std::vector<std::string> low = thesaurus.CategoryWords(pair.low);
      std::vector<std::string> high = thesaurus.CategoryWords(pair.high);
      CrossProduct(WordIds(thesaurus, low), WordIds(thesaurus, high),
                   &class_one);
    }
    SortUnique(&class_one);
  }

  std::vector<uint64_t> class_two;
  if (want_two) {
    for (const auto &[prime, inducing] : index.prime_paragraphs()) {
      const Paragraph &first = thesaurus.paragraph(
          {prime.first.category_number, prime.first.paragraph_index});
      const Paragraph &second = thesaurus.paragraph(
          {prime.second.category_number, prime.second.paragraph_index});
      CrossProduct(WordIds(thesaurus, first.words),
                   WordIds(thesaurus, second.words), &class_two);
    }
    SortUnique(&class_two);
    const std::vector<std::string> &vocabulary = thesaurus.vocabulary();
    std::erase_if(class_two, [&](uint64_t packed) {
      const std::string &a = vocabulary[packed >> 32];
      const std::string &b = vocabulary[packed & 0xffffffffu];
      return InAdjacentCategories(thesaurus, a, b, adjacency);
    });
  }

  // Word ids follow lexicographic order, so merging packed ids yields lines
  // sorted by (word1, word2).
  const std::vector<std::string> &vocabulary = thesaurus.vocabulary();
  size_t written = 0;
  size_t i = 0;
  size_t j = 0;
  auto emit = [&](uint64_t packed, std::string_view tier) {
    out << vocabulary[packed >> 32] << '\t' << vocabulary[packed & 0xffffffffu]
        << '\t' << tier << '\n';
    ++written;
  };
  while (i < class_one.size() || j < class_two.size()) {
    if (j == class_two.size() ||
        (i < class_one.size() && class_one[i] < class_two[j])) {
      emit(class_one[i++], "I");
    } else {
      emit(class_two[j++], "II");
    }
  }
  if (!out) throw IoError("failed writing lexicon");
  return written;
}

size_t BuildLexicon(const ContrastIndex &index, const Thesaurus &thesaurus,
                    std::span<const ContrastTier> tiers,
                    const std::string &output_path) {
  // Validate tiers before touching the output file.
  for (ContrastTier tier : tiers) {
    if (tier != ContrastTier::kI && tier != ContrastTier::kII) {
      throw UsageError("lexicon tiers are limited to I and II, got " +
                       std::string(TierName(tier)));
    }
  }
  if (tiers.empty()) throw UsageError("no lexicon tiers requested");
  std::ofstream out = OpenOutput(output_path);
  size_t count = WriteLexicon(index, thesaurus, tiers, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + output_path + "'");
  return count;
}

void WriteContrastIndex(const ContrastIndex &index, std::ostream &out) {
  for (const auto &[pair, provenance] : index.contrasting_categories()) {
    out << "C\t" << pair.low << '\t' << pair.high << '\t'
        << DescribeProvenance(provenance) << '\n';
  }
  for (const auto &[prime, inducing] : index.prime_paragraphs()) {
    for (const SeedPair &seed : inducing) {
      out << "P\t" << prime.first.category_number << ':'
          << prime.first.paragraph_index << '\t'
          << prime.second.category_number << ':'
          << prime.second.paragraph_index << '\t' << seed.first << '\t'
          << seed.second << '\t' << seed.source.Describe() << '\n';
    }
  }
}

}  // namespace lexcontrast
