#ifndef LEXCONTRAST_CONTRAST_H_
#define LEXCONTRAST_CONTRAST_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexcontrast/seeds.h"
#include "lexcontrast/thesaurus.h"

namespace lexcontrast {

// Which category pairs count as adjacent (and therefore contrasting).
class AdjacencyMode {
 public:
  enum class Kind { kOff, kHeuristic, kManual };

  static AdjacencyMode Off() { return AdjacencyMode(Kind::kOff, {}); }
  // Consecutive category numbers n, n+1.
  static AdjacencyMode Heuristic() {
    return AdjacencyMode(Kind::kHeuristic, {});
  }
  // Exactly the annotated pairs; replaces the heuristic.
  static AdjacencyMode Manual(std::set<CategoryPair> pairs) {
    return AdjacencyMode(Kind::kManual, std::move(pairs));
  }

  Kind kind() const { return kind_; }
  const std::set<CategoryPair> &manual_pairs() const { return manual_pairs_; }
  bool Adjacent(int a, int b) const;
  std::string Describe() const;

 private:
  AdjacencyMode(Kind kind, std::set<CategoryPair> pairs)
      : kind_(kind), manual_pairs_(std::move(pairs)) {}

  Kind kind_;
  std::set<CategoryPair> manual_pairs_;
};

// Reasons a category pair was marked contrasting (bit set).
enum Provenance : unsigned {
  kProvenanceAffix = 1u << 0,
  kProvenanceExternalList = 1u << 1,
  kProvenanceAdjacencyHeuristic = 1u << 2,
  kProvenanceAdjacencyManual = 1u << 3,
};

// Comma-joined provenance names, e.g. "affix,adjacency_heuristic".
std::string DescribeProvenance(unsigned provenance);

struct ParagraphRef {
  int category_number = 0;
  int paragraph_index = 0;

  auto operator<=>(const ParagraphRef &) const = default;
};

// Two paragraphs in different categories holding one member each of a
// seed pair. Stored with first < second.
struct PrimeParagraphPair {
  ParagraphRef first;
  ParagraphRef second;

  static PrimeParagraphPair Make(ParagraphRef a, ParagraphRef b);
  auto operator<=>(const PrimeParagraphPair &) const = default;
};

// Contrasting category pairs and prime contrasting paragraph pairs derived
// from a thesaurus, a seed set and an adjacency mode. Immutable once built.
class ContrastIndex {
 public:
  const std::map<CategoryPair, unsigned> &contrasting_categories() const {
    return contrasting_categories_;
  }
  // Each prime pair with the seeds that induced it.
  const std::map<PrimeParagraphPair, std::vector<SeedPair>> &prime_paragraphs()
      const {
    return prime_paragraphs_;
  }
  const AdjacencyMode &adjacency() const { return adjacency_; }

  bool IsContrasting(int a, int b) const;
  bool IsPrime(ParagraphRef a, ParagraphRef b) const;
  bool empty() const {
    return contrasting_categories_.empty() && prime_paragraphs_.empty();
  }

 private:
  friend ContrastIndex BuildContrastIndex(const Thesaurus &,
                                          std::span<const SeedPair>,
                                          const AdjacencyMode &);

  std::map<CategoryPair, unsigned> contrasting_categories_;
  std::map<PrimeParagraphPair, std::vector<SeedPair>> prime_paragraphs_;
  AdjacencyMode adjacency_ = AdjacencyMode::Off();
};

// Marks every category pair {A, B}, A != B, holding one member each of a
// seed as contrasting and records the paragraph pair as prime. Seeds with a
// member outside the thesaurus are skipped. With the heuristic every pair of
// consecutive categories present in the thesaurus is also marked; in manual
// mode exactly the annotated pairs are.
ContrastIndex BuildContrastIndex(const Thesaurus &thesaurus,
                                 std::span<const SeedPair> seeds,
                                 const AdjacencyMode &adjacency);

// Reliability class of a contrasting pair. Ordered: I > II > III > none.
enum class ContrastTier : int { kNone = 0, kIII = 1, kII = 2, kI = 3 };

std::string_view TierName(ContrastTier tier);  // "I", "II", "III", "none"
bool ParseTier(std::string_view name, ContrastTier *tier);

// I: the words lie in adjacent categories. II: otherwise, they lie one
// each in the two paragraphs of a prime pair. III: otherwise, they lie in a
// contrasting category pair. Symmetric in the two words.
ContrastTier ClassifyContrast(const ContrastIndex &index,
                              const Thesaurus &thesaurus, std::string_view w1,
                              std::string_view w2,
                              const AdjacencyMode &adjacency);
ContrastTier ClassifyContrast(const ContrastIndex &index,
                              const Thesaurus &thesaurus, std::string_view w1,
                              std::string_view w2);

// Lower-level predicates shared with the decision list.
bool InAdjacentCategories(const Thesaurus &thesaurus, std::string_view w1,
                          std::string_view w2, const AdjacencyMode &adjacency);
bool ShareCategory(const Thesaurus &thesaurus, std::string_view w1,
                   std::string_view w2);
bool InPrimeParagraphs(const ContrastIndex &index, const Thesaurus &thesaurus,
                       std::string_view w1, std::string_view w2);
bool InContrastingCategories(const ContrastIndex &index,
                             const Thesaurus &thesaurus, std::string_view w1,
                             std::string_view w2);

// A tier plus the co-occurrence tendency of the pair.
struct ContrastJudgment {
  ContrastTier tier = ContrastTier::kNone;
  std::optional<double> pmi;  // undefined when the pair never co-occurs
  std::pair<std::string, std::string> pair;  // canonical, first <= second

  static ContrastJudgment Make(ContrastTier tier, std::optional<double> pmi,
                               std::string_view w1, std::string_view w2);
};

// Total order on degree of contrast: `greater` means `a` is more
// contrasting. Tier first; within a tier a defined PMI beats an undefined
// one and a higher PMI beats a lower one; remaining ties go to the
// lexicographically smaller pair.
std::strong_ordering CompareDegree(const ContrastJudgment &a,
                                   const ContrastJudgment &b);

// Writes every Class I and/or Class II pair (`tiers` must not contain III
// or none) as `word1<TAB>word2<TAB>tier`, sorted, word1 < word2. Returns the
// number of lines written.
size_t WriteLexicon(const ContrastIndex &index, const Thesaurus &thesaurus,
                    std::span<const ContrastTier> tiers, std::ostream &out);
size_t BuildLexicon(const ContrastIndex &index, const Thesaurus &thesaurus,
                    std::span<const ContrastTier> tiers,
                    const std::string &output_path);

// Index dump, one record per line:
//   C<TAB>low<TAB>high<TAB>provenance
//   P<TAB>cat:para<TAB>cat:para<TAB>seed1<TAB>seed2<TAB>source
void WriteContrastIndex(const ContrastIndex &index, std::ostream &out);

}  // namespace lexcontrast

#endif  // LEXCONTRAST_CONTRAST_H_
