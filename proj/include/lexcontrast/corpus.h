#ifndef LEXCONTRAST_CORPUS_H_
#define LEXCONTRAST_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lexcontrast {

// Default co-occurrence window, in tokens.
inline constexpr int kDefaultWindow = 5;

using WordPair = std::pair<std::string, std::string>;

// Orders the two words so that first <= second.
WordPair CanonicalPair(std::string_view a, std::string_view b);

struct WordPairHash {
  size_t operator()(const WordPair &pair) const;
};

// Unigram counts, unordered pair counts and corpus totals. Words are
// case-folded on insertion and lookup.
//
// Pair probabilities are normalized by total_windows and unigram
// probabilities by total_tokens. For counted corpora total_windows is the
// number of position pairs that fall within the window (at least 1).
class CooccurrenceStore {
 public:
  uint64_t UnigramCount(std::string_view word) const;
  uint64_t PairCount(std::string_view a, std::string_view b) const;
  uint64_t total_tokens() const { return total_tokens_; }
  uint64_t total_windows() const { return total_windows_; }

  const std::unordered_map<std::string, uint64_t> &unigrams() const {
    return unigrams_;
  }
  const std::unordered_map<WordPair, uint64_t, WordPairHash> &pairs() const {
    return pairs_;
  }

  void AddUnigram(std::string_view word, uint64_t count);
  void AddPair(std::string_view a, std::string_view b, uint64_t count);
  void AddTotals(uint64_t tokens, uint64_t windows);
  void SetTotals(uint64_t tokens, uint64_t windows);

  // Additive merge; associative and commutative.
  void Merge(const CooccurrenceStore &other);

  // Throws ValidationError if a pair references a zero unigram, a total is
  // zero, or a count exceeds its total.
  void Validate() const;

  bool operator==(const CooccurrenceStore &other) const;

 private:
  std::unordered_map<std::string, uint64_t> unigrams_;
  std::unordered_map<WordPair, uint64_t, WordPairHash> pairs_;
  uint64_t total_tokens_ = 0;
  uint64_t total_windows_ = 0;
};

// Counts a sentence-per-line corpus. Tokens are whitespace separated and
// case-folded. Each unordered pair of positions at most window-1 apart in
// the same sentence is counted once. Throws UsageError if window < 1 and
// ComputationError if the corpus has no tokens.
CooccurrenceStore CountCorpus(std::istream &in, int window = kDefaultWindow);
CooccurrenceStore CountCorpusFile(const std::string &path,
                                  int window = kDefaultWindow);

// Counts file:
//   U<TAB>word<TAB>count
//   P<TAB>word1<TAB>word2<TAB>count
//   T<TAB>total_tokens<TAB>total_windows   (exactly once)
// Duplicate records are summed.
CooccurrenceStore ParseCounts(std::istream &in,
                              const std::string &source = "<input>");
CooccurrenceStore LoadCounts(const std::string &path);
// Sorted, so equal stores serialize to equal bytes.
void WriteCounts(const CooccurrenceStore &store, std::ostream &out);

// log2((C(a,b)/W) / ((C(a)/T) * (C(b)/T))); nullopt when C(a,b) or either
// unigram count is zero.
std::optional<double> Pmi(const CooccurrenceStore &store, std::string_view a,
                          std::string_view b);

struct AssociationStats {
  double mean_pmi = 0.0;
  double stddev_pmi = 0.0;  // population standard deviation
  size_t n_defined = 0;
  size_t n_pairs = 0;
};

// Mean and population standard deviation of the defined PMIs. Throws
// UsageError on an empty list and ComputationError if no PMI is defined.
AssociationStats ComputeAssociationStats(const CooccurrenceStore &store,
                                         std::span<const WordPair> pairs);

// The defined PMI values of `pairs`, in input order.
std::vector<double> DefinedPmis(const CooccurrenceStore &store,
                                std::span<const WordPair> pairs);

struct TTestResult {
  double t = 0.0;
  double degrees_of_freedom = 0.0;
  double p_value = 1.0;  // two-sided
};

// Welch's unequal-variance two-sample t-test. Throws UsageError if either
// sample has fewer than two values.
TTestResult WelchTTest(std::span<const double> a, std::span<const double> b);

}  // namespace lexcontrast

#endif  // LEXCONTRAST_CORPUS_H_
