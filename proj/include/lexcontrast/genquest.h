#ifndef LEXCONTRAST_GENQUEST_H_
#define LEXCONTRAST_GENQUEST_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexcontrast/seeds.h"
#include "lexcontrast/tasks.h"
#include "lexcontrast/thesaurus.h"

namespace lexcontrast {

struct Neighbor {
  std::string word;
  double score = 0.0;

  bool operator==(const Neighbor &) const = default;
};

// Focus word -> neighbors in decreasing order of similarity.
class DistributionalThesaurus {
 public:
  // Throws ValidationError if scores increase or the word lists itself.
  void Add(std::string_view word, std::vector<Neighbor> neighbors);

  // nullptr if the word has no entry.
  const std::vector<Neighbor> *Find(std::string_view word) const;
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<Neighbor>, std::less<>> entries_;
};

// `word<TAB>neighbor:score,neighbor:score,...`
DistributionalThesaurus ParseDistributionalThesaurus(
    std::istream &in, const std::string &source = "<input>");
DistributionalThesaurus LoadDistributionalThesaurus(const std::string &path);

// True when the first three letters of the two words agree (the whole word
// when shorter).
bool SharesPrefix3(std::string_view a, std::string_view b);

// One question per opposite pair whose randomly chosen target has four
// usable neighbors: the closest ones that are unigrams, differ from the
// answer and share no three-letter prefix with the target or answer. The
// answer is placed at a random position. Each pair draws from its own
// generator derived from `seed`, so output does not depend on input order.
std::vector<ContrastQuestion> GenerateContrastQuestions(
    std::span<const SeedPair> opposites, const DistributionalThesaurus &dt,
    uint64_t seed);

// Suffix-stripping stemmer: removes one of ing, est, es, ed, er, s (longest
// first) when at least three letters remain.
std::string SimpleStem(std::string_view word);
bool ShareStem(std::string_view a, std::string_view b);

enum class GlossScope { kParagraph, kCategory };

// Overlap Lesk similarity: the number of distinct words shared by the two
// words' glosses, a gloss being the union of the words of every paragraph
// (or category) the word is listed in.
size_t LeskSimilarity(const Thesaurus &thesaurus, std::string_view a,
                      std::string_view b, GlossScope scope);

using WordChoiceOption = std::array<std::string, 4>;

struct WordChoiceQuestion {
  std::string target1;
  std::string target2;
  std::array<WordChoiceOption, 4> options;
  int answer_index = 0;

  bool operator==(const WordChoiceQuestion &) const = default;
};

// The four words most related to both targets: candidates are the words in
// any category of either target, minus the targets and words sharing their
// stem, ranked by summed Lesk similarity (ties lexicographic). Throws
// ComputationError when fewer than four candidates remain.
WordChoiceOption WordChoiceAnswer(const Thesaurus &thesaurus,
                                  std::string_view target1,
                                  std::string_view target2, GlossScope scope);

// Builds the answer, draws three distractor options from `pool` (answers of
// other questions) and shuffles the four options. Throws UsageError if a
// target is not in the thesaurus and ComputationError if the pool offers
// fewer than three options distinct from the answer.
WordChoiceQuestion GenerateWordChoice(const Thesaurus &thesaurus,
                                      std::string_view target1,
                                      std::string_view target2,
                                      GlossScope scope,
                                      std::span<const WordChoiceOption> pool,
                                      uint64_t seed);

// Batch form: the distractor pool of each pair is the answers of all other
// pairs.
std::vector<WordChoiceQuestion> GenerateWordChoiceBatch(
    const Thesaurus &thesaurus,
    std::span<const std::pair<std::string, std::string>> targets,
    GlossScope scope, uint64_t seed);

// `target1:target2<TAB>opt1;opt2;opt3;opt4<TAB>answer_index`, each option's
// words comma-joined.
void WriteWordChoiceQuestions(std::span<const WordChoiceQuestion> questions,
                              std::ostream &out);

}  // namespace lexcontrast

#endif  // LEXCONTRAST_GENQUEST_H_
