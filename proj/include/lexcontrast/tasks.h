#ifndef LEXCONTRAST_TASKS_H_
#define LEXCONTRAST_TASKS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexcontrast/contrast.h"
#include "lexcontrast/corpus.h"
#include "lexcontrast/seeds.h"
#include "lexcontrast/thesaurus.h"

namespace lexcontrast {

// "Choose the most contrasting word" question.
struct ContrastQuestion {
  std::string target;
  std::vector<std::string> alternatives;  // 4 or 5
  int answer_index = 0;                   // 0-based

  // Throws ValidationError unless 4 <= |alternatives| <= 5, the answer
  // index is in range and the target is not an alternative.
  void Validate() const;
  bool operator==(const ContrastQuestion &) const = default;
};

struct QuestionSet {
  std::vector<ContrastQuestion> questions;
  size_t discarded_multiword = 0;
};

// Question file: `target<TAB>alt1|alt2|alt3|alt4[|alt5]<TAB>answer_index`.
// Questions with a multiword target or alternative are discarded and
// counted.
QuestionSet ParseQuestions(std::istream &in,
                           const std::string &source = "<input>");
QuestionSet LoadQuestions(const std::string &path);
void WriteQuestions(std::span<const ContrastQuestion> questions,
                    std::ostream &out);

enum class Relation { kSynonym, kOpposite, kUnknown };

std::string_view RelationName(Relation relation);
bool ParseRelation(std::string_view name, Relation *relation);

struct PairRelationItem {
  std::string word1;
  std::string word2;
  Relation gold = Relation::kUnknown;
};

// Pair file: `word1<TAB>word2<TAB>gold_label` with gold in
// synonym|opposite.
std::vector<PairRelationItem> ParsePairItems(
    std::istream &in, const std::string &source = "<input>");
std::vector<PairRelationItem> LoadPairItems(const std::string &path);

struct EvalResult {
  size_t attempted = 0;
  size_t correct = 0;
  size_t total = 0;
  double precision = 0.0;  // 0 and flagged undefined when attempted == 0
  double recall = 0.0;
  double f_score = 0.0;
  bool precision_defined = false;

  static EvalResult FromCounts(size_t attempted, size_t correct, size_t total);
};

// `metric<TAB>value` lines.
void WriteEvalResult(const EvalResult &result, std::ostream &out);

// Judges word pairs against one thesaurus, contrast index and (optional)
// co-occurrence store. Holds references to the thesaurus, index and store,
// which must outlive it.
class ContrastSolver {
 public:
  ContrastSolver(const Thesaurus &thesaurus, const ContrastIndex &index,
                 const CooccurrenceStore *store,
                 const AdjacencyMode &adjacency)
      : thesaurus_(thesaurus),
        index_(index),
        store_(store),
        adjacency_(adjacency) {}

  ContrastJudgment Judge(std::string_view w1, std::string_view w2) const;

  // Index of the most contrasting alternative, or nullopt when every
  // alternative has tier none. Exact ties keep the lowest index.
  std::optional<int> Solve(const ContrastQuestion &question) const;

  std::optional<Relation> ApplyRules(std::string_view w1,
                                     std::string_view w2) const;

 private:
  const Thesaurus &thesaurus_;
  const ContrastIndex &index_;
  const CooccurrenceStore *store_;
  AdjacencyMode adjacency_;
};

std::vector<std::optional<int>> SolveQuestions(
    const ContrastSolver &solver, std::span<const ContrastQuestion> questions);

// Decision list: Rule 1 adjacent categories -> opposite; Rule 2 shared
// category -> synonym; Rule 3 prime contrasting paragraphs -> opposite.
// nullopt when no rule fires.
std::optional<Relation> ApplyDecisionList(const ContrastIndex &index,
                                          const Thesaurus &thesaurus,
                                          std::string_view w1,
                                          std::string_view w2,
                                          const AdjacencyMode &adjacency);

// Which rule fired (1..3), or 0.
int FiringRule(const ContrastIndex &index, const Thesaurus &thesaurus,
               std::string_view w1, std::string_view w2,
               const AdjacencyMode &adjacency);

struct FallbackPolicy {
  enum class Kind { kRefrain, kRandom, kPredominant };
  Kind kind = Kind::kRefrain;
  uint64_t seed = 0;  // used by kRandom

  static FallbackPolicy Refrain() { return {Kind::kRefrain, 0}; }
  static FallbackPolicy Random(uint64_t seed) { return {Kind::kRandom, seed}; }
  static FallbackPolicy Predominant() { return {Kind::kPredominant, 0}; }

  std::string Describe() const;
};

bool ParseFallback(std::string_view name, uint64_t seed,
                   FallbackPolicy *policy);

// Labels one pair in isolation. The predominant policy needs a batch, so
// here it behaves like ties (opposite).
Relation ClassifyPair(std::string_view w1, std::string_view w2,
                      const ContrastIndex &index, const Thesaurus &thesaurus,
                      const AdjacencyMode &adjacency,
                      const FallbackPolicy &fallback);

// Two passes: the decision list over every item, then the fallback over the
// undecided ones. The predominant label is computed once from pass one;
// equal counts choose opposite. Random guesses draw from one generator
// seeded with the policy seed, in item order.
std::vector<Relation> ClassifyPairs(std::span<const PairRelationItem> items,
                                    const ContrastIndex &index,
                                    const Thesaurus &thesaurus,
                                    const AdjacencyMode &adjacency,
                                    const FallbackPolicy &fallback);

EvalResult EvaluatePairs(std::span<const PairRelationItem> items,
                         std::span<const Relation> labels);

// P = correct/attempted, R = correct/total, F = 2PR/(P+R). Throws
// UsageError on a length mismatch.
EvalResult EvaluateQuestions(std::span<const ContrastQuestion> questions,
                             std::span<const std::optional<int>> outputs);

// Mean accuracy of uniform guessing over `trials` passes. Throws
// UsageError if trials < 1.
double RandomBaseline(std::span<const ContrastQuestion> questions, int trials,
                      uint64_t seed);

// Answers a question only when the target and some alternative form a seed
// pair (lowest such index). Other questions are skipped or, with
// `random_fill`, guessed uniformly.
EvalResult SeedLookupBaseline(std::span<const ContrastQuestion> questions,
                              std::span<const SeedPair> seeds,
                              bool random_fill, uint64_t seed);

}  // namespace lexcontrast

#endif  // LEXCONTRAST_TASKS_H_
