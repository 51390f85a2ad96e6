#include "lexcontrast/tasks.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include "lexcontrast/error.h"
#include "lexcontrast/random.h"
#include "lexcontrast/text.h"

namespace lexcontrast {

void ContrastQuestion::Validate() const {
  if (alternatives.size() < 4 || alternatives.size() > 5) {
    throw ValidationError("question '" + target + "' has " +
                          std::to_string(alternatives.size()) +
                          " alternatives; expected 4 or 5");
  }
  if (answer_index < 0 ||
      static_cast<size_t>(answer_index) >= alternatives.size()) {
    throw ValidationError("question '" + target +
                          "' has an out-of-range answer index");
  }
  if (std::find(alternatives.begin(), alternatives.end(), target) !=
      alternatives.end()) {
    throw ValidationError("question '" + target +
                          "' lists its target as an alternative");
  }
}

QuestionSet ParseQuestions(std::istream &in, const std::string &source) {
  QuestionSet set;
  LineReader reader(in);
  std::string line;
  while (reader.Next(&line)) {
    if (IsCommentOrBlank(line)) continue;
    auto fail = [&](const std::string &what) {
      throw ParseError(source, reader.line_number(), what);
    };
    auto fields = Split(line, '\t');
    if (fields.size() != 3) fail("expected target<TAB>alternatives<TAB>index");
    ContrastQuestion question;
    question.target = NormalizeWord(fields[0]);
    if (question.target.empty()) fail("empty target");
    for (std::string_view alternative : Split(fields[1], '|')) {
      std::string word = NormalizeWord(alternative);
      if (word.empty()) fail("empty alternative");
      question.alternatives.push_back(std::move(word));
    }
    int64_t answer = 0;
    if (!ParseInt64(fields[2], &answer)) fail("invalid answer index");
    question.answer_index = static_cast<int>(answer);

    bool multiword = !IsUnigram(question.target);
    for (const std::string &word : question.alternatives) {
      multiword = multiword || !IsUnigram(word);
    }
    if (multiword) {
      ++set.discarded_multiword;
      continue;
    }
    try {
      question.Validate();
    } catch (const ValidationError &e) {
      fail(e.what());
    }
    set.questions.push_back(std::move(question));
  }
  return set;
}

QuestionSet LoadQuestions(const std::string &path) {
  std::ifstream in = OpenInput(path);
  return ParseQuestions(in, path);
}

void WriteQuestions(std::span<const ContrastQuestion> questions,
                    std::ostream &out) {
  for (const ContrastQuestion &question : questions) {
    out << question.target << '\t';
    for (size_t i = 0; i < question.alternatives.size(); ++i) {
      if (i > 0) out << '|';
      out << question.alternatives[i];
    }
    out << '\t' << question.answer_index << '\n';
  }
}

std::string_view RelationName(Relation relation) {
  switch (relation) {
    case Relation::kSynonym:
      return "synonym";
    case Relation::kOpposite:
      return "opposite";
    case Relation::kUnknown:
      return "unknown";
  }
  return "unknown";
}

bool ParseRelation(std::string_view name, Relation *relation) {
  std::string folded = CaseFold(Trim(name));
  if (folded == "synonym") {
    *relation = Relation::kSynonym;
  } else if (folded == "opposite" || folded == "antonym") {
    *relation = Relation::kOpposite;
  } else if (folded == "unknown") {
    *relation = Relation::kUnknown;
  } else {
    return false;
  }
  return true;
}

std::vector<PairRelationItem> ParsePairItems(std::istream &in,
                                             const std::string &source) {
  std::vector<PairRelationItem> items;
  LineReader reader(in);
  std::string line;
  while (reader.Next(&line)) {
    if (IsCommentOrBlank(line)) continue;
    auto fail = [&](const std::string &what) {
      throw ParseError(source, reader.line_number(), what);
    };
    auto fields = Split(line, '\t');
    if (fields.size() != 3) fail("expected word1<TAB>word2<TAB>gold");
    PairRelationItem item;
    item.word1 = NormalizeWord(fields[0]);
    item.word2 = NormalizeWord(fields[1]);
    if (item.word1.empty() || item.word2.empty()) fail("empty word");
    if (item.word1 == item.word2) fail("pair of identical words");
    if (!ParseRelation(fields[2], &item.gold) ||
        item.gold == Relation::kUnknown) {
      fail("gold label must be synonym or opposite");
    }
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<PairRelationItem> LoadPairItems(const std::string &path) {
  std::ifstream in = OpenInput(path);
  return ParsePairItems(in, path);
}

EvalResult EvalResult::FromCounts(size_t attempted, size_t correct,
                                  size_t total) {
  EvalResult result;
  result.attempted = attempted;
  result.correct = correct;
  result.total = total;
  result.precision_defined = attempted > 0;
  result.precision = attempted > 0 ? static_cast<double>(correct) /
                                         static_cast<double>(attempted)
                                   : 0.0;
  result.recall = total > 0 ? static_cast<double>(correct) /
                                  static_cast<double>(total)
                            : 0.0;
  const double sum = result.precision + result.recall;
  result.f_score =
      sum > 0.0 ? 2.0 * result.precision * result.recall / sum : 0.0;
  return result;
}

void WriteEvalResult(const EvalResult &result, std::ostream &out) {
  out << "total\t" << result.total << '\n';
  out << "attempted\t" << result.attempted << '\n';
  out << "correct\t" << result.correct << '\n';
  out << "precision\t" << FormatDouble(result.precision) << '\n';
  out << "precision_defined\t" << (result.precision_defined ? 1 : 0) << '\n';
  out << "recall\t" << FormatDouble(result.recall) << '\n';
  out << "f_score\t" << FormatDouble(result.f_score) << '\n';
}

ContrastJudgment ContrastSolver::Judge(std::string_view w1,
                                       std::string_view w2) const {
  ContrastTier tier = ClassifyContrast(index_, thesaurus_, w1, w2, adjacency_);
  std::optional<double> pmi;
  if (store_ != nullptr) pmi = Pmi(*store_, NormalizeWord(w1), NormalizeWord(w2));
  return ContrastJudgment::Make(tier, pmi, w1, w2);
}

std::optional<int> ContrastSolver::Solve(
    const ContrastQuestion &question) const {
  std::optional<int> best;
  ContrastJudgment best_judgment;
  for (size_t i = 0; i < question.alternatives.size(); ++i) {
    ContrastJudgment judgment = Judge(question.target, question.alternatives[i]);
    if (judgment.tier == ContrastTier::kNone) continue;
    if (!best || CompareDegree(judgment, best_judgment) > 0) {
      best = static_cast<int>(i);
      best_judgment = std::move(judgment);
    }
  }
  return best;
}

std::optional<Relation> ContrastSolver::ApplyRules(std::string_view w1,
                                                   std::string_view w2) const {
  return ApplyDecisionList(index_, thesaurus_, w1, w2, adjacency_);
}

std::vector<std::optional<int>> SolveQuestions(
    const ContrastSolver &solver, std::span<const ContrastQuestion> questions) {
  std::vector<std::optional<int>> answers;
  answers.reserve(questions.size());
  for (const ContrastQuestion &question : questions) {
    answers.push_back(solver.Solve(question));
  }
  return answers;
}

int FiringRule(const ContrastIndex &index, const Thesaurus &thesaurus,
               std::string_view w1, std::string_view w2,
               const AdjacencyMode &adjacency) {
  if (InAdjacentCategories(thesaurus, w1, w2, adjacency)) return 1;
  if (ShareCategory(thesaurus, w1, w2)) return 2;
  if (InPrimeParagraphs(index, thesaurus, w1, w2)) return 3;
  return 0;
}

std::optional<Relation> ApplyDecisionList(const ContrastIndex &index,
                                          const Thesaurus &thesaurus,
                                          std::string_view w1,
                                          std::string_view w2,
                                          const AdjacencyMode &adjacency) {
  switch (FiringRule(index, thesaurus, w1, w2, adjacency)) {
    case 1:
    case 3:
      return Relation::kOpposite;
    case 2:
      return Relation::kSynonym;
    default:
      return std::nullopt;
  }
}

std::string FallbackPolicy::Describe() const {
  switch (kind) {
    case Kind::kRefrain:
      return "refrain";
    case Kind::kRandom:
      return "random";
    case Kind::kPredominant:
      return "predominant";
  }
  return "refrain";
}

bool ParseFallback(std::string_view name, uint64_t seed,
                   FallbackPolicy *policy) {
  std::string folded = CaseFold(Trim(name));
  if (folded == "refrain") {
    *policy = FallbackPolicy::Refrain();
  } else if (folded == "random") {
    *policy = FallbackPolicy::Random(seed);
  } else if (folded == "predominant") {
    *policy = FallbackPolicy::Predominant();
  } else {
    return false;
  }
  return true;
}

namespace {

Relation CoinFlip(Rng &rng) {
  return UniformIndex(rng, 2) == 0 ? Relation::kSynonym : Relation::kOpposite;
}

}  // namespace

Relation ClassifyPair(std::string_view w1, std::string_view w2,
                      const ContrastIndex &index, const Thesaurus &thesaurus,
                      const AdjacencyMode &adjacency,
                      const FallbackPolicy &fallback) {
  if (auto decided = ApplyDecisionList(index, thesaurus, w1, w2, adjacency)) {
    return *decided;
  }
  switch (fallback.kind) {
    case FallbackPolicy::Kind::kRefrain:
      return Relation::kUnknown;
    case FallbackPolicy::Kind::kRandom: {
      Rng rng = DerivedRng(fallback.seed, NormalizeWord(w1), NormalizeWord(w2));
      return CoinFlip(rng);
    }
    case FallbackPolicy::Kind::kPredominant:
      return Relation::kOpposite;
  }
  return Relation::kUnknown;
}

std::vector<Relation> ClassifyPairs(std::span<const PairRelationItem> items,
                                    const ContrastIndex &index,
                                    const Thesaurus &thesaurus,
                                    const AdjacencyMode &adjacency,
                                    const FallbackPolicy &fallback) {
  std::vector<Relation> labels;
  labels.reserve(items.size());
  size_t opposites = 0;
  size_t synonyms = 0;
  for (const PairRelationItem &item : items) {
    auto decided =
        ApplyDecisionList(index, thesaurus, item.word1, item.word2, adjacency);
    Relation label = decided.value_or(Relation::kUnknown);
    if (label == Relation::kOpposite) ++opposites;
    if (label == Relation::kSynonym) ++synonyms;
    labels.push_back(label);
  }

  const Relation predominant =
      synonyms > opposites ? Relation::kSynonym : Relation::kOpposite;
  Rng rng(fallback.seed);
  for (Relation &label : labels) {
    if (label != Relation::kUnknown) continue;
    switch (fallback.kind) {
      case FallbackPolicy::Kind::kRefrain:
        break;
      case FallbackPolicy::Kind::kRandom:
        label = CoinFlip(rng);
        break;
      case FallbackPolicy::Kind::kPredominant:
        label = predominant;
        break;
    }
  }
  return labels;
}

EvalResult EvaluatePairs(std::span<const PairRelationItem> items,
                         std::span<const Relation> labels) {
  if (items.size() != labels.size()) {
    throw UsageError("labels do not align with pair items");
  }
  size_t attempted = 0;
  size_t correct = 0;
  for (size_t i = 0; i < items.size(); ++i) {
    if (labels[i] == Relation::kUnknown) continue;
    ++attempted;
    if (labels[i] == items[i].gold) ++correct;
  }
  return EvalResult::FromCounts(attempted, correct, items.size());
}

EvalResult EvaluateQuestions(std::span<const ContrastQuestion> questions,
                             std::span<const std::optional<int>> outputs) {
  if (questions.size() != outputs.size()) {
    throw UsageError("solver outputs do not align with questions");
  }
  size_t attempted = 0;
  size_t correct = 0;
  for (size_t i = 0; i < questions.size(); ++i) {
    if (!outputs[i]) continue;
    ++attempted;
    if (*outputs[i] == questions[i].answer_index) ++correct;
  }
  return EvalResult::FromCounts(attempted, correct, questions.size());
}

double RandomBaseline(std::span<const ContrastQuestion> questions, int trials,
                      uint64_t seed) {
  if (trials < 1) throw UsageError("random baseline needs at least one trial");
  if (questions.empty()) return 0.0;
  Rng rng(seed);
  uint64_t correct = 0;
  for (int trial = 0; trial < trials; ++trial) {
    for (const ContrastQuestion &question : questions) {
      if (static_cast<int>(UniformIndex(rng, question.alternatives.size())) ==
          question.answer_index) {
        ++correct;
      }
    }
  }
  return static_cast<double>(correct) /
         (static_cast<double>(trials) * static_cast<double>(questions.size()));
}

EvalResult SeedLookupBaseline(std::span<const ContrastQuestion> questions,
                              std::span<const SeedPair> seeds,
                              bool random_fill, uint64_t seed) {
  std::set<std::pair<std::string, std::string>> known;
  for (const SeedPair &pair : seeds) known.emplace(pair.first, pair.second);
  Rng rng(seed);
  size_t attempted = 0;
  size_t correct = 0;
  for (const ContrastQuestion &question : questions) {
    std::optional<int> choice;
    for (size_t i = 0; i < question.alternatives.size() && !choice; ++i) {
      WordPair pair = CanonicalPair(question.target, question.alternatives[i]);
      if (known.count(pair)) choice = static_cast<int>(i);
    }
    if (!choice && random_fill) {
      choice = static_cast<int>(UniformIndex(rng, question.alternatives.size()));
    }
    if (!choice) continue;
    ++attempted;
    if (*choice == question.answer_index) ++correct;
  }
  return EvalResult::FromCounts(attempted, correct, questions.size());
}

}  // namespace lexcontrast
