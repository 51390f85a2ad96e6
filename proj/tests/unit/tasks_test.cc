#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.h"
#include "lexcontrast/error.h"
#include "lexcontrast/tasks.h"

namespace lexcontrast {
namespace {

using testing::ThesaurusFromText;

TEST_CASE("question file parsing") {
  std::istringstream in(
      "# header\n"
      "hot\tcold|warm|tepid|boiling|mild\t0\n"
      "adulterate\tpurify|spoil|corrupt|taint|dilute\t0\n"
      "big\tsmall|huge|large|vast\t0\n");
  QuestionSet set = ParseQuestions(in);
  REQUIRE(set.questions.size() == 3);
  CHECK(set.discarded_multiword == 0);
  CHECK(set.questions[0].target == "hot");
  CHECK(set.questions[0].alternatives.size() == 5);
  CHECK(set.questions[2].alternatives.size() == 4);
}

TEST_CASE("multiword questions are discarded and counted") {
  std::istringstream in(
      "hot\tcold|warm|tepid|boiling point|mild\t0\n"
      "white lie\ttruth|fib|tact|candour\t0\n"
      "big\tsmall|huge|large|vast\t0\n");
  QuestionSet set = ParseQuestions(in);
  CHECK(set.questions.size() == 1);
  CHECK(set.discarded_multiword == 2);
}

TEST_CASE("question errors") {
  std::istringstream range("hot\tcold|warm|tepid|mild\t4\n");
  CHECK_THROWS_AS(ParseQuestions(range), ParseError);
  std::istringstream few("hot\tcold|warm|tepid\t0\n");
  CHECK_THROWS_AS(ParseQuestions(few), ParseError);
  std::istringstream fields("hot\tcold|warm|tepid|mild\n");
  CHECK_THROWS_AS(ParseQuestions(fields), ParseError);
  std::istringstream self("hot\thot|warm|tepid|mild\t0\n");
  CHECK_THROWS_AS(ParseQuestions(self), ParseError);
}

TEST_CASE("questions round trip") {
  std::vector<ContrastQuestion> questions = {
      {"hot", {"cold", "warm", "tepid", "boiling", "mild"}, 0},
      {"big", {"huge", "small", "large", "vast"}, 1}};
  std::ostringstream out;
  WriteQuestions(questions, out);
  std::istringstream in(out.str());
  CHECK(ParseQuestions(in).questions == questions);
}

TEST_CASE("pair items") {
  std::istringstream in("ascent\tdescent\tantonym\nbroadside\tsalvo\tsynonym\n");
  auto items = ParsePairItems(in);
  REQUIRE(items.size() == 2);
  CHECK(items[0].gold == Relation::kOpposite);
  CHECK(items[1].gold == Relation::kSynonym);
  std::istringstream bad("a\tb\tmaybe\n");
  CHECK_THROWS_AS(ParsePairItems(bad), ParseError);
}

TEST_CASE("evaluation metrics") {
  EvalResult result = EvalResult::FromCounts(8, 6, 10);
  CHECK(std::abs(result.precision - 0.75) < 1e-12);
  CHECK(std::abs(result.recall - 0.6) < 1e-12);
  CHECK(std::abs(result.f_score - 2.0 * 0.75 * 0.6 / 1.35) < 1e-12);
  CHECK(result.precision_defined);

  EvalResult empty = EvalResult::FromCounts(0, 0, 10);
  CHECK_FALSE(empty.precision_defined);
  CHECK(empty.precision == 0.0);
  CHECK(empty.f_score == 0.0);

  EvalResult all = EvalResult::FromCounts(10, 10, 10);
  CHECK(all.precision == 1.0);
  CHECK(all.recall == 1.0);
  CHECK(all.f_score == 1.0);

  std::ostringstream out;
  WriteEvalResult(result, out);
  CHECK(out.str() ==
        "total\t10\nattempted\t8\ncorrect\t6\nprecision\t0.750000\n"
        "precision_defined\t1\nrecall\t0.600000\nf_score\t0.666667\n");
}

TEST_CASE("recall never exceeds precision; full attempt makes them equal") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    size_t total = 1 + rng() % 50;
    size_t attempted = rng() % (total + 1);
    size_t correct = attempted ? rng() % (attempted + 1) : 0;
    EvalResult result = EvalResult::FromCounts(attempted, correct, total);
    CHECK(result.recall <= result.precision + 1e-15);
    if (attempted == total) CHECK(result.recall == result.precision);
    double lo = std::min(result.precision, result.recall);
    double hi = std::max(result.precision, result.recall);
    CHECK(result.f_score >= lo - 1e-12);
    CHECK(result.f_score <= hi + 1e-12);
  }
}

struct SolverFixture {
  Thesaurus thesaurus = testing::HidingRevealingThesaurus();
  std::vector<SeedPair> seeds = {
      SeedPair::Make("cover", "uncover", SeedSource::Affix(8))};
  ContrastIndex index =
      BuildContrastIndex(thesaurus, seeds, AdjacencyMode::Off());
};

TEST_CASE("solver prefers the higher tier") {
  SolverFixture f;
  ContrastSolver solver(f.thesaurus, f.index, nullptr, AdjacencyMode::Off());
  // revelation is class III for veil, unmask class II.
  ContrastQuestion question{"veil", {"revelation", "mask", "unmask", "zebra"}, 2};
  CHECK(solver.Solve(question) == 2);
  ContrastQuestion abstain{"veil", {"mask", "cloak", "zebra", "yak"}, 0};
  CHECK_FALSE(solver.Solve(abstain).has_value());
}

TEST_CASE("solver uses pmi within a tier") {
  SolverFixture f;
  CooccurrenceStore store;
  for (const char *word : {"veil", "bare", "reveal", "expose"}) {
    store.AddUnigram(word, 10);
  }
  store.AddPair("veil", "reveal", 3);
  store.AddPair("veil", "bare", 1);
  store.SetTotals(100, 50);
  ContrastSolver solver(f.thesaurus, f.index, &store, AdjacencyMode::Off());
  ContrastQuestion question{"veil", {"bare", "expose", "reveal", "mask"}, 2};
  CHECK(solver.Solve(question) == 2);
  ContrastJudgment judgment = solver.Judge("veil", "expose");
  CHECK(judgment.tier == ContrastTier::kII);
  CHECK_FALSE(judgment.pmi.has_value());
  // Without a store the tie falls to the lexicographically smaller pair.
  ContrastSolver plain(f.thesaurus, f.index, nullptr, AdjacencyMode::Off());
  CHECK(plain.Solve(question) == 0);
}

TEST_CASE("solver output does not depend on alternative order") {
  SolverFixture f;
  ContrastSolver solver(f.thesaurus, f.index, nullptr, AdjacencyMode::Off());
  std::vector<std::string> alternatives = {"revelation", "mask", "unmask",
                                           "bare", "zebra"};
  ContrastQuestion question{"veil", alternatives, 0};
  std::string chosen = alternatives[*solver.Solve(question)];
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(question.alternatives.begin(), question.alternatives.end(), rng);
    CHECK(question.alternatives[*solver.Solve(question)] == chosen);
  }
}

TEST_CASE("decision list on shared-category pairs") {
  Thesaurus thesaurus = ThesaurusFromText(testing::SharedCategoryThesaurusText());
  AdjacencyMode adjacency = AdjacencyMode::Heuristic();
  ContrastIndex index = BuildContrastIndex(thesaurus, {}, adjacency);
  for (const testing::LabeledPair &pair : testing::SharedCategoryPairs()) {
    auto relation =
        ApplyDecisionList(index, thesaurus, pair.word1, pair.word2, adjacency);
    REQUIRE(relation.has_value());
    CHECK(RelationName(*relation) == pair.gold);
  }
  CHECK(FiringRule(index, thesaurus, "ascent", "descent", adjacency) == 1);
  CHECK(FiringRule(index, thesaurus, "broadside", "salvo", adjacency) == 2);
}

TEST_CASE("ascent, descent, broadside and salvo on the category fixture") {
  Thesaurus thesaurus = testing::AscentDescentThesaurus();
  AdjacencyMode adjacency = AdjacencyMode::Heuristic();
  ContrastIndex index = BuildContrastIndex(thesaurus, {}, adjacency);
  CHECK(ApplyDecisionList(index, thesaurus, "ascent", "descent", adjacency) ==
        Relation::kOpposite);
  CHECK(ApplyDecisionList(index, thesaurus, "broadside", "salvo", adjacency) ==
        Relation::kSynonym);
  CHECK_FALSE(ApplyDecisionList(index, thesaurus, "salvo", "ancestry", adjacency)
                  .has_value());
}

TEST_CASE("rule three fires only through prime paragraphs") {
  SolverFixture f;
  AdjacencyMode off = AdjacencyMode::Off();
  CHECK(FiringRule(f.index, f.thesaurus, "veil", "reveal", off) == 3);
  CHECK(FiringRule(f.index, f.thesaurus, "secrecy", "revelation", off) == 0);
  CHECK(FiringRule(f.index, f.thesaurus, "veil", "mask", off) == 2);
}

std::vector<PairRelationItem> FallbackItems() {
  return {{"veil", "reveal", Relation::kOpposite},
          {"veil", "mask", Relation::kSynonym},
          {"cloak", "mask", Relation::kSynonym},
          {"secrecy", "revelation", Relation::kOpposite},
          {"zebra", "yak", Relation::kSynonym}};
}

TEST_CASE("fallback policies") {
  SolverFixture f;
  AdjacencyMode off = AdjacencyMode::Off();
  auto items = FallbackItems();

  auto refrain = ClassifyPairs(items, f.index, f.thesaurus, off,
                               FallbackPolicy::Refrain());
  CHECK(refrain[3] == Relation::kUnknown);
  EvalResult r = EvaluatePairs(items, refrain);
  CHECK(r.attempted == 3);
  CHECK(r.correct == 3);

  // Two synonyms beat one opposite in the first pass.
  auto predominant = ClassifyPairs(items, f.index, f.thesaurus, off,
                                   FallbackPolicy::Predominant());
  CHECK(predominant[3] == Relation::kSynonym);
  CHECK(predominant[4] == Relation::kSynonym);

  auto random1 = ClassifyPairs(items, f.index, f.thesaurus, off,
                               FallbackPolicy::Random(42));
  auto random2 = ClassifyPairs(items, f.index, f.thesaurus, off,
                               FallbackPolicy::Random(42));
  CHECK(random1 == random2);
  for (size_t i = 0; i < 3; ++i) CHECK(random1[i] == refrain[i]);
  CHECK(random1[3] != Relation::kUnknown);
  CHECK(EvaluatePairs(items, random1).attempted == 5);
}

TEST_CASE("predominant ties choose opposite") {
  SolverFixture f;
  AdjacencyMode off = AdjacencyMode::Off();
  std::vector<PairRelationItem> items = {{"veil", "reveal", Relation::kOpposite},
                                         {"veil", "mask", Relation::kSynonym},
                                         {"zebra", "yak", Relation::kSynonym}};
  auto labels = ClassifyPairs(items, f.index, f.thesaurus, off,
                              FallbackPolicy::Predominant());
  CHECK(labels[2] == Relation::kOpposite);
  CHECK(ClassifyPair("zebra", "yak", f.index, f.thesaurus, off,
                     FallbackPolicy::Predominant()) == Relation::kOpposite);
  CHECK(ClassifyPair("zebra", "yak", f.index, f.thesaurus, off,
                     FallbackPolicy::Refrain()) == Relation::kUnknown);
}

TEST_CASE("fallback names") {
  FallbackPolicy policy;
  CHECK(ParseFallback("random", 9, &policy));
  CHECK(policy.kind == FallbackPolicy::Kind::kRandom);
  CHECK(policy.seed == 9);
  CHECK(policy.Describe() == "random");
  CHECK_FALSE(ParseFallback("coin", 0, &policy));
}

TEST_CASE("question evaluation") {
  std::vector<ContrastQuestion> questions = {
      {"a", {"b", "c", "d", "e"}, 0},
      {"a", {"b", "c", "d", "e"}, 1},
      {"a", {"b", "c", "d", "e"}, 2}};
  std::vector<std::optional<int>> outputs = {0, std::nullopt, 1};
  EvalResult result = EvaluateQuestions(questions, outputs);
  CHECK(result.attempted == 2);
  CHECK(result.correct == 1);
  CHECK(result.total == 3);
  std::vector<std::optional<int>> short_outputs = {0};
  CHECK_THROWS_AS(EvaluateQuestions(questions, short_outputs), UsageError);
}

TEST_CASE("random baseline converges to one in five") {
  std::vector<ContrastQuestion> questions;
  for (int i = 0; i < 20; ++i) {
    questions.push_back({"t", {"a", "b", "c", "d", "e"}, i % 5});
  }
  double accuracy = RandomBaseline(questions, 2000, 123);
  CHECK(std::abs(accuracy - 0.2) < 0.02);
  CHECK(RandomBaseline(questions, 2000, 123) == accuracy);
  CHECK_THROWS_AS(RandomBaseline(questions, 0, 1), UsageError);
}

TEST_CASE("seed lookup baseline") {
  std::vector<ContrastQuestion> questions = {
      {"hot", {"warm", "cold", "mild", "tepid"}, 1},
      {"big", {"huge", "large", "vast", "small"}, 3}};
  std::vector<SeedPair> seeds = {
      SeedPair::Make("hot", "cold", SeedSource::ExternalList())};
  EvalResult lookup = SeedLookupBaseline(questions, seeds, false, 0);
  CHECK(lookup.attempted == 1);
  CHECK(lookup.correct == 1);
  EvalResult filled = SeedLookupBaseline(questions, seeds, true, 0);
  CHECK(filled.attempted == 2);
}

}  // namespace
}  // namespace lexcontrast
