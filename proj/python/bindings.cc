#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lexcontrast/cli.h"
#include "lexcontrast/contrast.h"
#include "lexcontrast/corpus.h"
#include "lexcontrast/error.h"
#include "lexcontrast/genquest.h"
#include "lexcontrast/seeds.h"
#include "lexcontrast/tasks.h"
#include "lexcontrast/thesaurus.h"

namespace py = pybind11;

namespace lexcontrast {
namespace {

Thesaurus ParseThesaurusText(const std::string &text) {
  std::istringstream in(text);
  return ParseThesaurus(in, "<string>");
}

AdjacencyMode MakeAdjacency(const std::string &mode,
                            const std::vector<std::pair<int, int>> &pairs) {
  if (mode == "off") return AdjacencyMode::Off();
  if (mode == "heuristic") return AdjacencyMode::Heuristic();
  if (mode == "manual") {
    std::set<CategoryPair> set;
    for (const auto &[a, b] : pairs) set.insert(CategoryPair::Make(a, b));
    return AdjacencyMode::Manual(std::move(set));
  }
  throw UsageError("adjacency must be off, heuristic or manual");
}

std::vector<SeedPair> ToSeeds(const std::vector<std::pair<std::string, std::string>> &pairs) {
  std::vector<SeedPair> seeds;
  for (const auto &[a, b] : pairs) {
    seeds.push_back(SeedPair::Make(a, b, SeedSource::ExternalList()));
  }
  return seeds;
}

std::optional<Relation> ToRelation(const std::string &name) {
  Relation relation;
  if (!ParseRelation(name, &relation)) return std::nullopt;
  return relation;
}

FallbackPolicy ToFallback(const std::string &name, uint64_t seed) {
  FallbackPolicy policy;
  if (!ParseFallback(name, seed, &policy)) {
    throw UsageError("fallback must be refrain, random or predominant");
  }
  return policy;
}

// A built index together with the inputs it refers to.
struct Model {
  Thesaurus thesaurus;
  std::vector<SeedPair> seeds;
  AdjacencyMode adjacency = AdjacencyMode::Off();
  ContrastIndex index;
};

std::shared_ptr<Model> BuildModel(const Thesaurus &thesaurus,
                                  const std::vector<SeedPair> &seeds,
                                  const std::string &adjacency,
                                  const std::vector<std::pair<int, int>> &manual) {
  auto model = std::make_shared<Model>();
  model->thesaurus = thesaurus;
  model->seeds = seeds;
  model->adjacency = MakeAdjacency(adjacency, manual);
  model->index = BuildContrastIndex(model->thesaurus, model->seeds, model->adjacency);
  return model;
}

}  // namespace
}  // namespace lexcontrast

PYBIND11_MODULE(_lexcontrast, m) {
  using namespace lexcontrast;
  m.doc() = "Lexical contrast: thesaurus-based opposites and co-occurrence tools";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<IoError>(m, "IoError", error.ptr());
  py::register_exception<UsageError>(m, "UsageError", error.ptr());
  py::register_exception<ComputationError>(m, "ComputationError", error.ptr());

  py::class_<Thesaurus>(m, "Thesaurus")
      .def("__len__", &Thesaurus::size)
      .def("contains", &Thesaurus::Contains)
      .def("__contains__", &Thesaurus::Contains)
      .def("vocabulary", &Thesaurus::vocabulary)
      .def("category_numbers",
           [](const Thesaurus &t) {
             std::vector<int> numbers;
             for (const Category &c : t.categories()) numbers.push_back(c.number);
             return numbers;
           })
      .def("categories_of", &Thesaurus::CategoriesOf)
      .def("category_words", &Thesaurus::CategoryWords)
      .def(
          "locate",
          [](const Thesaurus &t, const std::string &word) {
            std::vector<std::tuple<int, int, std::string>> out;
            for (const WordLocation &loc : t.Locate(word)) {
              out.emplace_back(loc.category_number, loc.paragraph_index,
                               std::string(PartOfSpeechName(loc.pos)));
            }
            return out;
          },
          "(category, paragraph, pos) for every occurrence of the word");
  m.def("load_thesaurus", &LoadThesaurus, py::arg("path"));
  m.def("parse_thesaurus", &ParseThesaurusText, py::arg("text"));

  py::class_<AffixPattern>(m, "AffixPattern")
      .def_readonly("id", &AffixPattern::id)
      .def("forward", &AffixPattern::Forward)
      .def("backward", &AffixPattern::Backward)
      .def("__repr__", &AffixPattern::Describe);
  m.def("affix_patterns", &BuiltinAffixPatterns);

  py::class_<SeedPair>(m, "SeedPair")
      .def_readonly("first", &SeedPair::first)
      .def_readonly("second", &SeedPair::second)
      .def_property_readonly("source",
                             [](const SeedPair &s) { return s.source.Describe(); })
      .def("__iter__",
           [](const SeedPair &s) {
             return py::iter(py::make_tuple(s.first, s.second));
           })
      .def("__repr__", [](const SeedPair &s) {
        return "SeedPair(" + s.first + ", " + s.second + ", " + s.source.Describe() + ")";
      });
  m.def(
      "generate_affix_seeds",
      [](const Thesaurus &thesaurus, std::optional<std::vector<int>> ids) {
        const auto &all = BuiltinAffixPatterns();
        if (!ids) return GenerateAffixSeeds(thesaurus, all);
        std::vector<AffixPattern> chosen;
        for (int id : *ids) {
          if (id < 1 || id > static_cast<int>(all.size())) {
            throw UsageError("affix pattern ids run from 1 to 15");
          }
          chosen.push_back(all[id - 1]);
        }
        return GenerateAffixSeeds(thesaurus, chosen);
      },
      py::arg("thesaurus"), py::arg("pattern_ids") = py::none());
  m.def("load_seed_list", &LoadSeedList, py::arg("path"),
        py::arg("thesaurus") = nullptr);
  m.def("seed_pairs", &ToSeeds, py::arg("pairs"),
        "Seed pairs from (word1, word2) tuples");

  py::class_<Model, std::shared_ptr<Model>>(m, "ContrastModel")
      .def_property_readonly("thesaurus", [](const Model &model) { return model.thesaurus; })
      .def("contrasting_categories",
           [](const Model &model) {
             std::vector<std::pair<int, int>> out;
             for (const auto &[pair, bits] : model.index.contrasting_categories()) {
               out.emplace_back(pair.low, pair.high);
             }
             return out;
           })
      .def("contrast_class",
           [](const Model &model, const std::string &a, const std::string &b) {
             return std::string(TierName(
                 ClassifyContrast(model.index, model.thesaurus, a, b, model.adjacency)));
           })
      .def("decision_rule",
           [](const Model &model, const std::string &a, const std::string &b) {
             return FiringRule(model.index, model.thesaurus, a, b, model.adjacency);
           })
      .def(
          "classify",
          [](const Model &model,
             const std::vector<std::tuple<std::string, std::string, std::string>> &items,
             const std::string &fallback, uint64_t seed) {
            std::vector<PairRelationItem> pairs;
            for (const auto &[a, b, gold] : items) {
              pairs.push_back({a, b, ToRelation(gold).value_or(Relation::kUnknown)});
            }
            std::vector<std::string> labels;
            for (Relation r : ClassifyPairs(pairs, model.index, model.thesaurus,
                                            model.adjacency, ToFallback(fallback, seed))) {
              labels.emplace_back(RelationName(r));
            }
            return labels;
          },
          py::arg("items"), py::arg("fallback") = "refrain", py::arg("seed") = 0)
      .def(
          "solve",
          [](const Model &model, const std::vector<ContrastQuestion> &questions,
             const CooccurrenceStore *store) {
            ContrastSolver solver(model.thesaurus, model.index, store, model.adjacency);
            return SolveQuestions(solver, questions);
          },
          py::arg("questions"), py::arg("store") = nullptr);
  m.def("build_model", &BuildModel, py::arg("thesaurus"), py::arg("seeds"),
        py::arg("adjacency") = "heuristic",
        py::arg("manual_pairs") = std::vector<std::pair<int, int>>{});

  py::class_<CooccurrenceStore>(m, "CooccurrenceStore")
      .def("unigram_count", &CooccurrenceStore::UnigramCount)
      .def("pair_count", &CooccurrenceStore::PairCount)
      .def_property_readonly("total_tokens", &CooccurrenceStore::total_tokens)
      .def_property_readonly("total_windows", &CooccurrenceStore::total_windows)
      .def("to_text", [](const CooccurrenceStore &store) {
        std::ostringstream out;
        WriteCounts(store, out);
        return out.str();
      });
  m.def(
      "count_corpus",
      [](const std::string &text, int window) {
        std::istringstream in(text);
        return CountCorpus(in, window);
      },
      py::arg("text"), py::arg("window") = kDefaultWindow);
  m.def("count_corpus_file", &CountCorpusFile, py::arg("path"),
        py::arg("window") = kDefaultWindow);
  m.def("load_counts", &LoadCounts, py::arg("path"));
  m.def("pmi", &Pmi, py::arg("store"), py::arg("a"), py::arg("b"));
  m.def(
      "association_stats",
      [](const CooccurrenceStore &store, const std::vector<WordPair> &pairs) {
        AssociationStats s = ComputeAssociationStats(store, pairs);
        py::dict out;
        out["mean_pmi"] = s.mean_pmi;
        out["stddev_pmi"] = s.stddev_pmi;
        out["n_defined"] = s.n_defined;
        out["n_pairs"] = s.n_pairs;
        return out;
      },
      py::arg("store"), py::arg("pairs"));
  m.def(
      "welch_t_test",
      [](const std::vector<double> &a, const std::vector<double> &b) {
        TTestResult r = WelchTTest(a, b);
        return py::make_tuple(r.t, r.degrees_of_freedom, r.p_value);
      },
      py::arg("a"), py::arg("b"), "(t, degrees_of_freedom, two-sided p)");

  py::class_<ContrastQuestion>(m, "ContrastQuestion")
      .def(py::init([](std::string target, std::vector<std::string> alternatives,
                       int answer_index) {
             ContrastQuestion q{std::move(target), std::move(alternatives), answer_index};
             q.Validate();
             return q;
           }),
           py::arg("target"), py::arg("alternatives"), py::arg("answer_index"))
      .def_readonly("target", &ContrastQuestion::target)
      .def_readonly("alternatives", &ContrastQuestion::alternatives)
      .def_readonly("answer_index", &ContrastQuestion::answer_index)
      .def("__eq__", [](const ContrastQuestion &a, const ContrastQuestion &b) { return a == b; })
      .def("__repr__", [](const ContrastQuestion &q) {
        std::ostringstream out;
        WriteQuestions(std::span(&q, 1), out);
        std::string text = out.str();
        return "ContrastQuestion(" + text.substr(0, text.size() - 1) + ")";
      });
  m.def(
      "load_questions",
      [](const std::string &path) {
        QuestionSet set = LoadQuestions(path);
        return py::make_tuple(set.questions, set.discarded_multiword);
      },
      py::arg("path"), "(questions, discarded_multiword)");

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("attempted", &EvalResult::attempted)
      .def_readonly("correct", &EvalResult::correct)
      .def_readonly("total", &EvalResult::total)
      .def_readonly("precision", &EvalResult::precision)
      .def_readonly("recall", &EvalResult::recall)
      .def_readonly("f_score", &EvalResult::f_score)
      .def_readonly("precision_defined", &EvalResult::precision_defined);
  m.def("eval_from_counts", &EvalResult::FromCounts, py::arg("attempted"),
        py::arg("correct"), py::arg("total"));
  m.def(
      "evaluate_questions",
      [](const std::vector<ContrastQuestion> &questions,
         const std::vector<std::optional<int>> &outputs) {
        return EvaluateQuestions(questions, outputs);
      },
      py::arg("questions"), py::arg("outputs"));
  m.def(
      "random_baseline",
      [](const std::vector<ContrastQuestion> &questions, int trials, uint64_t seed) {
        return RandomBaseline(questions, trials, seed);
      },
      py::arg("questions"), py::arg("trials") = 10000, py::arg("seed") = 0);

  py::class_<DistributionalThesaurus>(m, "DistributionalThesaurus")
      .def("__len__", &DistributionalThesaurus::size)
      .def("neighbors", [](const DistributionalThesaurus &dt, const std::string &word) {
        std::vector<std::pair<std::string, double>> out;
        if (const auto *list = dt.Find(word)) {
          for (const Neighbor &n : *list) out.emplace_back(n.word, n.score);
        }
        return out;
      });
  m.def(
      "parse_distributional_thesaurus",
      [](const std::string &text) {
        std::istringstream in(text);
        return ParseDistributionalThesaurus(in, "<string>");
      },
      py::arg("text"));
  m.def("load_distributional_thesaurus", &LoadDistributionalThesaurus,
        py::arg("path"));
  m.def(
      "generate_contrast_questions",
      [](const std::vector<SeedPair> &opposites, const DistributionalThesaurus &dt,
         uint64_t seed) { return GenerateContrastQuestions(opposites, dt, seed); },
      py::arg("opposites"), py::arg("dt"), py::arg("seed") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string> &args) {
        std::vector<const char *> argv = {"lexcontrast"};
        for (const std::string &arg : args) argv.push_back(arg.c_str());
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool; returns (exit_code, stdout, stderr)");
}
