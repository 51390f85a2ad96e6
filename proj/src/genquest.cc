#include "lexcontrast/genquest.h"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include "lexcontrast/error.h"
#include "lexcontrast/random.h"
#include "lexcontrast/text.h"

namespace lexcontrast {

void DistributionalThesaurus::Add(std::string_view word,
                                  std::vector<Neighbor> neighbors) {
  std::string key = NormalizeWord(word);
  for (size_t i = 0; i < neighbors.size(); ++i) {
    neighbors[i].word = NormalizeWord(neighbors[i].word);
    if (neighbors[i].word == key) {
      throw ValidationError("'" + key + "' lists itself as a neighbor");
    }
    if (i > 0 && neighbors[i].score > neighbors[i - 1].score) {
      throw ValidationError("neighbors of '" + key +
                            "' are not in decreasing order of similarity");
    }
  }
  auto &entry = entries_[key];
  entry.insert(entry.end(), neighbors.begin(), neighbors.end());
}

const std::vector<Neighbor> *DistributionalThesaurus::Find(
    std::string_view word) const {
  auto it = entries_.find(NormalizeWord(word));
  return it == entries_.end() ? nullptr : &it->second;
}

DistributionalThesaurus ParseDistributionalThesaurus(
    std::istream &in, const std::string &source) {
  DistributionalThesaurus dt;
  LineReader reader(in);
  std::string line;
  while (reader.Next(&line)) {
    if (IsCommentOrBlank(line)) continue;
    auto fail = [&](const std::string &what) {
      throw ParseError(source, reader.line_number(), what);
    };
    auto fields = Split(line, '\t');
    if (fields.size() != 2) fail("expected word<TAB>neighbor:score,...");
    if (NormalizeWord(fields[0]).empty()) fail("empty focus word");
    std::vector<Neighbor> neighbors;
    if (!Trim(fields[1]).empty()) {
      for (std::string_view item : Split(fields[1], ',')) {
        size_t colon = item.rfind(':');
        if (colon == std::string_view::npos) fail("expected neighbor:score");
        Neighbor neighbor;
        neighbor.word = NormalizeWord(item.substr(0, colon));
        std::string score(Trim(item.substr(colon + 1)));
        char *end = nullptr;
        neighbor.score = std::strtod(score.c_str(), &end);
        if (neighbor.word.empty() || score.empty() || *end != '\0') {
          fail("invalid neighbor entry '" + std::string(item) + "'");
        }
        neighbors.push_back(std::move(neighbor));
      }
    }
    try {
      dt.Add(fields[0], std::move(neighbors));
    } catch (const ValidationError &e) {
      fail(e.what());
    }
  }
  return dt;
}

DistributionalThesaurus LoadDistributionalThesaurus(const std::string &path) {
  std::ifstream in = OpenInput(path);
  return ParseDistributionalThesaurus(in, path);
}

bool SharesPrefix3(std::string_view a, std::string_view b) {
  return a.substr(0, 3) == b.substr(0, 3);
}

std::vector<ContrastQuestion> GenerateContrastQuestions(
    std::span<const SeedPair> opposites, const DistributionalThesaurus &dt,
    uint64_t seed) {
  constexpr size_t kDistractors = 4;
  std::vector<ContrastQuestion> questions;
  for (const SeedPair &pair : opposites) {
    if (!IsUnigram(pair.first) || !IsUnigram(pair.second)) continue;
    Rng rng = DerivedRng(seed, pair.first, pair.second);
    const bool first_is_target = UniformIndex(rng, 2) == 0;
    const std::string &target = first_is_target ? pair.first : pair.second;
    const std::string &answer = first_is_target ? pair.second : pair.first;

    const std::vector<Neighbor> *neighbors = dt.Find(target);
    if (neighbors == nullptr) continue;
    std::vector<std::string> distractors;
    for (const Neighbor &neighbor : *neighbors) {
      if (distractors.size() == kDistractors) break;
      const std::string &word = neighbor.word;
      if (!IsUnigram(word) || word == target || word == answer) continue;
      if (SharesPrefix3(word, target) || SharesPrefix3(word, answer)) continue;
      if (std::find(distractors.begin(), distractors.end(), word) !=
          distractors.end()) {
        continue;
      }
      distractors.push_back(word);
    }
    if (distractors.size() < kDistractors) continue;

    ContrastQuestion question;
    question.target = target;
    question.answer_index =
        static_cast<int>(UniformIndex(rng, kDistractors + 1));
    question.alternatives = std::move(distractors);
    question.alternatives.insert(
        question.alternatives.begin() + question.answer_index, answer);
    questions.push_back(std::move(question));
  }
  return questions;
}

std::string SimpleStem(std::string_view word) {
  static constexpr std::string_view kSuffixes[] = {"ing", "est", "es",
                                                   "ed",  "er",  "s"};
  std::string folded = NormalizeWord(word);
  for (std::string_view suffix : kSuffixes) {
    if (folded.size() >= suffix.size() + 3 && folded.ends_with(suffix)) {
      folded.resize(folded.size() - suffix.size());
      break;
    }
  }
  return folded;
}

bool ShareStem(std::string_view a, std::string_view b) {
  return SimpleStem(a) == SimpleStem(b);
}

namespace {

std::set<std::string> Gloss(const Thesaurus &thesaurus, std::string_view word,
                            GlossScope scope) {
  std::set<std::string> gloss;
  for (const WordLocation &location : thesaurus.Locate(word)) {
    if (scope == GlossScope::kParagraph) {
      const Paragraph &paragraph = thesaurus.paragraph(location);
      gloss.insert(paragraph.words.begin(), paragraph.words.end());
    } else {
      for (std::string &w : thesaurus.CategoryWords(location.category_number)) {
        gloss.insert(std::move(w));
      }
    }
  }
  return gloss;
}

size_t Overlap(const std::set<std::string> &a, const std::set<std::string> &b) {
  size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

size_t LeskSimilarity(const Thesaurus &thesaurus, std::string_view a,
                      std::string_view b, GlossScope scope) {
  return Overlap(Gloss(thesaurus, a, scope), Gloss(thesaurus, b, scope));
}

WordChoiceOption WordChoiceAnswer(const Thesaurus &thesaurus,
                                  std::string_view target1,
                                  std::string_view target2, GlossScope scope) {
  const std::string first = NormalizeWord(target1);
  const std::string second = NormalizeWord(target2);
  std::set<std::string> pool;
  for (const std::string *target : {&first, &second}) {
    for (int number : thesaurus.CategoriesOf(*target)) {
      for (std::string &word : thesaurus.CategoryWords(number)) {
        pool.insert(std::move(word));
      }
    }
  }

  const std::set<std::string> gloss1 = Gloss(thesaurus, first, scope);
  const std::set<std::string> gloss2 = Gloss(thesaurus, second, scope);
  std::vector<std::pair<size_t, std::string>> scored;
  for (const std::string &candidate : pool) {
    if (candidate == first || candidate == second) continue;
    if (ShareStem(candidate, first) || ShareStem(candidate, second)) continue;
    const std::set<std::string> gloss = Gloss(thesaurus, candidate, scope);
    scored.emplace_back(Overlap(gloss, gloss1) + Overlap(gloss, gloss2),
                        candidate);
  }
  if (scored.size() < 4) {
    throw ComputationError("only " + std::to_string(scored.size()) +
                           " candidate words for " + first + ":" + second);
  }
  std::partial_sort(scored.begin(), scored.begin() + 4, scored.end(),
                    [](const auto &a, const auto &b) {
                      if (a.first != b.first) return a.first > b.first;
                      return a.second < b.second;
                    });
  WordChoiceOption answer;
  for (size_t i = 0; i < 4; ++i) answer[i] = scored[i].second;
  return answer;
}

namespace {

WordChoiceQuestion AssembleWordChoice(std::string target1, std::string target2,
                                      const WordChoiceOption &answer,
                                      std::span<const WordChoiceOption> pool,
                                      Rng &rng) {
  std::vector<WordChoiceOption> candidates;
  for (const WordChoiceOption &option : pool) {
    if (option == answer) continue;
    if (std::find(candidates.begin(), candidates.end(), option) !=
        candidates.end()) {
      continue;
    }
    candidates.push_back(option);
  }
  if (candidates.size() < 3) {
    throw ComputationError("distractor pool for " + target1 + ":" + target2 +
                           " has fewer than three options");
  }
  // Partial Fisher-Yates: the first three slots become the distractors.
  for (size_t i = 0; i < 3; ++i) {
    size_t j = i + static_cast<size_t>(UniformIndex(rng, candidates.size() - i));
    std::swap(candidates[i], candidates[j]);
  }
  std::vector<size_t> order = {0, 1, 2, 3};  // 0 is the answer
  Shuffle(order, rng);

  WordChoiceQuestion question;
  question.target1 = std::move(target1);
  question.target2 = std::move(target2);
  for (size_t slot = 0; slot < 4; ++slot) {
    if (order[slot] == 0) {
      question.options[slot] = answer;
      question.answer_index = static_cast<int>(slot);
    } else {
      question.options[slot] = candidates[order[slot] - 1];
    }
  }
  return question;
}

}  // namespace

WordChoiceQuestion GenerateWordChoice(const Thesaurus &thesaurus,
                                      std::string_view target1,
                                      std::string_view target2,
                                      GlossScope scope,
                                      std::span<const WordChoiceOption> pool,
                                      uint64_t seed) {
  std::string first = NormalizeWord(target1);
  std::string second = NormalizeWord(target2);
  for (const std::string *target : {&first, &second}) {
    if (!thesaurus.Contains(*target)) {
      throw UsageError("target word '" + *target + "' is not in the thesaurus");
    }
  }
  WordChoiceOption answer = WordChoiceAnswer(thesaurus, first, second, scope);
  Rng rng = DerivedRng(seed, first, second);
  return AssembleWordChoice(std::move(first), std::move(second), answer, pool,
                            rng);
}

std::vector<WordChoiceQuestion> GenerateWordChoiceBatch(
    const Thesaurus &thesaurus,
    std::span<const std::pair<std::string, std::string>> targets,
    GlossScope scope, uint64_t seed) {
  std::vector<WordChoiceOption> answers;
  answers.reserve(targets.size());
  for (const auto &[first, second] : targets) {
    for (const std::string *target : {&first, &second}) {
      if (!thesaurus.Contains(*target)) {
        throw UsageError("target word '" + *target +
                         "' is not in the thesaurus");
      }
    }
    answers.push_back(WordChoiceAnswer(thesaurus, first, second, scope));
  }
  std::vector<WordChoiceQuestion> questions;
  questions.reserve(targets.size());
  for (size_t i = 0; i < targets.size(); ++i) {
    std::vector<WordChoiceOption> pool;
    pool.reserve(answers.size() - 1);
    for (size_t j = 0; j < answers.size(); ++j) {
      if (j != i) pool.push_back(answers[j]);
    }
    const std::string first = NormalizeWord(targets[i].first);
    const std::string second = NormalizeWord(targets[i].second);
    Rng rng = DerivedRng(seed, first, second);
    questions.push_back(
        AssembleWordChoice(first, second, answers[i], pool, rng));
  }
  return questions;
}

void WriteWordChoiceQuestions(std::span<const WordChoiceQuestion> questions,
                              std::ostream &out) {
  for (const WordChoiceQuestion &question : questions) {
    out << question.target1 << ':' << question.target2 << '\t';
    for (size_t i = 0; i < question.options.size(); ++i) {
      if (i > 0) out << ';';
      const WordChoiceOption &option = question.options[i];
      for (size_t w = 0; w < option.size(); ++w) {
        if (w > 0) out << ',';
        out << option[w];
      }
    }
    out << '\t' << question.answer_index << '\n';
  }
}

}  // namespace lexcontrast
