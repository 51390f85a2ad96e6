#include "lexcontrast/corpus.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include <boost/math/distributions/students_t.hpp>

#include "lexcontrast/error.h"
#include "lexcontrast/text.h"

namespace lexcontrast {

WordPair CanonicalPair(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  return WordPair{std::string(a), std::string(b)};
}

size_t WordPairHash::operator()(const WordPair &pair) const {
  size_t h = std::hash<std::string>()(pair.first);
  size_t g = std::hash<std::string>()(pair.second);
  return h ^ (g + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

uint64_t CooccurrenceStore::UnigramCount(std::string_view word) const {
  auto it = unigrams_.find(CaseFold(word));
  return it == unigrams_.end() ? 0 : it->second;
}

uint64_t CooccurrenceStore::PairCount(std::string_view a,
                                      std::string_view b) const {
  auto it = pairs_.find(CanonicalPair(CaseFold(a), CaseFold(b)));
  return it == pairs_.end() ? 0 : it->second;
}

void CooccurrenceStore::AddUnigram(std::string_view word, uint64_t count) {
  unigrams_[CaseFold(word)] += count;
}

void CooccurrenceStore::AddPair(std::string_view a, std::string_view b,
                                uint64_t count) {
  pairs_[CanonicalPair(CaseFold(a), CaseFold(b))] += count;
}

void CooccurrenceStore::AddTotals(uint64_t tokens, uint64_t windows) {
  total_tokens_ += tokens;
  total_windows_ += windows;
}

void CooccurrenceStore::SetTotals(uint64_t tokens, uint64_t windows) {
  total_tokens_ = tokens;
  total_windows_ = windows;
}

void CooccurrenceStore::Merge(const CooccurrenceStore &other) {
  for (const auto &[word, count] : other.unigrams_) unigrams_[word] += count;
  for (const auto &[pair, count] : other.pairs_) pairs_[pair] += count;
  total_tokens_ += other.total_tokens_;
  total_windows_ += other.total_windows_;
}

void CooccurrenceStore::Validate() const {
  if (total_tokens_ == 0 || total_windows_ == 0) {
    throw ValidationError("corpus totals must be positive");
  }
  for (const auto &[word, count] : unigrams_) {
    if (count > total_tokens_) {
      throw ValidationError("unigram count of '" + word +
                            "' exceeds total_tokens");
    }
  }
  for (const auto &[pair, count] : pairs_) {
    if (count == 0) continue;
    if (UnigramCount(pair.first) == 0 || UnigramCount(pair.second) == 0) {
      throw ValidationError("pair (" + pair.first + ", " + pair.second +
                            ") references an unseen unigram");
    }
    if (count > total_windows_) {
      throw ValidationError("pair count of (" + pair.first + ", " +
                            pair.second + ") exceeds total_windows");
    }
  }
}

bool CooccurrenceStore::operator==(const CooccurrenceStore &other) const {
  return unigrams_ == other.unigrams_ && pairs_ == other.pairs_ &&
         total_tokens_ == other.total_tokens_ &&
         total_windows_ == other.total_windows_;
}

CooccurrenceStore CountCorpus(std::istream &in, int window) {
  if (window < 1) throw UsageError("window must be at least 1");
  const size_t span = static_cast<size_t>(window) - 1;
  CooccurrenceStore store;
  uint64_t tokens_total = 0;
  uint64_t position_pairs = 0;
  std::string line;
  std::vector<std::string> tokens;
  while (std::getline(in, line)) {
    tokens.clear();
    for (std::string_view token : SplitWhitespace(line)) {
      tokens.push_back(CaseFold(token));
    }
    const size_t n = tokens.size();
    for (size_t i = 0; i < n; ++i) {
      store.AddUnigram(tokens[i], 1);
      const size_t last = std::min(n - 1, i + span);
      for (size_t j = i + 1; j <= last; ++j) {
        store.AddPair(tokens[i], tokens[j], 1);
        ++position_pairs;
      }
    }
    tokens_total += n;
  }
  if (in.bad()) throw IoError("error reading corpus");
  if (tokens_total == 0) throw ComputationError("corpus contains no tokens");
  store.SetTotals(tokens_total, std::max<uint64_t>(position_pairs, 1));
  return store;
}

CooccurrenceStore CountCorpusFile(const std::string &path, int window) {
  if (window < 1) throw UsageError("window must be at least 1");
  std::ifstream in = OpenInput(path);
  return CountCorpus(in, window);
}

CooccurrenceStore ParseCounts(std::istream &in, const std::string &source) {
  CooccurrenceStore store;
  bool have_totals = false;
  LineReader reader(in);
  std::string line;
  auto count_field = [&](std::string_view field) {
    int64_t value = 0;
    if (!ParseInt64(field, &value)) {
      throw ParseError(source, reader.line_number(),
                       "invalid count '" + std::string(field) + "'");
    }
    if (value < 0) {
      throw ParseError(source, reader.line_number(), "negative count");
    }
    return static_cast<uint64_t>(value);
  };
  auto word_field = [&](std::string_view field) {
    std::string word = CaseFold(Trim(field));
    if (word.empty()) {
      throw ParseError(source, reader.line_number(), "empty word");
    }
    return word;
  };
  while (reader.Next(&line)) {
    if (IsCommentOrBlank(line)) continue;
    auto fields = Split(line, '\t');
    std::string_view tag = Trim(fields[0]);
    if (tag == "U" && fields.size() == 3) {
      store.AddUnigram(word_field(fields[1]), count_field(fields[2]));
    } else if (tag == "P" && fields.size() == 4) {
      store.AddPair(word_field(fields[1]), word_field(fields[2]),
                    count_field(fields[3]));
    } else if (tag == "T" && fields.size() == 3) {
      if (have_totals) {
        throw ParseError(source, reader.line_number(), "duplicate T record");
      }
      store.SetTotals(count_field(fields[1]), count_field(fields[2]));
      have_totals = true;
    } else {
      throw ParseError(source, reader.line_number(),
                       "expected U, P or T record");
    }
  }
  if (!have_totals) throw ValidationError(source + ": missing T record");
  store.Validate();
  return store;
}

CooccurrenceStore LoadCounts(const std::string &path) {
  std::ifstream in = OpenInput(path);
  return ParseCounts(in, path);
}

void WriteCounts(const CooccurrenceStore &store, std::ostream &out) {
  std::vector<std::pair<std::string, uint64_t>> unigrams(
      store.unigrams().begin(), store.unigrams().end());
  std::sort(unigrams.begin(), unigrams.end());
  std::vector<std::pair<WordPair, uint64_t>> pairs(store.pairs().begin(),
                                                   store.pairs().end());
  std::sort(pairs.begin(), pairs.end());
  out << "T\t" << store.total_tokens() << '\t' << store.total_windows()
      << '\n';
  for (const auto &[word, count] : unigrams) {
    out << "U\t" << word << '\t' << count << '\n';
  }
  for (const auto &[pair, count] : pairs) {
    out << "P\t" << pair.first << '\t' << pair.second << '\t' << count << '\n';
  }
}

std::optional<double> Pmi(const CooccurrenceStore &store, std::string_view a,
                          std::string_view b) {
  std::string first = CaseFold(a);
  std::string second = CaseFold(b);
  const uint64_t joint = store.PairCount(first, second);
  // Sorted so that swapping the words gives bit-identical results.
  const uint64_t count_a =
      std::min(store.UnigramCount(first), store.UnigramCount(second));
  const uint64_t count_b =
      std::max(store.UnigramCount(first), store.UnigramCount(second));
  if (joint == 0 || count_a == 0 || count_b == 0) return std::nullopt;
  if (store.total_tokens() == 0 || store.total_windows() == 0) {
    return std::nullopt;
  }
  // A difference of logs; the products could overflow for large counts.
  const double tokens = static_cast<double>(store.total_tokens());
  return std::log2(static_cast<double>(joint)) -
         std::log2(static_cast<double>(store.total_windows())) -
         std::log2(static_cast<double>(count_a)) -
         std::log2(static_cast<double>(count_b)) + 2.0 * std::log2(tokens);
}

std::vector<double> DefinedPmis(const CooccurrenceStore &store,
                                std::span<const WordPair> pairs) {
  std::vector<double> values;
  values.reserve(pairs.size());
  for (const WordPair &pair : pairs) {
    if (auto value = Pmi(store, pair.first, pair.second)) {
      values.push_back(*value);
    }
  }
  return values;
}

AssociationStats ComputeAssociationStats(const CooccurrenceStore &store,
                                         std::span<const WordPair> pairs) {
  if (pairs.empty()) throw UsageError("association statistics need pairs");
  std::vector<double> values = DefinedPmis(store, pairs);
  if (values.empty()) {
    throw ComputationError("no pair has a defined PMI");
  }
  AssociationStats stats;
  stats.n_pairs = pairs.size();
  stats.n_defined = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean_pmi = sum / static_cast<double>(values.size());
  double squares = 0.0;
  for (double v : values) squares += (v - stats.mean_pmi) * (v - stats.mean_pmi);
  stats.stddev_pmi = std::sqrt(squares / static_cast<double>(values.size()));
  return stats;
}

namespace {

void MeanAndSampleVariance(std::span<const double> values, double *mean,
                           double *variance) {
  double sum = 0.0;
  for (double v : values) sum += v;
  *mean = sum / static_cast<double>(values.size());
  double squares = 0.0;
  for (double v : values) squares += (v - *mean) * (v - *mean);
  *variance = squares / static_cast<double>(values.size() - 1);
}

}  // namespace

TTestResult WelchTTest(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw UsageError("t-test needs at least two values per sample");
  }
  double mean_a, var_a, mean_b, var_b;
  MeanAndSampleVariance(a, &mean_a, &var_a);
  MeanAndSampleVariance(b, &mean_b, &var_b);
  const double n_a = static_cast<double>(a.size());
  const double n_b = static_cast<double>(b.size());
  const double se_a = var_a / n_a;
  const double se_b = var_b / n_b;
  const double se = se_a + se_b;

  TTestResult result;
  if (se == 0.0) {
    // Both samples constant.
    result.degrees_of_freedom = n_a + n_b - 2.0;
    if (mean_a == mean_b) {
      result.t = 0.0;
      result.p_value = 1.0;
    } else {
      result.t = mean_a > mean_b ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
      result.p_value = 0.0;
    }
    return result;
  }
  result.t = (mean_a - mean_b) / std::sqrt(se);
  result.degrees_of_freedom =
      se * se / (se_a * se_a / (n_a - 1.0) + se_b * se_b / (n_b - 1.0));
  boost::math::students_t_distribution<double> dist(result.degrees_of_freedom);
  result.p_value = 2.0 * boost::math::cdf(boost::math::complement(
                             dist, std::fabs(result.t)));
  result.p_value = std::min(1.0, result.p_value);
  return result;
}

}  // namespace lexcontrast
