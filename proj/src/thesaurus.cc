#include "lexcontrast/thesaurus.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "lexcontrast/error.h"
#include "lexcontrast/text.h"

namespace lexcontrast {

std::string_view PartOfSpeechName(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun:
      return "noun";
    case PartOfSpeech::kVerb:
      return "verb";
    case PartOfSpeech::kAdjective:
      return "adjective";
    case PartOfSpeech::kAdverb:
      return "adverb";
  }
  return "noun";
}

bool ParsePartOfSpeech(std::string_view name, PartOfSpeech *pos) {
  std::string folded = CaseFold(Trim(name));
  if (folded == "noun") {
    *pos = PartOfSpeech::kNoun;
  } else if (folded == "verb") {
    *pos = PartOfSpeech::kVerb;
  } else if (folded == "adjective") {
    *pos = PartOfSpeech::kAdjective;
  } else if (folded == "adverb") {
    *pos = PartOfSpeech::kAdverb;
  } else {
    return false;
  }
  return true;
}

Thesaurus Thesaurus::FromCategories(std::vector<Category> categories) {
  Thesaurus result;
  std::sort(categories.begin(), categories.end(),
            [](const Category &a, const Category &b) {
              return a.number < b.number;
            });

  for (size_t i = 0; i < categories.size(); ++i) {
    Category &category = categories[i];
    if (category.number <= 0) {
      throw ValidationError("category number must be positive, got " +
                            std::to_string(category.number));
    }
    if (i > 0 && categories[i - 1].number == category.number) {
      throw ValidationError("duplicate category number " +
                            std::to_string(category.number));
    }
    if (category.paragraphs.empty()) {
      throw ValidationError("category " + std::to_string(category.number) +
                            " has no paragraphs");
    }
    category.head_word = NormalizeWord(category.head_word);
    if (category.head_word.empty()) {
      throw ValidationError("category " + std::to_string(category.number) +
                            " has an empty head word");
    }

    bool head_listed = false;
    for (size_t p = 0; p < category.paragraphs.size(); ++p) {
      Paragraph &paragraph = category.paragraphs[p];
      if (paragraph.words.empty()) {
        throw ValidationError("paragraph " + std::to_string(p) +
                              " of category " +
                              std::to_string(category.number) + " is empty");
      }
      std::vector<std::string> words;
      std::unordered_set<std::string> seen;
      for (const std::string &raw : paragraph.words) {
        std::string word = NormalizeWord(raw);
        if (word.empty()) {
          throw ValidationError("empty word in category " +
                                std::to_string(category.number));
        }
        if (seen.insert(word).second) words.push_back(std::move(word));
      }
      paragraph.head = NormalizeWord(paragraph.head);
      if (paragraph.head.empty()) paragraph.head = words.front();
      if (!seen.count(paragraph.head)) {
        words.insert(words.begin(), paragraph.head);
      }
      paragraph.words = std::move(words);
      if (!head_listed) {
        head_listed = std::find(paragraph.words.begin(), paragraph.words.end(),
                                category.head_word) != paragraph.words.end();
      }
    }
    category.label_only_head = !head_listed;
  }

  result.categories_ = std::move(categories);

  // Reverse index. Vocabulary ids follow lexicographic order so that id
  // order and string order agree.
  std::vector<std::string> vocabulary;
  for (const Category &category : result.categories_) {
    for (const Paragraph &paragraph : category.paragraphs) {
      for (const std::string &word : paragraph.words) vocabulary.push_back(word);
    }
  }
  std::sort(vocabulary.begin(), vocabulary.end());
  vocabulary.erase(std::unique(vocabulary.begin(), vocabulary.end()),
                   vocabulary.end());
  result.word_ids_.reserve(vocabulary.size());
  for (size_t id = 0; id < vocabulary.size(); ++id) {
    result.word_ids_.emplace(vocabulary[id], static_cast<int>(id));
  }
  result.vocabulary_ = std::move(vocabulary);
  result.locations_.resize(result.vocabulary_.size());

  for (size_t slot = 0; slot < result.categories_.size(); ++slot) {
    const Category &category = result.categories_[slot];
    result.category_slot_.emplace(category.number, slot);
    for (size_t p = 0; p < category.paragraphs.size(); ++p) {
      const Paragraph &paragraph = category.paragraphs[p];
      for (const std::string &word : paragraph.words) {
        result.locations_[result.word_ids_.at(word)].push_back(
            {category.number, static_cast<int>(p), paragraph.pos});
      }
    }
  }
  return result;
}

const Category *Thesaurus::FindCategory(int number) const {
  auto it = category_slot_.find(number);
  if (it == category_slot_.end()) return nullptr;
  return &categories_[it->second];
}

const Paragraph &Thesaurus::paragraph(const WordLocation &location) const {
  const Category *category = FindCategory(location.category_number);
  if (category == nullptr || location.paragraph_index < 0 ||
      static_cast<size_t>(location.paragraph_index) >=
          category->paragraphs.size()) {
    throw UsageError("no paragraph at category " +
                     std::to_string(location.category_number) + " index " +
                     std::to_string(location.paragraph_index));
  }
  return category->paragraphs[location.paragraph_index];
}

int Thesaurus::WordId(std::string_view word) const {
  auto it = word_ids_.find(NormalizeWord(word));
  return it == word_ids_.end() ? -1 : it->second;
}

std::span<const WordLocation> Thesaurus::Locate(std::string_view word) const {
  int id = WordId(word);
  if (id < 0) return {};
  return locations_[id];
}

bool Thesaurus::Contains(std::string_view word) const {
  return WordId(word) >= 0;
}

std::vector<int> Thesaurus::CategoriesOf(std::string_view word) const {
  std::vector<int> numbers;
  for (const WordLocation &location : Locate(word)) {
    if (numbers.empty() || numbers.back() != location.category_number) {
      numbers.push_back(location.category_number);
    }
  }
  return numbers;
}

std::vector<std::string> Thesaurus::CategoryWords(int number) const {
  std::vector<std::string> words;
  const Category *category = FindCategory(number);
  if (category == nullptr) return words;
  for (const Paragraph &paragraph : category->paragraphs) {
    words.insert(words.end(), paragraph.words.begin(), paragraph.words.end());
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

Thesaurus ParseThesaurus(std::istream &in, const std::string &source) {
  std::vector<Category> categories;
  LineReader reader(in);
  std::string line;
  while (reader.Next(&line)) {
    if (IsCommentOrBlank(line)) continue;
    auto fields = Split(line, '\t');
    std::string_view tag = Trim(fields[0]);
    auto fail = [&](const std::string &what) {
      throw ParseError(source, reader.line_number(), what);
    };
    if (tag == "C") {
      if (fields.size() != 3) fail("expected C<TAB>number<TAB>head");
      int64_t number = 0;
      if (!ParseInt64(fields[1], &number) || number <= 0 ||
          number > 1'000'000'000) {
        fail("invalid category number '" + std::string(fields[1]) + "'");
      }
      if (NormalizeWord(fields[2]).empty()) fail("empty category head");
      Category category;
      category.number = static_cast<int>(number);
      category.head_word = std::string(fields[2]);
      categories.push_back(std::move(category));
    } else if (tag == "P") {
      if (fields.size() != 3) fail("expected P<TAB>pos<TAB>head");
      if (categories.empty()) fail("paragraph before any category");
      Paragraph paragraph;
      if (!ParsePartOfSpeech(fields[1], &paragraph.pos)) {
        fail("unknown part of speech '" + std::string(fields[1]) + "'");
      }
      if (NormalizeWord(fields[2]).empty()) fail("empty paragraph head");
      paragraph.head = std::string(fields[2]);
      categories.back().paragraphs.push_back(std::move(paragraph));
    } else if (tag == "W") {
      if (fields.size() != 2) fail("expected W<TAB>word");
      if (categories.empty() || categories.back().paragraphs.empty()) {
        fail("word before any paragraph");
      }
      if (NormalizeWord(fields[1]).empty()) fail("empty word");
      categories.back().paragraphs.back().words.emplace_back(fields[1]);
    } else {
      fail("unknown record tag '" + std::string(tag) + "'");
    }
  }
  return Thesaurus::FromCategories(std::move(categories));
}

Thesaurus LoadThesaurus(const std::string &path) {
  std::ifstream in = OpenInput(path);
  return ParseThesaurus(in, path);
}

void WriteThesaurus(const Thesaurus &thesaurus, std::ostream &out) {
  for (const Category &category : thesaurus.categories()) {
    out << "C\t" << category.number << '\t' << category.head_word << '\n';
    for (const Paragraph &paragraph : category.paragraphs) {
      out << "P\t" << PartOfSpeechName(paragraph.pos) << '\t' << paragraph.head
          << '\n';
      for (const std::string &word : paragraph.words) {
        out << "W\t" << word << '\n';
      }
    }
  }
}

}  // namespace lexcontrast
