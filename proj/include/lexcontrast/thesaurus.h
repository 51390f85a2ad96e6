#ifndef LEXCONTRAST_THESAURUS_H_
#define LEXCONTRAST_THESAURUS_H_

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexcontrast {

enum class PartOfSpeech { kNoun, kVerb, kAdjective, kAdverb };

std::string_view PartOfSpeechName(PartOfSpeech pos);
// Returns false if `name` is not one of noun|verb|adjective|adverb.
bool ParsePartOfSpeech(std::string_view name, PartOfSpeech *pos);

// A group of near-synonyms sharing one part of speech. The head is always
// among the words.
struct Paragraph {
  std::string head;
  PartOfSpeech pos = PartOfSpeech::kNoun;
  std::vector<std::string> words;

  bool operator==(const Paragraph &) const = default;
};

// A coarse sense of the vocabulary, identified by its number.
struct Category {
  int number = 0;
  std::string head_word;
  // Set when the head word is a label that does not occur among the words.
  bool label_only_head = false;
  std::vector<Paragraph> paragraphs;

  bool operator==(const Category &) const = default;
};

// One occurrence of a word: a paragraph of some category.
struct WordLocation {
  int category_number = 0;
  int paragraph_index = 0;
  PartOfSpeech pos = PartOfSpeech::kNoun;

  auto operator<=>(const WordLocation &) const = default;
};

// An immutable thesaurus with a reverse index from words to locations.
// Categories are stored in ascending order of number.
class Thesaurus {
 public:
  Thesaurus() = default;

  // Validates the categories and builds the reverse index. Words are
  // normalized (case-folded, whitespace collapsed) and duplicates within a
  // paragraph removed, keeping the first occurrence. A paragraph head that
  // is missing from its words is inserted in front. Throws ValidationError
  // on duplicate or non-positive category numbers, categories without
  // paragraphs, and paragraphs without words.
  static Thesaurus FromCategories(std::vector<Category> categories);

  const std::vector<Category> &categories() const { return categories_; }
  size_t size() const { return categories_.size(); }

  // Returns nullptr if no category has the number.
  const Category *FindCategory(int number) const;
  const Paragraph &paragraph(const WordLocation &location) const;

  // All locations of `word`, sorted. Empty if the word is absent. The word
  // is normalized before lookup.
  std::span<const WordLocation> Locate(std::string_view word) const;
  bool Contains(std::string_view word) const;

  // Distinct category numbers in which the word occurs, ascending.
  std::vector<int> CategoriesOf(std::string_view word) const;

  // Every distinct word, sorted lexicographically.
  const std::vector<std::string> &vocabulary() const { return vocabulary_; }

  // Position of the word in vocabulary(), or -1.
  int WordId(std::string_view word) const;

  // Distinct words of a category in vocabulary order.
  std::vector<std::string> CategoryWords(int number) const;

  bool operator==(const Thesaurus &other) const {
    return categories_ == other.categories_;
  }

 private:
  std::vector<Category> categories_;
  std::unordered_map<int, size_t> category_slot_;
  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, int> word_ids_;
  std::vector<std::vector<WordLocation>> locations_;  // by word id
};

// Parses the line-oriented thesaurus format:
//   C<TAB>number<TAB>head   starts a category
//   P<TAB>pos<TAB>head      starts a paragraph
//   W<TAB>word              adds a word to the current paragraph
// '#' lines and blank lines are ignored. Throws ParseError or
// ValidationError.
Thesaurus ParseThesaurus(std::istream &in, const std::string &source = "<input>");
Thesaurus LoadThesaurus(const std::string &path);

// Serializes in the format ParseThesaurus reads.
void WriteThesaurus(const Thesaurus &thesaurus, std::ostream &out);

}  // namespace lexcontrast

#endif  // LEXCONTRAST_THESAURUS_H_
