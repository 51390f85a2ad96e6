#ifndef LEXCONTRAST_TESTS_FIXTURES_H_
#define LEXCONTRAST_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "lexcontrast/thesaurus.h"

namespace lexcontrast::testing {

Thesaurus ThesaurusFromText(const std::string &text);

// Categories 360 (hiding) and 361 (revealing), eight words each, with the
// verb paragraphs of cover and expose holding the seed cover/uncover.
Thesaurus HidingRevealingThesaurus();
extern const char kHidingRevealingText[];

// Categories 230 (indifference) and 423 (benevolence). caring is the second
// word of paragraph 1 of 423 and uncaring the fourth word of paragraph 2 of
// 230; white lie and disclosure sit in other paragraphs.
Thesaurus CaringUncaringThesaurus();
extern const char kCaringUncaringText[];

// ascent in 49 and 694, descent in 40, 50, 538 and 694; upwardness and
// downwardness share paragraphs with ascent and descent. broadside and salvo
// share category 287 only.
Thesaurus AscentDescentThesaurus();
extern const char kAscentDescentText[];

// Sixty-word vocabulary holding the example pair of every affix pattern.
std::vector<std::string> AffixVocabulary();
Thesaurus AffixThesaurus();

// Opposite pairs that also share a category, plus broadside/salvo.
struct LabeledPair {
  std::string word1;
  std::string word2;
  std::string gold;
};
std::vector<LabeledPair> SharedCategoryPairs();
// Each opposite pair shares a category and sits in adjacent categories;
// broadside/salvo only share a category.
std::string SharedCategoryThesaurusText();

}  // namespace lexcontrast::testing

#endif  // LEXCONTRAST_TESTS_FIXTURES_H_
