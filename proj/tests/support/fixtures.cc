#include "fixtures.h"

#include <sstream>

namespace lexcontrast::testing {

Thesaurus ThesaurusFromText(const std::string &text) {
  std::istringstream in(text);
  return ParseThesaurus(in, "<fixture>");
}

const char kHidingRevealingText[] =
    "C\t360\thiding\n"
    "P\tverb\tcover\n"
    "W\tcover\nW\tmask\nW\tveil\nW\tcloak\nW\tshroud\n"
    "P\tnoun\tconcealment\n"
    "W\tconcealment\nW\tsecrecy\nW\tdisguise\n"
    "C\t361\trevealing\n"
    "P\tverb\texpose\n"
    "W\texpose\nW\tuncover\nW\tbare\nW\treveal\nW\tunmask\n"
    "P\tnoun\tdisclosure\n"
    "W\tdisclosure\nW\trevelation\nW\texposure\n";

Thesaurus HidingRevealingThesaurus() {
  return ThesaurusFromText(kHidingRevealingText);
}

const char kCaringUncaringText[] =
    "C\t423\tbenevolence\n"
    "P\tnoun\tbenevolence\n"
    "W\tbenevolence\nW\tkindness\nW\tgoodwill\n"
    "P\tadjective\tsympathetic\n"
    "W\tsympathetic\nW\tcaring\nW\tcompassionate\nW\ttender\n"
    "P\tnoun\twhite lie\n"
    "W\twhite lie\nW\tfib\nW\ttact\n"
    "C\t230\tindifference\n"
    "P\tnoun\tindifference\n"
    "W\tindifference\nW\tapathy\nW\tnonchalance\n"
    "P\tnoun\tcandour\n"
    "W\tcandour\nW\tbluntness\nW\tdisclosure\n"
    "P\tadjective\tindifferent\n"
    "W\tindifferent\nW\tcold\nW\taloof\nW\tuncaring\n";

Thesaurus CaringUncaringThesaurus() {
  return ThesaurusFromText(kCaringUncaringText);
}

const char kAscentDescentText[] =
    "C\t40\taristocracy\n"
    "P\tnoun\taristocracy\n"
    "W\taristocracy\nW\tnobility\nW\tlineage\nW\tdescent\n"
    "C\t41\tmiddle class\n"
    "P\tnoun\tbourgeoisie\n"
    "W\tbourgeoisie\nW\tmiddle class\n"
    "C\t42\tworking class\n"
    "P\tnoun\tproletariat\n"
    "W\tproletariat\nW\tworking class\nW\tlabourer\n"
    "C\t49\tclimbing\n"
    "P\tnoun\tascent\n"
    "W\tascent\nW\tclimb\nW\tupwardness\nW\trise\n"
    "C\t50\tdropping\n"
    "P\tnoun\tdescent\n"
    "W\tdescent\nW\tfall\nW\tdownwardness\nW\tdrop\n"
    "C\t287\tattack\n"
    "P\tnoun\tbroadside\n"
    "W\tbroadside\nW\tsalvo\nW\tvolley\nW\tbarrage\n"
    "C\t538\tparentage\n"
    "P\tnoun\tparentage\n"
    "W\tparentage\nW\tancestry\nW\tdescent\n"
    "C\t694\tslope\n"
    "P\tnoun\tslope\n"
    "W\tslope\nW\tincline\nW\tascent\nW\tdescent\nW\tgradient\n";

Thesaurus AscentDescentThesaurus() {
  return ThesaurusFromText(kAscentDescentText);
}

std::vector<std::string> AffixVocabulary() {
  return {
      // The example pair of each of the fifteen patterns.
      "clockwise", "anticlockwise", "interest", "disinterest", "possible",
      "impossible", "consistent", "inconsistent", "adroit", "maladroit",
      "fortune", "misfortune", "aligned", "nonaligned", "biased", "unbiased",
      "legal", "illegal", "regular", "irregular", "implicit", "explicit",
      "introvert", "extrovert", "uphill", "downhill", "overdone", "underdone",
      "harmless", "harmful",
      // Known-noisy matches.
      "sect", "insect", "part", "impart", "ion", "union",
      // Stems below three characters.
      "do", "undo", "it", "unit",
      // Further genuine matches, including one stem with two mates and a
      // chain across patterns 3 and 11.
      "happy", "unhappy", "honest", "dishonest", "kind", "unkind", "careless",
      "careful", "able", "disable", "unable", "mortal", "immortal", "press",
      "impress", "express",
      // Words without mates.
      "hopeless", "enable", "legible", "relevant",
  };
}

Thesaurus AffixThesaurus() {
  std::vector<std::string> words = AffixVocabulary();
  std::vector<Category> categories;
  // Spread over four categories of fifteen words.
  for (int c = 0; c < 4; ++c) {
    Category category;
    category.number = 10 + c;
    category.head_word = words[c * 15];
    Paragraph paragraph;
    paragraph.pos = PartOfSpeech::kAdjective;
    paragraph.head = words[c * 15];
    for (int i = 0; i < 15; ++i) paragraph.words.push_back(words[c * 15 + i]);
    category.paragraphs.push_back(paragraph);
    categories.push_back(category);
  }
  return Thesaurus::FromCategories(std::move(categories));
}

std::vector<LabeledPair> SharedCategoryPairs() {
  return {
      {"amateur", "professional", "opposite"}, {"ascent", "descent", "opposite"},
      {"back", "front", "opposite"},           {"bottom", "top", "opposite"},
      {"broadside", "salvo", "synonym"},       {"entrance", "exit", "opposite"},
      {"heaven", "hell", "opposite"},          {"inside", "outside", "opposite"},
      {"junior", "senior", "opposite"},        {"lie", "truth", "opposite"},
      {"majority", "minority", "opposite"},    {"nadir", "zenith", "opposite"},
      {"strength", "weakness", "opposite"},
  };
}

std::string SharedCategoryThesaurusText() {
  std::ostringstream out;
  int k = 0;
  for (const LabeledPair &pair : SharedCategoryPairs()) {
    ++k;
    // Shared category, far from everything else.
    out << "C\t" << 900 + 2 * k << "\tshared" << k << "\n"
        << "P\tnoun\t" << pair.word1 << "\n"
        << "W\t" << pair.word1 << "\nW\t" << pair.word2 << "\n";
    if (pair.gold != "opposite") continue;
    out << "C\t" << 100 + 10 * k << "\t" << pair.word1 << "\n"
        << "P\tnoun\t" << pair.word1 << "\nW\t" << pair.word1 << "\n"
        << "C\t" << 101 + 10 * k << "\t" << pair.word2 << "\n"
        << "P\tnoun\t" << pair.word2 << "\nW\t" << pair.word2 << "\n";
  }
  return out.str();
}

}  // namespace lexcontrast::testing
