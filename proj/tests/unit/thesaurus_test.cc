#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.h"
#include "lexcontrast/error.h"
#include "lexcontrast/thesaurus.h"

namespace lexcontrast {
namespace {

using testing::ThesaurusFromText;

TEST_CASE("hiding and revealing categories load with adjacency intact") {
  Thesaurus thesaurus = testing::HidingRevealingThesaurus();
  REQUIRE(thesaurus.size() == 2);
  CHECK(thesaurus.categories()[0].number == 360);
  CHECK(thesaurus.categories()[1].number == 361);
  CHECK(thesaurus.categories()[0].head_word == "hiding");
  CHECK(thesaurus.categories()[0].label_only_head);
  CHECK(thesaurus.categories()[0].paragraphs[0].pos == PartOfSpeech::kVerb);
  CHECK(thesaurus.FindCategory(361) != nullptr);
  CHECK(thesaurus.FindCategory(362) == nullptr);
}

TEST_CASE("minimal thesaurus") {
  Thesaurus thesaurus = ThesaurusFromText("C\t1\tword\nP\tnoun\tword\nW\tword\n");
  REQUIRE(thesaurus.size() == 1);
  CHECK_FALSE(thesaurus.categories()[0].label_only_head);
  CHECK(thesaurus.vocabulary() == std::vector<std::string>{"word"});
}

TEST_CASE("case-folded duplicates collapse to one entry") {
  Thesaurus thesaurus = ThesaurusFromText(
      "C\t1\tCover\nP\tverb\tCover\nW\tCover\nW\tcover\nW\tMask\n");
  const Paragraph &paragraph = thesaurus.categories()[0].paragraphs[0];
  CHECK(paragraph.words == std::vector<std::string>{"cover", "mask"});
  CHECK(paragraph.head == "cover");
  CHECK(thesaurus.Locate("COVER").size() == 1);
}

TEST_CASE("paragraph head missing from its words is inserted first") {
  Thesaurus thesaurus =
      ThesaurusFromText("C\t5\tx\nP\tnoun\thead\nW\tother\n");
  CHECK(thesaurus.categories()[0].paragraphs[0].words ==
        std::vector<std::string>{"head", "other"});
}

TEST_CASE("multiword entries keep single spaces") {
  Thesaurus thesaurus =
      ThesaurusFromText("C\t5\tx\nP\tnoun\tlie\nW\tWhite   Lie\nW\tlie\n");
  CHECK(thesaurus.Contains("white lie"));
  CHECK(thesaurus.Contains(" WHITE lie "));
}

TEST_CASE("locate ascent and descent") {
  Thesaurus thesaurus = testing::AscentDescentThesaurus();
  CHECK(thesaurus.CategoriesOf("ascent") == std::vector<int>{49, 694});
  CHECK(thesaurus.CategoriesOf("descent") ==
        std::vector<int>{40, 50, 538, 694});
  CHECK(thesaurus.Locate("unheard").empty());
}

TEST_CASE("a word in three categories has three locations") {
  Thesaurus thesaurus = ThesaurusFromText(
      "C\t1\ta\nP\tnoun\ta\nW\tbank\n"
      "C\t2\tb\nP\tnoun\tb\nW\tx\nP\tverb\ty\nW\tbank\n"
      "C\t7\tc\nP\tadverb\tc\nW\tbank\n");
  auto locations = thesaurus.Locate("bank");
  REQUIRE(locations.size() == 3);
  CHECK(locations[0] == WordLocation{1, 0, PartOfSpeech::kNoun});
  CHECK(locations[1] == WordLocation{2, 1, PartOfSpeech::kVerb});
  CHECK(locations[2] == WordLocation{7, 0, PartOfSpeech::kAdverb});
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const std::string &text) {
    try {
      ThesaurusFromText(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("C\t1\ta\nP\tnoun\ta\nX\tb\n") == 3);
  CHECK(line_of("W\torphan\n") == 1);
  CHECK(line_of("# comment\n\nC\t1\ta\nP\tpronoun\ta\n") == 4);
  CHECK(line_of("C\tabc\thead\n") == 1);
  CHECK(line_of("C\t1\ta\nP\tnoun\ta\nW\t  \n") == 3);
}

TEST_CASE("structural validation") {
  CHECK_THROWS_AS(ThesaurusFromText("C\t1\ta\nP\tnoun\ta\nW\ta\n"
                                    "C\t1\tb\nP\tnoun\tb\nW\tb\n"),
                  ValidationError);
  CHECK_THROWS_AS(ThesaurusFromText("C\t1\ta\nP\tnoun\ta\n"), ValidationError);
  CHECK_THROWS_AS(ThesaurusFromText("C\t1\ta\n"), ValidationError);
  CHECK_THROWS_AS(LoadThesaurus("/nonexistent/thesaurus.txt"), IoError);
}

TEST_CASE("categories are stored in ascending order") {
  Thesaurus thesaurus = ThesaurusFromText(
      "C\t9\tb\nP\tnoun\tb\nW\tb\nC\t3\ta\nP\tnoun\ta\nW\ta\n");
  CHECK(thesaurus.categories()[0].number == 3);
  CHECK(thesaurus.categories()[1].number == 9);
}

Thesaurus RandomThesaurus(std::mt19937 &rng) {
  static const char *kWords[] = {"a", "b", "c", "d", "e", "f", "g", "h",
                                 "i", "j", "k", "l", "m", "n", "o"};
  std::vector<Category> categories;
  int number = 0;
  int count = 1 + static_cast<int>(rng() % 8);
  for (int c = 0; c < count; ++c) {
    number += 1 + static_cast<int>(rng() % 3);
    Category category;
    category.number = number;
    category.head_word = kWords[rng() % 15];
    int paragraphs = 1 + static_cast<int>(rng() % 3);
    for (int p = 0; p < paragraphs; ++p) {
      Paragraph paragraph;
      paragraph.pos = static_cast<PartOfSpeech>(rng() % 4);
      int words = 1 + static_cast<int>(rng() % 5);
      for (int w = 0; w < words; ++w) paragraph.words.push_back(kWords[rng() % 15]);
      paragraph.head = paragraph.words.front();
      category.paragraphs.push_back(paragraph);
    }
    categories.push_back(category);
  }
  return Thesaurus::FromCategories(categories);
}

TEST_CASE("round trip and reverse index properties") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Thesaurus thesaurus = RandomThesaurus(rng);
    std::ostringstream out;
    WriteThesaurus(thesaurus, out);
    Thesaurus reloaded = ThesaurusFromText(out.str());
    REQUIRE(reloaded == thesaurus);

    size_t occurrences = 0;
    for (const Category &category : thesaurus.categories()) {
      for (size_t p = 0; p < category.paragraphs.size(); ++p) {
        for (const std::string &word : category.paragraphs[p].words) {
          ++occurrences;
          bool found = false;
          for (const WordLocation &location : thesaurus.Locate(word)) {
            found = found || (location.category_number == category.number &&
                              location.paragraph_index == static_cast<int>(p));
          }
          REQUIRE(found);
        }
      }
    }
    size_t indexed = 0;
    for (const std::string &word : thesaurus.vocabulary()) {
      REQUIRE_FALSE(thesaurus.Locate(word).empty());
      indexed += thesaurus.Locate(word).size();
    }
    CHECK(indexed == occurrences);
    CHECK(thesaurus.Locate("zz").empty());
  }
}

}  // namespace
}  // namespace lexcontrast
