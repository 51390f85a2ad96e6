#ifndef LEXCONTRAST_TEXT_H_
#define LEXCONTRAST_TEXT_H_

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace lexcontrast {

// ASCII lower-casing; bytes outside ASCII pass through unchanged so UTF-8
// sequences survive.
std::string CaseFold(std::string_view text);

// Trims surrounding whitespace and collapses internal runs of whitespace to
// a single space, then case-folds. This is the canonical form of every word
// the library stores.
std::string NormalizeWord(std::string_view text);

// True if the word is a single token (no internal space).
bool IsUnigram(std::string_view word);

std::string_view Trim(std::string_view text);

// Splits on every occurrence of `delim`; empty fields are kept.
std::vector<std::string_view> Split(std::string_view text, char delim);

// Splits on runs of ASCII whitespace; empty fields are dropped.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

// Parses a base-10 integer occupying the whole field.
bool ParseInt64(std::string_view field, int64_t *value);

// Formats a double with a fixed number of decimals, locale independent.
std::string FormatDouble(double value, int decimals = 6);

// Opens a file for reading or writing, throwing IoError on failure.
std::ifstream OpenInput(const std::string &path);
std::ofstream OpenOutput(const std::string &path);

// Line reader that strips a trailing '\r' and tracks the line number.
class LineReader {
 public:
  explicit LineReader(std::istream &in) : in_(in) {}

  bool Next(std::string *line);
  int line_number() const { return line_number_; }

 private:
  std::istream &in_;
  int line_number_ = 0;
};

// True for blank lines and lines whose first non-space character is '#'.
bool IsCommentOrBlank(std::string_view line);

}  // namespace lexcontrast

#endif  // LEXCONTRAST_TEXT_H_
