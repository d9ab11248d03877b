#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cc2 {

/// One syllable g^e of a word; `gen` indexes the presentation's generator list.
struct Letter {
  int gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word in syllable form. Adjacent syllables on the same
/// generator are merged on construction, zero exponents dropped.
class Word {
 public:
  Word() = default;

  static Word gen(int g, std::int64_t e = 1);

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  [[nodiscard]] Word inverse() const;
  /// Concatenates |e| copies of the word (or of its inverse for e < 0).
  [[nodiscard]] Word pow(std::int64_t e) const;

  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  /// Sum of |exponent| over all syllables.
  [[nodiscard]] std::int64_t length() const;
  [[nodiscard]] int max_generator() const;

  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(Letter l);

  std::vector<Letter> letters_;
};

/// Parses words such as "y*x1^-1*x2^4", "yx1", "(x*y)^2" or "1". Generator
/// names are matched longest-first. Throws InvalidArgument on bad input.
[[nodiscard]] Word parse_word(std::string_view text, const std::vector<std::string>& names);

}  // namespace cc2
