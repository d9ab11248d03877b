#include "cc2/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "cc2/error.hpp"

namespace cc2 {

Word Word::gen(int g, std::int64_t e) {
  Word w;
  w.push({g, e});
  return w;
}

void Word::push(Letter l) {
  if (l.exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& l : rhs.letters_) push(l);
  return *this;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push({it->gen, -it->exp});
  return w;
}

Word Word::pow(std::int64_t e) const {
  const Word base = e < 0 ? inverse() : *this;
  Word w;
  for (std::int64_t i = 0; i < std::abs(e); ++i) w *= base;
  return w;
}

std::int64_t Word::length() const {
  std::int64_t len = 0;
  for (const auto& l : letters_) len += std::abs(l.exp);
  return len;
}

int Word::max_generator() const {
  int g = -1;
  for (const auto& l : letters_) g = std::max(g, l.gen);
  return g;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += '*';
    s += names.at(static_cast<std::size_t>(l.gen));
    if (l.exp != 1) s += '^' + std::to_string(l.exp);
  }
  return s;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

  Word parse() {
    Word w = parse_product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  Word parse_product() {
    Word w;
    bool any = false;
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      if (text_[pos_] == '*') {
        if (!any) fail("leading '*'");
        ++pos_;
        skip_space();
      }
      w *= parse_power();
      any = true;
    }
    if (!any) fail("empty word");
    return w;
  }

  Word parse_power() {
    Word base = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return base.pow(parse_exponent());
    }
    return base;
  }

  Word parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (text_[pos_] == '(') {
      ++pos_;
      Word inner = parse_product();
      expect(')');
      return inner;
    }
    std::size_t best = 0;
    int best_gen = -1;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& name = names_[i];
      if (name.size() > best && text_.substr(pos_, name.size()) == name) {
        best = name.size();
        best_gen = static_cast<int>(i);
      }
    }
    if (best_gen >= 0) {
      pos_ += best;
      return Word::gen(best_gen);
    }
    if (text_[pos_] == '1') {
      ++pos_;
      return {};
    }
    fail("unknown generator at '" + std::string(text_.substr(pos_)) + "'");
  }

  std::int64_t parse_exponent() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      const std::int64_t e = parse_exponent();
      expect(')');
      return e;
    }
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::int64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected integer exponent");
    pos_ += static_cast<std::size_t>(ptr - first);
    return neg ? -value : value;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse word '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  return WordParser(text, names).parse();
}

}  // namespace cc2
