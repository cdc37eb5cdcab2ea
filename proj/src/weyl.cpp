#include "compres/weyl.hpp"

#include <cstdlib>

namespace compres {

WeylWord::WeylWord(Letter first, int length) : length_(length), first_(first) {
  if (length < 0) throw std::invalid_argument("negative word length");
  if (length == 0) first_ = Letter::S;
}

std::optional<Letter> WeylWord::first() const {
  if (length_ == 0) return std::nullopt;
  return first_;
}

std::optional<Letter> WeylWord::last() const {
  if (length_ == 0) return std::nullopt;
  return letter(length_ - 1);
}

Letter WeylWord::letter(int i) const {
  if (i < 0 || i >= length_) throw std::out_of_range("letter index out of range");
  return i % 2 == 0 ? first_ : other(first_);
}

WeylWord WeylWord::inverse() const {
  if (length_ == 0) return {};
  return {*last(), length_};
}

std::string WeylWord::str() const {
  if (length_ == 0) return "e";
  std::string out;
  out.reserve(length_);
  for (int i = 0; i < length_; ++i) out.push_back(to_char(letter(i)));
  return out;
}

WeylWord operator*(const WeylWord& x, const WeylWord& y) {
  if (x.length_ == 0) return y;
  if (y.length_ == 0) return x;
  if (*x.last() != y.first_) return {x.first_, x.length_ + y.length_};
  // The boundary letters agree, and so do the next ones inward: the shorter
  // factor cancels completely.
  if (x.length_ == y.length_) return {};
  if (x.length_ > y.length_) return {x.first_, x.length_ - y.length_};
  return {y.letter(x.length_), y.length_ - x.length_};
}

bool lengths_add(const WeylWord& x, const WeylWord& y) {
  return (x * y).length() == x.length() + y.length();
}

bool bruhat_leq(const WeylWord& x, const WeylWord& w) {
  int pos = 0;
  for (int i = 0; i < w.length() && pos < x.length(); ++i)
    if (w.letter(i) == x.letter(pos)) ++pos;
  return pos == x.length();
}

WeylWord parse_word(std::string_view text) {
  if (text == "e") return {};
  if (text.empty()) throw WeylParseError("empty word");
  auto letter_of = [&](char c) {
    if (c == 's') return Letter::S;
    if (c == 't') return Letter::T;
    throw WeylParseError("unexpected character '" + std::string(1, c) + "' in word");
  };
  Letter first = letter_of(text[0]);
  for (size_t i = 1; i < text.size(); ++i) {
    if (letter_of(text[i]) == letter_of(text[i - 1]))
      throw WeylParseError("word '" + std::string(text) + "' is not reduced");
  }
  return {first, static_cast<int>(text.size())};
}

}  // namespace compres
