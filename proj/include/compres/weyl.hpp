#pragma once

// The infinite dihedral group W = <s, t | s^2 = t^2 = 1>.
//
// Every element has a unique reduced word, an alternating string in s and t,
// so an element is pinned down by its length and first letter.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace compres {

enum class Letter : std::uint8_t { S = 0, T = 1 };

constexpr Letter other(Letter g) { return g == Letter::S ? Letter::T : Letter::S; }
constexpr char to_char(Letter g) { return g == Letter::S ? 's' : 't'; }

class WeylParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class WeylWord {
public:
  // The identity.
  constexpr WeylWord() = default;
  // The alternating word of the given length starting with `first`.
  WeylWord(Letter first, int length);

  static WeylWord identity() { return {}; }
  static WeylWord generator(Letter g) { return {g, 1}; }
  static WeylWord gen_s() { return generator(Letter::S); }
  static WeylWord gen_t() { return generator(Letter::T); }
  // (st)^n for n >= 0.
  static WeylWord st_power(int n) { return n == 0 ? WeylWord{} : WeylWord{Letter::S, 2 * n}; }
  // (ts)^n for n >= 0.
  static WeylWord ts_power(int n) { return n == 0 ? WeylWord{} : WeylWord{Letter::T, 2 * n}; }

  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }
  // nullopt exactly for the identity.
  std::optional<Letter> first() const;
  std::optional<Letter> last() const;
  // The i-th letter of the reduced word, 0 <= i < length().
  Letter letter(int i) const;

  WeylWord inverse() const;
  std::string str() const;

  friend WeylWord operator*(const WeylWord& x, const WeylWord& y);
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  // Shortlex: by length, then s-initial before t-initial.
  friend std::strong_ordering operator<=>(const WeylWord& a, const WeylWord& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.first_ <=> b.first_;
  }

private:
  int length_ = 0;
  Letter first_ = Letter::S;  // meaningless when length_ == 0
};

// True iff l(xy) = l(x) + l(y).
bool lengths_add(const WeylWord& x, const WeylWord& y);

// Subword criterion: x <= w iff the reduced word of x is a subsequence of
// the reduced word of w.
bool bruhat_leq(const WeylWord& x, const WeylWord& w);

// Accepts "e" or a nonempty alternating string over {s, t}.
WeylWord parse_word(std::string_view text);

}  // namespace compres
