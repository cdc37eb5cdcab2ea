#include "compres/expr.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace compres {

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Raw lookahead without skipping whitespace.
  char peek_raw(std::size_t offset = 0) const {
    return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept_raw(std::string_view s) {
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void unexpected() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail(std::string("unexpected '") + text_[pos_] + "'");
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek_raw()))) out += text_[pos_++];
    return out;
  }

  // Optionally signed integer, no whitespace inside.
  int integer() {
    const std::size_t start = pos_;
    bool negative = false;
    if (peek_raw() == '-' || peek_raw() == '+') negative = text_[pos_++] == '-';
    std::string d = digits();
    if (d.empty()) {
      pos_ = start;
      fail("expected an integer");
    }
    long long v = 0;
    for (char c : d) {
      v = v * 10 + (c - '0');
      if (v > std::numeric_limits<int>::max()) {
        pos_ = start;
        fail("integer out of range");
      }
    }
    return static_cast<int>(negative ? -v : v);
  }

  std::string_view rest_from(std::size_t start, std::size_t end) const {
    return text_.substr(start, end - start);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// A parsed value is either a pure scalar or an element of the target domain.
template <class Elem>
struct Value {
  LaurentQ scalar;
  std::optional<Elem> elem;
};

template <class Traits>
class Parser {
public:
  using Elem = typename Traits::Elem;
  using V = Value<Elem>;

  explicit Parser(std::string_view text) : cur_(text) {}

  Elem parse() {
    if (cur_.at_end()) cur_.fail("empty expression");
    V v = sum();
    if (!cur_.at_end()) cur_.unexpected();
    return finish(v);
  }

private:
  Elem finish(const V& v) {
    if (v.elem) return *v.elem;
    auto embedded = Traits::embed(v.scalar);
    if (!embedded) cur_.fail(std::string("a bare scalar is not a ") + Traits::kName);
    return *embedded;
  }

  V combine(const V& a, const V& b, bool subtract, std::size_t at) {
    if (!a.elem && !b.elem) return {subtract ? a.scalar - b.scalar : a.scalar + b.scalar, {}};
    auto lift = [&](const V& v) {
      if (v.elem) return *v.elem;
      auto e = Traits::embed(v.scalar);
      if (!e) throw ParseError(std::string("cannot add a scalar to a ") + Traits::kName, at);
      return *e;
    };
    Elem x = lift(a);
    Elem y = lift(b);
    return {LaurentQ(), subtract ? x - y : x + y};
  }

  V multiply(const V& a, const V& b, std::size_t at) {
    if (!a.elem && !b.elem) return {a.scalar * b.scalar, {}};
    if (!a.elem) return {LaurentQ(), Traits::scale(a.scalar, *b.elem)};
    if (!b.elem) return {LaurentQ(), Traits::scale(b.scalar, *a.elem)};
    auto product = Traits::multiply(*a.elem, *b.elem);
    if (!product) throw ParseError(std::string("cannot multiply two ") + Traits::kName + " elements", at);
    return {LaurentQ(), *product};
  }

  V sum() {
    V acc = product();
    for (;;) {
      const char c = cur_.peek();
      if (c != '+' && c != '-') return acc;
      const std::size_t at = cur_.pos();
      cur_.accept(c);
      acc = combine(acc, product(), c == '-', at);
    }
  }

  V product() {
    V acc = unary();
    while (cur_.peek() == '*') {
      const std::size_t at = cur_.pos();
      cur_.accept('*');
      acc = multiply(acc, unary(), at);
    }
    return acc;
  }

  V unary() {
    if (cur_.accept('-')) {
      V v = unary();
      if (v.elem) return {LaurentQ(), Traits::scale(LaurentQ(-1), *v.elem)};
      return {-v.scalar, {}};
    }
    return atom();
  }

  V atom() {
    const char c = cur_.peek();
    if (c == '(') {
      cur_.accept('(');
      V v = sum();
      cur_.expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return {scalar(), {}};
    if (c == 'q') {
      cur_.accept('q');
      int e = 1;
      if (cur_.peek_raw() == '^') {
        cur_.accept_raw("^");
        e = cur_.integer();
      }
      return {LaurentQ::q_power(e), {}};
    }
    if (auto e = Traits::token(cur_)) return {LaurentQ(), *e};
    cur_.unexpected();
  }

  LaurentQ scalar() {
    const std::size_t start = cur_.pos();
    std::string text = cur_.digits();
    if (cur_.peek_raw() == '/') {
      cur_.accept_raw("/");
      std::string den = cur_.digits();
      if (den.empty()) cur_.fail("expected a denominator");
      if (den.find_first_not_of('0') == std::string::npos)
        throw ParseError("zero denominator", start);
      text += "/" + den;
    }
    return LaurentQ(parse_rational(text));
  }

  Cursor cur_;
};

struct LaurentTraits {
  using Elem = LaurentQ;
  static constexpr const char* kName = "Laurent polynomial";
  static std::optional<Elem> embed(const LaurentQ& c) { return c; }
  static Elem scale(const LaurentQ& c, const Elem& x) { return c * x; }
  static std::optional<Elem> multiply(const Elem& a, const Elem& b) { return a * b; }
  static std::optional<Elem> token(Cursor&) { return std::nullopt; }
};

struct HeckeTraits {
  using Elem = HeckeElement;
  static constexpr const char* kName = "Hecke element";
  static std::optional<Elem> embed(const LaurentQ& c) { return HeckeElement(c); }
  static Elem scale(const LaurentQ& c, const Elem& x) { return c * x; }
  static std::optional<Elem> multiply(const Elem& a, const Elem& b) { return t_mul(a, b); }
  static std::optional<Elem> token(Cursor& cur) {
    if (cur.peek() != 'T' || cur.peek_raw(1) != '[') return std::nullopt;
    cur.accept_raw("T[");
    const std::size_t start = cur.pos();
    std::size_t end = start;
    while (cur.peek_raw(end - start) != ']' && cur.peek_raw(end - start) != '\0') ++end;
    if (cur.peek_raw(end - start) != ']') cur.fail("unterminated T[");
    WeylWord w;
    try {
      w = parse_word(cur.rest_from(start, end));
    } catch (const WeylParseError& e) {
      throw ParseError(e.what(), start);
    }
    cur.advance(end - start);
    cur.accept_raw("]");
    return HeckeElement::basis(w);
  }
};

struct HH0Traits {
  using Elem = HH0Class;
  static constexpr const char* kName = "HH_0 class";
  static std::optional<Elem> embed(const LaurentQ&) { return std::nullopt; }
  static Elem scale(const LaurentQ& c, const Elem& x) { return hh0_scale(c, x); }
  static std::optional<Elem> multiply(const Elem&, const Elem&) { return std::nullopt; }
  static std::optional<Elem> token(Cursor& cur) {
    if (cur.peek() != '[') return std::nullopt;
    if (cur.accept_raw("[Ts]")) return HH0Class::ts();
    if (cur.accept_raw("[Tt]")) return HH0Class::tt();
    if (cur.accept_raw("[E(")) {
      const std::size_t at = cur.pos();
      int n = cur.integer();
      if (n < 0) throw ParseError("E(n) needs n >= 0", at);
      if (!cur.accept_raw(")]")) cur.fail("expected ')]'");
      return HH0Class::e_n(n);
    }
    cur.fail("unknown bracket token");
  }
};

struct LambdaTraits {
  using Elem = LambdaElement;
  static constexpr const char* kName = "Laurent polynomial in L";
  static std::optional<Elem> embed(const LaurentQ& c) { return LambdaElement::power(0, c); }
  static Elem scale(const LaurentQ& c, const Elem& x) { return c * x; }
  static std::optional<Elem> multiply(const Elem& a, const Elem& b) {
    LambdaElement out;
    for (const auto& [m, x] : a.terms())
      for (const auto& [n, y] : b.terms()) out.add_term(m + n, x * y);
    return out;
  }
  static std::optional<Elem> token(Cursor& cur) {
    if (cur.peek() != 'L') return std::nullopt;
    cur.accept('L');
    if (!cur.accept_raw("^")) return LambdaElement::power(1);
    return LambdaElement::power(cur.integer());
  }
};

}  // namespace

LaurentQ parse_laurent(std::string_view text) { return Parser<LaurentTraits>(text).parse(); }
HeckeElement parse_hecke(std::string_view text) { return Parser<HeckeTraits>(text).parse(); }
HH0Class parse_hh0(std::string_view text) { return Parser<HH0Traits>(text).parse(); }
LambdaElement parse_lambda(std::string_view text) { return Parser<LambdaTraits>(text).parse(); }

}  // namespace compres
