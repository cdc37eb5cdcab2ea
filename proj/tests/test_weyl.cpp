#include <doctest.h>

#include <vector>

#include "compres/oracles/bruhat_subwords.hpp"
#include "compres/weyl.hpp"

using namespace compres;

namespace {

std::vector<WeylWord> words(int max_length) {
  std::vector<WeylWord> out{WeylWord{}};
  for (int len = 1; len <= max_length; ++len) {
    out.emplace_back(Letter::S, len);
    out.emplace_back(Letter::T, len);
  }
  return out;
}

WeylWord word(const char* text) { return parse_word(text); }

}  // namespace

TEST_CASE("multiplication") {
  CHECK(word("s") * word("s") == WeylWord{});
  CHECK(word("st") * word("ts") == WeylWord{});
  const WeylWord x = word("st") * word("st");
  CHECK(x.length() == 4);
  CHECK(x.first() == Letter::S);
  CHECK(x.str() == "stst");
  CHECK(word("sts") * word("st") == word("s"));
  CHECK(word("st") * word("s") == word("sts"));
}

TEST_CASE("normal form") {
  CHECK_FALSE(WeylWord{}.first().has_value());
  CHECK(WeylWord{}.str() == "e");
  CHECK(word("tst").last() == Letter::T);
  CHECK(word("stst").letter(3) == Letter::T);
  CHECK(word("sts").inverse() == word("sts"));
  CHECK(word("st").inverse() == word("ts"));
  CHECK(WeylWord::st_power(2) == word("stst"));
  CHECK(WeylWord::ts_power(1) == word("ts"));
  CHECK(WeylWord::st_power(0) == WeylWord{});
}

TEST_CASE("lengths add") {
  CHECK(lengths_add(word("s"), word("t")));
  CHECK_FALSE(lengths_add(word("s"), word("s")));
  CHECK(lengths_add(word("st"), word("st")));
  CHECK(lengths_add(WeylWord{}, word("s")));
}

TEST_CASE("Bruhat order") {
  CHECK(bruhat_leq(word("s"), word("sts")));
  for (const auto& x : words(6)) CHECK(bruhat_leq(WeylWord{}, x));
  CHECK_FALSE(bruhat_leq(word("stst"), word("sts")));
  CHECK_FALSE(bruhat_leq(word("st"), word("ts")));
  CHECK(bruhat_leq(word("st"), word("sts")));
}

TEST_CASE("Bruhat order agrees with subword enumeration") {
  for (const auto& x : words(10))
    for (const auto& y : words(10)) CHECK(bruhat_leq(x, y) == oracles::bruhat_leq_bruteforce(x, y));
}

TEST_CASE("group laws") {
  const auto all = words(5);
  for (const auto& x : all) {
    CHECK(x * x.inverse() == WeylWord{});
    CHECK(x * WeylWord{} == x);
    CHECK(WeylWord{} * x == x);
    for (const auto& y : all) {
      const int sum = x.length() + y.length();
      CHECK((x * y).length() <= sum);
      CHECK((sum - (x * y).length()) % 2 == 0);
      for (const auto& z : all) CHECK((x * y) * z == x * (y * z));
    }
  }
}

TEST_CASE("shortlex order") {
  CHECK(WeylWord{} < word("s"));
  CHECK(word("s") < word("t"));
  CHECK(word("t") < word("st"));
  CHECK(word("st") < word("ts"));
}

TEST_CASE("parsing") {
  CHECK(parse_word("e") == WeylWord{});
  CHECK(parse_word("tstst").length() == 5);
  CHECK_THROWS_AS(parse_word("ss"), WeylParseError);
  CHECK_THROWS_AS(parse_word("stt"), WeylParseError);
  CHECK_THROWS_AS(parse_word(""), WeylParseError);
  CHECK_THROWS_AS(parse_word("sxt"), WeylParseError);
  CHECK_THROWS_AS(parse_word("es"), WeylParseError);
}
