#pragma once

// Recursive-descent parser for the textual element formats.
//
//   expr   ::= sum
//   sum    ::= product (("+" | "-") product)*
//   product::= unary ("*" unary)*
//   unary  ::= "-" unary | atom
//   atom   ::= scalar | "q" ["^" int] | "(" expr ")" | token
//   scalar ::= int ["/" int]
//
// Domain tokens: "T[word]" (Hecke), "[Ts]", "[Tt]", "[E(n)]" (HH_0) and
// "L^n" (Laurent polynomials in lambda).  Unary minus binds tighter than
// the binary operators, so "-1 + q" is (-1) + q.

#include <stdexcept>
#include <string>
#include <string_view>

#include "compres/hecke.hpp"
#include "compres/hh0.hpp"
#include "compres/laurent.hpp"
#include "compres/spectral.hpp"

namespace compres {

class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// parse_laurent, parse_hecke, parse_hh0 and parse_lambda are declared next
// to their types and throw ParseError.

}  // namespace compres
