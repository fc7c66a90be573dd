#pragma once

#include "difflie/alphabet.hpp"
#include "difflie/gsb.hpp"
#include "difflie/naword.hpp"
#include "difflie/poly.hpp"
#include "difflie/word.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace difflie {

// Term syntax:
//   poly   := mono (("+" | "-") mono)*
//   mono   := [rat] factor ("*" factor)*      juxtaposition also multiplies
//   factor := prime | "[" naword naword "]"
//   prime  := "D^" nat "(" head ")" | "D(" head ")" | head
//   head   := ident | opname "(" poly ("," poly)* ")"
//   naword := prime | "[" naword naword "]"
//   rat    := int ["/" nat]
// A lone "0" is the zero polynomial.

// A single bracketed word when the input is one, otherwise the expanded
// polynomial.
using Term = std::variant<NAWord, Poly>;

Term parse_term(std::string_view text, const Alphabet& alphabet);
Poly parse_poly(std::string_view text, const Alphabet& alphabet);
NAWord parse_naword(std::string_view text, const Alphabet& alphabet);
// A monomial with coefficient 1.
Word parse_word(std::string_view text, const Alphabet& alphabet);

std::string format(const Prime& p, const Alphabet& alphabet);
std::string format(const Word& w, const Alphabet& alphabet);
std::string format(const Poly& p, const Alphabet& alphabet);
std::string format(const NAWord& t, const Alphabet& alphabet);
std::string format(const LieForm& form, const Alphabet& alphabet);
std::string format(const Term& t, const Alphabet& alphabet);

} // namespace difflie
