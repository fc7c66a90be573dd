#include "difflie/rational.hpp"

#include "difflie/error.hpp"

#include <cctype>

namespace difflie {

Rational parse_rational(std::string_view text) {
  auto valid_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!valid_digits(num) || (slash != std::string_view::npos && !valid_digits(den)))
    throw Error("malformed rational '" + std::string(text) + "'");
  Rational value;
  if (slash == std::string_view::npos) {
    value = Rational(mpz_class(std::string(num)));
  } else {
    mpz_class d(std::string{den});
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num)), d);
    value.canonicalize();
  }
  if (text.front() == '-') value = -value;
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

} // namespace difflie
