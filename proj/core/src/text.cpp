#include "difflie/text.hpp"

#include "difflie/error.hpp"

#include <cctype>
#include <optional>

namespace difflie {

namespace {

struct Value {
  Poly poly;
  std::optional<NAWord> naword;
};

class Parser {
public:
  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Value parse_all() {
    skip();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (at_end()) return {};
      pos_ = save;
    }
    Value v = poly();
    skip();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident() {
    skip();
    if (!ident_start(peek())) fail("expected a symbol");
    std::size_t start = pos_;
    while (!at_end() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool factor_start() {
    skip();
    return peek() == '[' || ident_start(peek());
  }

  Value poly() {
    Value out = mono(false);
    for (;;) {
      skip();
      bool minus = peek() == '-';
      if (!minus && peek() != '+') return out;
      ++pos_;
      Value next = mono(minus);
      out.poly += next.poly;
      out.naword.reset();
    }
  }

  Value mono(bool negate) {
    skip();
    std::optional<Rational> coefficient;
    bool sign = false;
    if (peek() == '-') {
      sign = true;
      ++pos_;
      skip();
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string text = digits();
      if (accept('/')) text += "/" + digits();
      coefficient = parse_rational(text);
    } else if (sign) {
      coefficient = Rational(1);
    }
    if (coefficient && sign) *coefficient = -*coefficient;
    if (negate) coefficient = -coefficient.value_or(Rational(1));

    Value out = factor();
    std::size_t count = 1;
    for (;;) {
      if (accept('*')) {
      } else if (!factor_start()) {
        break;
      }
      Value next = factor();
      out.poly = out.poly * next.poly;
      ++count;
    }
    if (count > 1 || coefficient) out.naword.reset();
    if (coefficient) out.poly *= *coefficient;
    return out;
  }

  Value factor() {
    skip();
    if (peek() == '[') return bracket();
    return prime();
  }

  Value bracket() {
    expect('[');
    NAWord left = naword();
    NAWord right = naword();
    expect(']');
    NAWord t = NAWord::bracket(std::move(left), std::move(right));
    return {lie_expand(t), t};
  }

  NAWord naword() {
    skip();
    std::size_t start = pos_;
    Value v = peek() == '[' ? bracket() : prime();
    if (!v.naword) {
      pos_ = start;
      fail("operator arguments inside a bracket must be bracketed words");
    }
    return *v.naword;
  }

  Value prime() {
    skip();
    std::size_t start = pos_;
    std::string name = ident();
    if (name == "D") {
      unsigned power = 1;
      if (accept('^')) power = static_cast<unsigned>(std::stoul(digits()));
      expect('(');
      Value inner = prime();
      expect(')');
      return derive(std::move(inner), power);
    }
    skip();
    if (peek() == '(') {
      auto op = alphabet_.find_operator(name);
      if (!op) {
        pos_ = start;
        fail("unknown operator '" + name + "'");
      }
      ++pos_;
      std::vector<Value> args{poly()};
      while (accept(',')) args.push_back(poly());
      expect(')');
      if (args.size() != alphabet_.arity(*op)) {
        pos_ = start;
        fail("operator '" + name + "' takes " + std::to_string(alphabet_.arity(*op)) + " argument(s), got " +
             std::to_string(args.size()));
      }
      std::vector<Poly> polys;
      std::vector<NAWord> nawords;
      bool bracketed = true;
      for (auto& a : args) {
        polys.push_back(a.poly);
        if (a.naword) nawords.push_back(*a.naword);
        else bracketed = false;
      }
      Value out{apply_operator(alphabet_, *op, polys), std::nullopt};
      if (bracketed) out.naword = NAWord::apply(*op, std::move(nawords));
      return out;
    }
    auto id = alphabet_.find_generator(name);
    if (!id) {
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    return {Poly(Word({Prime::generator(*id)})), NAWord::generator(*id)};
  }

  static Value derive(Value v, unsigned power) {
    if (power == 0) return v;
    Poly out;
    for (const auto& [w, c] : v.poly) out.add(Word({w[0].derived(power)}), c);
    v.poly = std::move(out);
    if (v.naword) {
      const NAWord& t = *v.naword;
      v.naword = t.is_generator_leaf() ? NAWord::generator(t.generator_id(), t.d_power() + power)
                                       : NAWord::apply(t.op(), t.args(), t.d_power() + power);
    }
    return v;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

std::string d_wrap(std::string inner, unsigned d) {
  if (d == 0) return inner;
  if (d == 1) return "D(" + inner + ")";
  return "D^" + std::to_string(d) + "(" + inner + ")";
}

std::string inner_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.breadth(); ++i) {
    if (i) out += ' ';
    out += format(w[i], alphabet);
  }
  return out;
}

template <class Terms, class Body>
std::string format_sum(const Terms& terms, Body&& body) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, item] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + " ";
    out += body(item);
    first = false;
  }
  return out;
}

} // namespace

Term parse_term(std::string_view text, const Alphabet& alphabet) {
  Value v = Parser(text, alphabet).parse_all();
  if (v.naword) return *v.naword;
  return v.poly;
}

Poly parse_poly(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse_all().poly;
}

NAWord parse_naword(std::string_view text, const Alphabet& alphabet) {
  Value v = Parser(text, alphabet).parse_all();
  if (!v.naword) throw ParseError("not a bracketed word", 0);
  return *v.naword;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Poly p = parse_poly(text, alphabet);
  if (p.size() != 1 || p.leading_coefficient() != 1) throw ParseError("not a single word", 0);
  return p.leading_word();
}

std::string format(const Prime& p, const Alphabet& alphabet) {
  std::string head;
  if (p.is_generator()) {
    head = alphabet.generator_name(p.generator_id());
  } else {
    head = alphabet.operator_name(p.op()) + "(";
    for (std::size_t i = 0; i < p.args().size(); ++i) {
      if (i) head += ", ";
      head += inner_word(p.args()[i], alphabet);
    }
    head += ")";
  }
  return d_wrap(std::move(head), p.d_power());
}

std::string format(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.breadth(); ++i) {
    if (i) out += " * ";
    out += format(w[i], alphabet);
  }
  return out;
}

std::string format(const Poly& p, const Alphabet& alphabet) {
  std::vector<std::pair<Rational, Word>> terms;
  for (const auto& [w, c] : p) terms.emplace_back(c, w);
  return format_sum(terms, [&](const Word& w) { return format(w, alphabet); });
}

std::string format(const NAWord& t, const Alphabet& alphabet) {
  switch (t.kind()) {
  case NAWord::Kind::hole:
    return "*";
  case NAWord::Kind::bracket:
    return "[" + format(t.left(), alphabet) + " " + format(t.right(), alphabet) + "]";
  case NAWord::Kind::leaf:
    break;
  }
  std::string head;
  if (t.is_generator_leaf()) {
    head = alphabet.generator_name(t.generator_id());
  } else {
    head = alphabet.operator_name(t.op()) + "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) head += ", ";
      head += format(t.args()[i], alphabet);
    }
    head += ")";
  }
  return d_wrap(std::move(head), t.d_power());
}

std::string format(const LieForm& form, const Alphabet& alphabet) {
  return format_sum(form.bracketed(), [&](const NAWord& t) { return format(t, alphabet); });
}

std::string format(const Term& t, const Alphabet& alphabet) {
  return std::visit([&](const auto& v) { return format(v, alphabet); }, t);
}

} // namespace difflie
