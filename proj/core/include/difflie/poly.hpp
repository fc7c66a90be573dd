#pragma once

#include "difflie/alphabet.hpp"
#include "difflie/context.hpp"
#include "difflie/naword.hpp"
#include "difflie/rational.hpp"
#include "difflie/word.hpp"

#include <map>
#include <span>
#include <utility>

namespace difflie {

// The alphabet plus the weight lambda of the differential law
// D(xy) = D(x)y + xD(y) + lambda D(x)D(y).
struct AlgebraConfig {
  Alphabet alphabet;
  Rational lambda;
};

// An element of the free differential associative Omega-algebra: a finite map
// from words to nonzero rationals, kept in Deg-lex descending order so the
// leading term is the first entry.
class Poly {
public:
  using Terms = std::map<Word, Rational, DeglexDescending>;

  Poly() = default;
  explicit Poly(const Word& w, const Rational& c = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  // Throws Error on the zero polynomial.
  const Word& leading_word() const;
  const Rational& leading_coefficient() const;
  std::pair<Word, Rational> leading() const;

  // Degree of the leading word; 0 for the zero polynomial.
  unsigned degree() const;
  Rational coefficient(const Word& w) const;

  void add(const Word& w, const Rational& c);
  void add_scaled(const Poly& p, const Rational& c);

  Poly& operator+=(const Poly& p);
  Poly& operator-=(const Poly& p);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  // Bilinear extension of concatenation.
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
  Terms terms_;
};

inline Poly multiply(const Poly& p, const Poly& q) { return p * q; }
// (pq) = pq - qp.
Poly commutator(const Poly& p, const Poly& q);

// Multilinear extension of omega on monomials. Throws Error on arity mismatch.
Poly apply_operator(const Alphabet& alphabet, OperatorId op, std::span<const Poly> args);

// D on polynomials, via the closed-form subset expansion: on u = u_1...u_n the
// sum over nonempty position sets T of lambda^{|T|-1} times u with D applied at
// T. Primes just gain one D-power.
Poly apply_D(const Poly& p, const Rational& lambda);
Poly apply_D(const Poly& p, const Rational& lambda, unsigned times);
Poly apply_D(const Word& u, const Rational& lambda, unsigned times = 1);

// Leading word and coefficient of D^i(u) without expanding it.
//   lambda = 0:  D^i(u_1) u_2...u_n, coefficient 1
//   lambda != 0: D^i(u_1)...D^i(u_n), coefficient lambda^{(n-1)i}
std::pair<Word, Rational> d_power_leading(const Word& u, unsigned i, const Rational& lambda);
// Degree of that leading word.
unsigned d_power_leading_degree(const Word& u, unsigned i, const Rational& lambda);

// Expands every bracket (a b) to ab - ba. Throws Error if t contains a hole.
Poly lie_expand(const NAWord& t);
// Same, with the hole of a bracketing template replaced by `fill`.
Poly lie_expand(const NAWord& t, const Poly& fill);

// pi|_p, extended linearly. A D^k-wrapped hole applies D^k to p first.
Poly substitute(const Context& pi, const Poly& p, const Rational& lambda);

} // namespace difflie
