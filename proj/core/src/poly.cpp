#include "difflie/poly.hpp"

#include "difflie/error.hpp"

#include <cstdint>

namespace difflie {

Poly::Poly(const Word& w, const Rational& c) {
  if (w.empty()) throw Error("polynomial term with empty word");
  if (c != 0) terms_.emplace(w, c);
}

const Word& Poly::leading_word() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.begin()->second;
}

std::pair<Word, Rational> Poly::leading() const { return {leading_word(), leading_coefficient()}; }

unsigned Poly::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

Rational Poly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Poly::add_scaled(const Poly& p, const Rational& c) {
  if (c == 0) return;
  if (&p == this) {
    *this *= Rational(c + 1);
    return;
  }
  for (const auto& [w, a] : p.terms_) add(w, a * c);
}

Poly& Poly::operator+=(const Poly& p) {
  add_scaled(p, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& p) {
  add_scaled(p, -1);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, a] : terms_) a *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) out.add(u * v, c * d);
  return out;
}

Poly commutator(const Poly& p, const Poly& q) { return p * q - q * p; }

Poly apply_operator(const Alphabet& alphabet, OperatorId op, std::span<const Poly> args) {
  if (args.size() != alphabet.arity(op))
    throw Error("operator '" + alphabet.operator_name(op) + "' expects " +
                std::to_string(alphabet.arity(op)) + " arguments, got " + std::to_string(args.size()));
  // Multilinear: iterate over the cartesian product of argument terms.
  Poly out;
  std::vector<Word> chosen(args.size());
  auto recurse = [&](auto&& self, std::size_t k, const Rational& coeff) -> void {
    if (k == args.size()) {
      out.add(Word(Prime::apply(op, chosen)), coeff);
      return;
    }
    for (const auto& [w, c] : args[k]) {
      chosen[k] = w;
      self(self, k + 1, coeff * c);
    }
  };
  recurse(recurse, 0, Rational(1));
  return out;
}

namespace {

void add_d_of_word(Poly& out, const Word& u, const Rational& coeff, const Rational& lambda) {
  const std::size_t n = u.breadth();
  if (n == 1) {
    out.add(Word(u[0].derived()), coeff);
    return;
  }
  if (n >= 63) throw Error("word too long for D expansion");
  std::vector<Rational> lambda_powers{Rational(1)};
  for (std::size_t t = 1; t < n; ++t) lambda_powers.push_back(lambda_powers.back() * lambda);
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<Prime> primes;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const auto t = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (t > 1 && lambda == 0) continue;
    primes.assign(u.begin(), u.end());
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::uint64_t{1} << k)) primes[k] = primes[k].derived();
    out.add(Word(primes), coeff * lambda_powers[t - 1]);
  }
}

} // namespace

Poly apply_D(const Poly& p, const Rational& lambda) {
  Poly out;
  for (const auto& [u, c] : p) add_d_of_word(out, u, c, lambda);
  return out;
}

Poly apply_D(const Poly& p, const Rational& lambda, unsigned times) {
  Poly out = p;
  for (unsigned k = 0; k < times; ++k) out = apply_D(out, lambda);
  return out;
}

Poly apply_D(const Word& u, const Rational& lambda, unsigned times) {
  if (u.breadth() == 1) return Poly(Word(u[0].derived(times)));
  return apply_D(Poly(u), lambda, times);
}

std::pair<Word, Rational> d_power_leading(const Word& u, unsigned i, const Rational& lambda) {
  if (u.empty()) throw Error("d_power_leading of the empty word");
  if (i == 0) return {u, Rational(1)};
  std::vector<Prime> primes(u.begin(), u.end());
  if (lambda == 0) {
    primes[0] = primes[0].derived(i);
    return {Word(std::move(primes)), Rational(1)};
  }
  for (auto& p : primes) p = p.derived(i);
  return {Word(std::move(primes)), pow(lambda, static_cast<unsigned>((u.breadth() - 1) * i))};
}

unsigned d_power_leading_degree(const Word& u, unsigned i, const Rational& lambda) {
  const auto n = static_cast<unsigned>(u.breadth());
  return u.degree() + (lambda == 0 ? i : i * n);
}

namespace {

Poly expand(const NAWord& t, const Poly* fill) {
  switch (t.kind()) {
  case NAWord::Kind::hole:
    if (!fill) throw Error("bracketing template expanded without a fill");
    return *fill;
  case NAWord::Kind::bracket:
    return commutator(expand(t.left(), fill), expand(t.right(), fill));
  case NAWord::Kind::leaf:
    break;
  }
  if (t.is_generator_leaf()) return Poly(Word(Prime::generator(t.generator_id(), t.d_power())));
  // Multilinear operator over expanded arguments; D-powers stay on the prime.
  std::vector<Poly> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(expand(a, fill));
  Poly out;
  std::vector<Word> chosen(args.size());
  auto recurse = [&](auto&& self, std::size_t k, const Rational& coeff) -> void {
    if (k == args.size()) {
      out.add(Word(Prime::apply(t.op(), chosen, t.d_power())), coeff);
      return;
    }
    for (const auto& [w, c] : args[k]) {
      chosen[k] = w;
      self(self, k + 1, coeff * c);
    }
  };
  recurse(recurse, 0, Rational(1));
  return out;
}

} // namespace

Poly lie_expand(const NAWord& t) { return expand(t, nullptr); }

Poly lie_expand(const NAWord& t, const Poly& fill) { return expand(t, &fill); }

Poly substitute(const Context& pi, const Poly& p, const Rational& lambda) {
  Poly out;
  if (pi.hole_d_power() == 0) {
    for (const auto& [u, c] : p) out.add(pi.fill(u.primes()), c);
    return out;
  }
  const Context bare = pi.without_hole_power();
  for (const auto& [u, c] : p) {
    Poly lifted = apply_D(u, lambda, pi.hole_d_power());
    for (const auto& [v, d] : lifted) out.add(bare.fill(v.primes()), c * d);
  }
  return out;
}

} // namespace difflie
