#pragma once

#include "difflie/alphabet.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace difflie {

class Word;

// Operator application omega(u_1, ..., u_m); shared by every Prime that holds it.
struct OperatorApplication {
  OperatorId op;
  std::vector<Word> args;
};

// A prime word D^i(h) where h is a generator or an operator application.
//
// D^0(x) is x itself. Primes are immutable; copies share the operator payload.
class Prime {
public:
  static Prime generator(GeneratorId id, unsigned d_power = 0);
  // Every argument must be a nonempty Word.
  static Prime apply(OperatorId op, std::vector<Word> args, unsigned d_power = 0);

  unsigned d_power() const noexcept { return d_power_; }
  bool is_generator() const noexcept { return !application_; }
  GeneratorId generator_id() const noexcept { return generator_; }
  // Only valid when !is_generator().
  const OperatorApplication& application() const noexcept { return *application_; }
  OperatorId op() const noexcept { return application_->op; }
  const std::vector<Word>& args() const noexcept { return application_->args; }

  // Number of generator, operator and D symbols.
  unsigned degree() const noexcept { return degree_; }
  std::size_t hash() const noexcept { return hash_; }

  // D^k applied: same head, d_power + k.
  Prime derived(unsigned k = 1) const;
  Prime with_d_power(unsigned d_power) const;
  // True when both primes have the same head (ignoring d_power).
  bool same_head(const Prime& other) const;

  friend bool operator==(const Prime& a, const Prime& b);

private:
  Prime() = default;
  void finish();

  unsigned d_power_ = 0;
  GeneratorId generator_ = 0;
  std::shared_ptr<const OperatorApplication> application_;
  unsigned degree_ = 0;
  std::size_t hash_ = 0;
};

// A (possibly empty) sequence of primes. Well-formed words are nonempty; the
// empty sequence only appears inside contexts and as the lex-order top element.
class Word {
public:
  Word() = default;
  Word(Prime prime) : primes_{std::move(prime)} {} // NOLINT(implicit)
  explicit Word(std::vector<Prime> primes) : primes_(std::move(primes)) {}
  Word(std::initializer_list<Prime> primes) : primes_(primes) {}

  const std::vector<Prime>& primes() const noexcept { return primes_; }
  std::size_t breadth() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }
  const Prime& operator[](std::size_t i) const { return primes_[i]; }
  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }

  unsigned degree() const noexcept;
  std::size_t hash() const noexcept;

  Word slice(std::size_t start, std::size_t length) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;

private:
  std::vector<Prime> primes_;
};

// The measures (degree, breadth, primes) that drive the Deg-lex order.
struct WeightTuple {
  unsigned degree;
  std::size_t breadth;
  std::vector<Prime> primes;
};
WeightTuple weight_tuple(const Word& u);

// Deg-lex order on primes (the order written as "succ" on prime letters):
// degree first, then the symbol (operators above D, earlier declared above
// later), then arguments left to right. D^i(h) with i >= 1 is the pair
// (D, D^{i-1}(h)).
std::strong_ordering deglex_cmp(const Prime& a, const Prime& b);

// Deg-lex order on words: (degree, breadth, u_1, ..., u_m) lexicographically.
// Returns equal iff the words are identical.
std::strong_ordering deglex_cmp(const Word& u, const Word& v);

// Lex order on prime sequences: first differing letter decides, and a proper
// prefix is greater than its extensions (so the empty word is the maximum).
std::strong_ordering lex_cmp(std::span<const Prime> u, std::span<const Prime> v);
inline std::strong_ordering lex_cmp(const Word& u, const Word& v) {
  return lex_cmp(std::span<const Prime>(u.primes()), std::span<const Prime>(v.primes()));
}

// Sorts descending, so the leading monomial comes first.
struct DeglexDescending {
  bool operator()(const Word& a, const Word& b) const { return deglex_cmp(a, b) > 0; }
};
struct DeglexAscending {
  bool operator()(const Word& a, const Word& b) const { return deglex_cmp(a, b) < 0; }
};

struct PrimeHash {
  std::size_t operator()(const Prime& p) const noexcept { return p.hash(); }
};
struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

// Throws Error when a generator or operator id falls outside the alphabet or an
// operator is applied with the wrong number of arguments.
void validate(const Word& u, const Alphabet& alphabet);

} // namespace difflie

namespace difflie {

// Every well-formed word of degree <= max_degree over the alphabet, sorted
// ascending by Deg-lex. Exponential; meant for small bounds.
std::vector<Word> enumerate_words(const Alphabet& alphabet, unsigned max_degree);

} // namespace difflie
