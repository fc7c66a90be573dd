#include "difflie/word.hpp"

#include "difflie/error.hpp"

#include <algorithm>

namespace difflie {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Prime Prime::generator(GeneratorId id, unsigned d_power) {
  Prime p;
  p.d_power_ = d_power;
  p.generator_ = id;
  p.finish();
  return p;
}

Prime Prime::apply(OperatorId op, std::vector<Word> args, unsigned d_power) {
  if (args.empty()) throw Error("operator application needs at least one argument");
  for (const auto& a : args)
    if (a.empty()) throw Error("operator argument must be a nonempty word");
  Prime p;
  p.d_power_ = d_power;
  p.application_ = std::make_shared<const OperatorApplication>(OperatorApplication{op, std::move(args)});
  p.finish();
  return p;
}

void Prime::finish() {
  std::size_t h = mix(0, d_power_);
  if (!application_) {
    degree_ = d_power_ + 1;
    h = mix(h, 0x51);
    h = mix(h, generator_);
  } else {
    degree_ = d_power_ + 1;
    h = mix(h, 0xA7);
    h = mix(h, application_->op);
    for (const auto& a : application_->args) {
      degree_ += a.degree();
      h = mix(h, a.hash());
    }
  }
  hash_ = h;
}

Prime Prime::derived(unsigned k) const { return with_d_power(d_power_ + k); }

Prime Prime::with_d_power(unsigned d_power) const {
  Prime p = *this;
  p.d_power_ = d_power;
  p.finish();
  return p;
}

bool Prime::same_head(const Prime& other) const {
  if (is_generator() != other.is_generator()) return false;
  if (is_generator()) return generator_ == other.generator_;
  if (application_ == other.application_) return true;
  return application_->op == other.application_->op && application_->args == other.application_->args;
}

bool operator==(const Prime& a, const Prime& b) {
  return a.hash_ == b.hash_ && a.d_power_ == b.d_power_ && a.same_head(b);
}

unsigned Word::degree() const noexcept {
  unsigned d = 0;
  for (const auto& p : primes_) d += p.degree();
  return d;
}

std::size_t Word::hash() const noexcept {
  std::size_t h = primes_.size();
  for (const auto& p : primes_) h = mix(h, p.hash());
  return h;
}

Word Word::slice(std::size_t start, std::size_t length) const {
  return Word(std::vector<Prime>(primes_.begin() + static_cast<std::ptrdiff_t>(start),
                                 primes_.begin() + static_cast<std::ptrdiff_t>(start + length)));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Prime> primes;
  primes.reserve(a.breadth() + b.breadth());
  primes.insert(primes.end(), a.begin(), a.end());
  primes.insert(primes.end(), b.begin(), b.end());
  return Word(std::move(primes));
}

WeightTuple weight_tuple(const Word& u) { return {u.degree(), u.breadth(), u.primes()}; }

std::strong_ordering deglex_cmp(const Prime& a, const Prime& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Equal degree. Degree-1 primes are bare generators: earlier id is greater.
  if (a.degree() == 1) return b.generator_id() <=> a.generator_id();
  // Peel matching D layers; the prime left with D on top loses to an operator.
  unsigned common = std::min(a.d_power(), b.d_power());
  unsigned da = a.d_power() - common;
  unsigned db = b.d_power() - common;
  if (da > 0 && db == 0) return std::strong_ordering::less;
  if (db > 0 && da == 0) return std::strong_ordering::greater;
  if (da == 0 && db == 0) {
    // Both heads have equal degree after peeling.
    if (a.is_generator() && b.is_generator()) return b.generator_id() <=> a.generator_id();
    if (a.is_generator()) return std::strong_ordering::less; // unreachable: degree mismatch
    if (b.is_generator()) return std::strong_ordering::greater;
    if (auto c = b.op() <=> a.op(); c != 0) return c;
    const auto& xs = a.args();
    const auto& ys = b.args();
    for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i)
      if (auto c = deglex_cmp(xs[i], ys[i]); c != 0) return c;
    return xs.size() <=> ys.size();
  }
  return std::strong_ordering::equal; // unreachable
}

std::strong_ordering deglex_cmp(const Word& u, const Word& v) {
  if (auto c = u.degree() <=> v.degree(); c != 0) return c;
  if (auto c = u.breadth() <=> v.breadth(); c != 0) return c;
  for (std::size_t i = 0; i < u.breadth(); ++i)
    if (auto c = deglex_cmp(u[i], v[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::strong_ordering lex_cmp(std::span<const Prime> u, std::span<const Prime> v) {
  std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = deglex_cmp(u[i], v[i]); c != 0) return c;
  // Proper prefix is greater.
  return v.size() <=> u.size();
}

void validate(const Word& u, const Alphabet& alphabet) {
  if (u.empty()) throw Error("empty word");
  for (const auto& p : u) {
    if (p.is_generator()) {
      if (p.generator_id() >= alphabet.generator_count())
        throw Error("generator id " + std::to_string(p.generator_id()) + " not in alphabet");
      continue;
    }
    if (p.op() >= alphabet.operator_count())
      throw Error("operator id " + std::to_string(p.op()) + " not in alphabet");
    if (p.args().size() != alphabet.arity(p.op()))
      throw Error("operator '" + alphabet.operator_name(p.op()) + "' expects " +
                  std::to_string(alphabet.arity(p.op())) + " arguments");
    for (const auto& a : p.args()) validate(a, alphabet);
  }
}

} // namespace difflie

namespace difflie {

std::vector<Word> enumerate_words(const Alphabet& alphabet, unsigned max_degree) {
  // primes_by_degree[d], words_by_degree[d]
  std::vector<std::vector<Prime>> primes(max_degree + 1);
  std::vector<std::vector<Word>> words(max_degree + 1);
  for (unsigned d = 1; d <= max_degree; ++d) {
    for (GeneratorId g = 0; g < alphabet.generator_count(); ++g) primes[d].push_back(Prime::generator(g, d - 1));
    for (OperatorId op = 0; op < alphabet.operator_count(); ++op) {
      const unsigned m = alphabet.arity(op);
      for (unsigned i = 0; i + 1 + m <= d; ++i) {
        std::vector<Word> args(m);
        auto rec = [&](auto&& self, unsigned k, unsigned remaining) -> void {
          if (k == m) {
            if (remaining == 0) primes[d].push_back(Prime::apply(op, args, i));
            return;
          }
          for (unsigned dk = 1; dk + (m - k - 1) <= remaining; ++dk)
            for (const auto& w : words[dk]) {
              args[k] = w;
              self(self, k + 1, remaining - dk);
            }
        };
        rec(rec, 0, d - 1 - i);
      }
    }
    // Words of degree d: a first prime of degree e followed by a word of degree d - e.
    for (unsigned e = 1; e <= d; ++e)
      for (const auto& p : primes[e]) {
        if (e == d) {
          words[d].emplace_back(p);
          continue;
        }
        for (const auto& rest : words[d - e]) words[d].push_back(Word(p) * rest);
      }
  }
  std::vector<Word> out;
  for (auto& bucket : words)
    for (auto& w : bucket) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), DeglexAscending{});
  return out;
}

} // namespace difflie
