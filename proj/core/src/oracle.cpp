#include "difflie/oracle.hpp"

#include "difflie/error.hpp"

#include <deque>
#include <functional>
#include <unordered_map>

namespace difflie::oracle {

std::uint64_t lyndon_count(unsigned q, unsigned n) {
  if (q == 0 || n == 0) return 0;
  std::vector<unsigned> w(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool greatest = true;
    for (unsigned r = 1; r < n && greatest; ++r) {
      // Compare w with its rotation by r.
      for (unsigned k = 0; k < n; ++k) {
        unsigned a = w[k];
        unsigned b = w[(k + r) % n];
        if (a != b) {
          greatest = a > b;
          break;
        }
        if (k + 1 == n) greatest = false;
      }
    }
    count += greatest;
    unsigned i = 0;
    while (i < n && ++w[i] == q) w[i++] = 0;
    if (i == n) return count;
  }
}

namespace {

using Letters = std::vector<Prime>;

// Lexicographic, letters by deglex, a proper prefix greater.
int lex(const Letters& u, const Letters& v) {
  for (std::size_t i = 0; i < u.size() && i < v.size(); ++i) {
    auto c = deglex_cmp(u[i], v[i]);
    if (c > 0) return 1;
    if (c < 0) return -1;
  }
  if (u.size() == v.size()) return 0;
  return u.size() < v.size() ? 1 : -1;
}

bool greater_than_rotations(const Letters& u) {
  for (std::size_t r = 1; r < u.size(); ++r) {
    Letters rot(u.begin() + static_cast<std::ptrdiff_t>(r), u.end());
    rot.insert(rot.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(r));
    if (lex(u, rot) <= 0) return false;
  }
  return true;
}

struct Tree {
  std::size_t begin;
  std::size_t end;
  std::shared_ptr<Tree> left;
  std::shared_ptr<Tree> right;
};

std::vector<std::shared_ptr<Tree>> bracketings(std::size_t begin, std::size_t end) {
  if (end - begin == 1) return {std::make_shared<Tree>(Tree{begin, end, nullptr, nullptr})};
  std::vector<std::shared_ptr<Tree>> out;
  for (std::size_t mid = begin + 1; mid < end; ++mid)
    for (const auto& l : bracketings(begin, mid))
      for (const auto& r : bracketings(mid, end)) out.push_back(std::make_shared<Tree>(Tree{begin, end, l, r}));
  return out;
}

Letters span_of(const Letters& u, const Tree& t) {
  return {u.begin() + static_cast<std::ptrdiff_t>(t.begin), u.begin() + static_cast<std::ptrdiff_t>(t.end)};
}

bool nonassociative_ls(const Letters& u, const Tree& t) {
  if (!greater_than_rotations(span_of(u, t))) return false;
  if (!t.left) return true;
  if (!nonassociative_ls(u, *t.left) || !nonassociative_ls(u, *t.right)) return false;
  if (t.left->left && lex(span_of(u, *t.left->right), span_of(u, *t.right)) > 0) return false;
  return true;
}

NAWord letter(const Prime& p);

NAWord build(const Letters& u, const Tree& t) {
  if (!t.left) return letter(u[t.begin]);
  return NAWord::bracket(build(u, *t.left), build(u, *t.right));
}

NAWord letter(const Prime& p) {
  if (p.is_generator()) return NAWord::generator(p.generator_id(), p.d_power());
  std::vector<NAWord> args;
  for (const auto& a : p.args()) args.push_back(all_bracketings(a));
  return NAWord::apply(p.op(), std::move(args), p.d_power());
}

} // namespace

NAWord all_bracketings(const Word& u) {
  if (u.empty()) throw Error("all_bracketings: empty word");
  const Letters& letters = u.primes();
  std::optional<NAWord> found;
  for (const auto& t : bracketings(0, letters.size())) {
    if (!nonassociative_ls(letters, *t)) continue;
    if (found) throw Error("all_bracketings: several bracketings qualify");
    found = build(letters, *t);
  }
  if (!found) throw Error("all_bracketings: no bracketing qualifies");
  return *found;
}

namespace {

// Rows in echelon form keyed by leading word.
class Echelon {
public:
  explicit Echelon(std::size_t limit) : limit_(limit) {}

  // Returns the reduced vector when it is new, otherwise nullopt.
  std::optional<Poly> insert(Poly v) {
    while (!v.is_zero()) {
      auto it = rows_.find(v.leading_word());
      if (it == rows_.end()) break;
      v.add_scaled(it->second, -v.leading_coefficient() / it->second.leading_coefficient());
    }
    if (v.is_zero()) return std::nullopt;
    if (rows_.size() >= limit_) throw Error("oracle: echelon basis exceeds the size limit");
    rows_.emplace(v.leading_word(), v);
    return v;
  }

  std::size_t count_up_to(unsigned degree) const {
    std::size_t n = 0;
    for (const auto& [w, row] : rows_) n += w.degree() <= degree;
    return n;
  }

private:
  std::size_t limit_;
  std::unordered_map<Word, Poly, WordHash> rows_;
};

struct Closure {
  const AlgebraConfig& config;
  const QuotientOptions& options;
  unsigned bound;

  std::vector<OperatorId> unary() const {
    std::vector<OperatorId> out;
    for (OperatorId op = 0; op < config.alphabet.operator_count(); ++op) {
      if (config.alphabet.arity(op) != 1) throw Error("oracle: only unary operators are supported");
      out.push_back(op);
    }
    return out;
  }

  Poly apply(OperatorId op, const Poly& a) const {
    return apply_operator(config.alphabet, op, std::span<const Poly>(&a, 1));
  }

  // Span of the free algebra up to the bound.
  std::vector<Poly> algebra() const {
    Echelon echelon(options.size_limit);
    std::vector<Poly> basis;
    std::deque<Poly> queue;
    auto offer = [&](Poly p) {
      if (p.is_zero() || p.degree() > bound) return;
      if (auto v = echelon.insert(std::move(p))) queue.push_back(std::move(*v));
    };
    for (GeneratorId x = 0; x < config.alphabet.generator_count(); ++x) offer(Poly(Word({Prime::generator(x)})));
    const auto ops = unary();
    while (!queue.empty()) {
      Poly a = std::move(queue.front());
      queue.pop_front();
      basis.push_back(a);
      if (options.with_d) offer(apply_D(a, config.lambda));
      for (OperatorId op : ops) offer(apply(op, a));
      for (const auto& b : basis)
        if (a.degree() + b.degree() <= bound) offer(commutator(a, b));
    }
    return basis;
  }

  // Echelon form of the ideal up to the bound.
  Echelon ideal(const std::vector<Poly>& algebra, Relations relations) const {
    Echelon echelon(options.size_limit);
    std::deque<Poly> queue;
    auto offer = [&](Poly p) {
      if (p.is_zero() || p.degree() > bound) return;
      if (auto v = echelon.insert(std::move(p))) queue.push_back(std::move(*v));
    };
    if (relations != Relations::none) {
      const auto ops = unary();
      if (ops.size() != 1) throw Error("oracle: these relations need exactly one operator");
      const OperatorId p = ops.front();
      for (const auto& a : algebra) {
        offer(apply_D(apply(p, a), config.lambda) - a);
        if (relations != Relations::drbl) continue;
        for (const auto& b : algebra) {
          if (a.degree() + b.degree() + 2 > bound) continue;
          Poly rb = commutator(apply(p, a), apply(p, b)) - apply(p, commutator(a, apply(p, b))) -
                    apply(p, commutator(apply(p, a), b));
          rb.add_scaled(apply(p, commutator(a, b)), -config.lambda);
          offer(std::move(rb));
        }
      }
    }
    const auto ops = unary();
    while (!queue.empty()) {
      Poly r = std::move(queue.front());
      queue.pop_front();
      if (options.with_d) offer(apply_D(r, config.lambda));
      for (OperatorId op : ops) offer(apply(op, r));
      for (const auto& b : algebra)
        if (r.degree() + b.degree() <= bound) offer(commutator(r, b));
    }
    return echelon;
  }
};

} // namespace

std::vector<std::size_t> quotient_dim(const AlgebraConfig& config, Relations relations, unsigned max_degree,
                                      const QuotientOptions& options) {
  Closure closure{config, options, max_degree + options.slack};
  const auto algebra = closure.algebra();
  Echelon span(options.size_limit);
  for (const auto& a : algebra) span.insert(a);
  const Echelon ideal = closure.ideal(algebra, relations);
  std::vector<std::size_t> out;
  std::size_t previous = 0;
  for (unsigned d = 1; d <= max_degree; ++d) {
    const std::size_t total = span.count_up_to(d) - ideal.count_up_to(d);
    out.push_back(total - previous);
    previous = total;
  }
  return out;
}

} // namespace difflie::oracle
