#include "difflie/naword.hpp"

#include "difflie/error.hpp"

namespace difflie {

NAWord NAWord::generator(GeneratorId id, unsigned d_power) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::leaf;
  n->d_power = d_power;
  n->generator_leaf = true;
  n->id = id;
  return NAWord(std::move(n));
}

NAWord NAWord::apply(OperatorId op, std::vector<NAWord> args, unsigned d_power) {
  if (args.empty()) throw Error("operator application needs at least one argument");
  auto n = std::make_shared<Node>();
  n->kind = Kind::leaf;
  n->d_power = d_power;
  n->id = op;
  for (const auto& a : args) n->has_hole = n->has_hole || a.contains_hole();
  n->children = std::move(args);
  return NAWord(std::move(n));
}

NAWord NAWord::bracket(NAWord left, NAWord right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::bracket;
  n->has_hole = left.contains_hole() || right.contains_hole();
  n->children = {std::move(left), std::move(right)};
  return NAWord(std::move(n));
}

NAWord NAWord::hole() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::hole;
  n->has_hole = true;
  return NAWord(std::move(n));
}

NAWord NAWord::from_prime(const Prime& p) {
  if (p.is_generator()) return generator(p.generator_id(), p.d_power());
  std::vector<NAWord> args;
  for (const auto& a : p.args()) {
    if (a.breadth() != 1) throw Error("argument is not a single prime; bracket it first");
    args.push_back(from_prime(a[0]));
  }
  return apply(p.op(), std::move(args), p.d_power());
}

Prime NAWord::underlying_prime() const {
  if (!is_leaf()) throw Error("underlying_prime of a non-leaf");
  if (is_generator_leaf()) return Prime::generator(generator_id(), d_power());
  std::vector<Word> args;
  args.reserve(this->args().size());
  for (const auto& a : this->args()) args.push_back(a.underlying_word());
  return Prime::apply(op(), std::move(args), d_power());
}

Word NAWord::underlying_word() const {
  switch (kind()) {
  case Kind::hole:
    throw Error("underlying_word of a bracketing with a hole");
  case Kind::leaf:
    return Word(underlying_prime());
  case Kind::bracket:
    return left().underlying_word() * right().underlying_word();
  }
  return {};
}

bool operator==(const NAWord& a, const NAWord& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.d_power == y.d_power && x.generator_leaf == y.generator_leaf &&
         x.id == y.id && x.children == y.children;
}

} // namespace difflie
