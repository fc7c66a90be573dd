#pragma once

#include "difflie/word.hpp"

#include <memory>
#include <vector>

namespace difflie {

// A bracketed (nonassociative) differential word.
//
// A node is a leaf D^i(h) whose operator arguments are themselves NAWords, a
// bracket (left right), or a hole. Holes only appear in the bracketing
// templates produced by special_bracket; lie_expand rejects them unless a fill
// polynomial is supplied.
class NAWord {
public:
  enum class Kind { leaf, bracket, hole };

  static NAWord generator(GeneratorId id, unsigned d_power = 0);
  static NAWord apply(OperatorId op, std::vector<NAWord> args, unsigned d_power = 0);
  static NAWord bracket(NAWord left, NAWord right);
  static NAWord hole();
  // The trivially bracketed leaf for a prime whose arguments are single primes
  // all the way down (the arguments must each have breadth 1).
  static NAWord from_prime(const Prime& p);

  Kind kind() const noexcept { return node_->kind; }
  bool is_leaf() const noexcept { return kind() == Kind::leaf; }
  bool is_bracket() const noexcept { return kind() == Kind::bracket; }
  bool is_hole() const noexcept { return kind() == Kind::hole; }

  // Leaf accessors.
  unsigned d_power() const noexcept { return node_->d_power; }
  bool is_generator_leaf() const noexcept { return node_->generator_leaf; }
  GeneratorId generator_id() const noexcept { return node_->id; }
  OperatorId op() const noexcept { return node_->id; }
  const std::vector<NAWord>& args() const noexcept { return node_->children; }

  // Bracket accessors.
  const NAWord& left() const noexcept { return node_->children[0]; }
  const NAWord& right() const noexcept { return node_->children[1]; }

  bool contains_hole() const noexcept { return node_->has_hole; }

  // Forget all bracket structure. Throws Error if the word contains a hole.
  Word underlying_word() const;
  // For a leaf: the prime with arguments flattened.
  Prime underlying_prime() const;

  friend bool operator==(const NAWord& a, const NAWord& b);

private:
  struct Node {
    Kind kind = Kind::leaf;
    unsigned d_power = 0;
    bool generator_leaf = false;
    std::uint32_t id = 0;
    std::vector<NAWord> children;
    bool has_hole = false;
  };
  explicit NAWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

} // namespace difflie
