#pragma once

#include "difflie/word.hpp"

#include <vector>

namespace difflie {

// A word with exactly one hole.
//
// The hole sits in some prime sequence: the top-level word or an argument of an
// operator at any depth. `levels()[0]` holds the top-level primes to the left
// and right of the path; each enclosure describes the prime that the path
// descends into. The hole may carry D-powers (the context D^k(*)), in which
// case it fills a whole prime slot.
class Context {
public:
  struct Level {
    std::vector<Prime> left;
    std::vector<Prime> right;
    friend bool operator==(const Level&, const Level&) = default;
  };
  struct Enclosure {
    unsigned d_power = 0;
    OperatorId op = 0;
    std::vector<Word> before;
    std::vector<Word> after;
    friend bool operator==(const Enclosure&, const Enclosure&) = default;
  };

  // The bare hole, optionally wrapped as D^k(*).
  explicit Context(unsigned hole_d_power = 0);
  Context(std::vector<Level> levels, std::vector<Enclosure> enclosures, unsigned hole_d_power);

  const std::vector<Level>& levels() const noexcept { return levels_; }
  const std::vector<Enclosure>& enclosures() const noexcept { return enclosures_; }
  unsigned hole_d_power() const noexcept { return hole_d_power_; }
  // Depth 0 means the hole is in the top-level sequence.
  std::size_t depth() const noexcept { return enclosures_.size(); }

  // The same context with the hole's D wrappers removed.
  Context without_hole_power() const;

  // Total degree of the frame (symbols outside the hole, including hole D's).
  unsigned degree() const;

  // Rebuilds the word with the hole replaced by the given prime sequence
  // (hole D-power must be zero, or the sequence a single prime).
  Word fill(std::vector<Prime> content) const;

  friend bool operator==(const Context&, const Context&) = default;

private:
  std::vector<Level> levels_;
  std::vector<Enclosure> enclosures_;
  unsigned hole_d_power_ = 0;
};

// pi|_u. Throws Error when the hole carries D-powers and u has breadth > 1 (the
// result is then a polynomial; see substitute(Context, Poly, ...)).
Word substitute(const Context& pi, const Word& u);

// Every context pi with pi|_p = w. p may match a contiguous run of primes in any
// sequence; a single-prime p = D^m(h) also matches inside D^{m+k}(h) with a
// D^k-wrapped hole. Results are in pre-order traversal order.
std::vector<Context> occurrences(const Word& w, const Word& p);

// Pre-order walk over every prime sequence of a word (the top level and every
// operator argument, recursively). The visitor is called as
// visit(walker, sequence, position) and stops the walk by returning true;
// walker.context(sequence, start, length) is the context around that run.
class SequenceWalker {
public:
  template <class Visit>
  bool walk(const std::vector<Prime>& seq, Visit&& visit) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (visit(*this, seq, i)) return true;
      if (seq[i].is_generator()) continue;
      const auto& args = seq[i].args();
      for (std::size_t a = 0; a < args.size(); ++a) {
        push(seq, i, a);
        const bool stop = walk(args[a].primes(), visit);
        pop();
        if (stop) return true;
      }
    }
    return false;
  }

  Context context(const std::vector<Prime>& seq, std::size_t start, std::size_t length) const;
  bool top_level() const noexcept { return enclosures_.empty(); }

private:
  void push(const std::vector<Prime>& seq, std::size_t i, std::size_t arg);
  void pop();

  std::vector<Context::Level> levels_;
  std::vector<Context::Enclosure> enclosures_;
};

} // namespace difflie
