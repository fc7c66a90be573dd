#pragma once

#include "difflie/alphabet.hpp"
#include "difflie/naword.hpp"
#include "difflie/poly.hpp"
#include "difflie/word.hpp"

#include <cstdint>
#include <vector>

// Naive reference computations for tests. Nothing here calls the reducer or
// the bracketing code.
namespace difflie::oracle {

// Length-n words over q letters that are strictly greater than every proper
// rotation, counted by filtering all q^n words.
std::uint64_t lyndon_count(unsigned q, unsigned n);

// Tries every full bracketing of u (arguments of operator letters likewise)
// and returns the single one that is a nonassociative LS word. Throws Error
// when none or several qualify.
NAWord all_bracketings(const Word& u);

enum class Relations {
  none,     // the free algebra itself
  section,  // D(P(a)) = a
  drbl,     // Rota-Baxter relation and D(P(a)) = a
};

struct QuotientOptions {
  bool with_d = true;
  // Ideal elements are generated up to max_degree + slack before being cut
  // down to degree <= max_degree.
  unsigned slack = 0;
  // Stop with Error once either echelon basis grows past this.
  std::size_t size_limit = 200000;
};

// Dimension of each filtration layer (degrees 1..max_degree) of the free
// lambda-differential Lie algebra on the alphabet, modulo the ideal closed
// under brackets, D and every unary operator that the relations generate.
// Computed by exact elimination over associative expansions.
std::vector<std::size_t> quotient_dim(const AlgebraConfig& config, Relations relations, unsigned max_degree,
                                      const QuotientOptions& options = {});

} // namespace difflie::oracle
