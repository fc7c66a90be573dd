#pragma once

#include "difflie/context.hpp"
#include "difflie/naword.hpp"
#include "difflie/poly.hpp"
#include "difflie/word.hpp"

#include <span>
#include <vector>

namespace difflie {

// True iff u = ab >_lex ba for every split into nonempty a, b. Only the
// top-level letters are inspected; letters compare by the prime Deg-lex order.
bool is_alsw(std::span<const Prime> letters);
inline bool is_alsw(const Word& u) { return is_alsw(std::span<const Prime>(u.primes())); }

// is_alsw, and every operator argument at every depth is one as well: the
// differential Lyndon-Shirshov Omega-words.
bool is_differential_alsw(const Word& u);

// Shirshov standard bracketing: u = vw with w the longest proper LS suffix,
// bracketed as ([v] [w]); operator arguments are bracketed recursively.
// Throws Error unless is_differential_alsw(u).
NAWord shirshov_bracket(const Word& u);

// Unique factorization c = c_1 c_2 ... c_m into LS words with
// c_1 <=_lex c_2 <=_lex ... <=_lex c_m.
std::vector<Word> lyndon_factorization(const Word& c);

// All LS words over the given letters with total degree <= max_degree, sorted
// ascending by Deg-lex.
std::vector<Word> enumerate_lyndon(std::span<const Prime> letters, unsigned max_degree);

// Stratum `depth` of the differential LS Omega-words: letters are D^i(x) and
// D^i(omega(u_1..u_m)) with arguments from stratum depth-1 (so operators nest
// at most `depth` deep). Sorted ascending by Deg-lex.
std::vector<Word> enumerate_alsw_stratum(const Alphabet& alphabet, unsigned max_degree, unsigned depth);

// All differential LS Omega-words of degree <= max_degree: the union of the
// strata, which stabilises once depth exceeds max_degree / 2.
std::vector<Word> enumerate_alsw(const Alphabet& alphabet, unsigned max_degree);

// Bracketing of pi|_v that isolates v: inside the standard bracketing of
// pi|_v the smallest subtree [v c] starting at v is rebracketed as
// [...[[v][c_1]][c_2]...[c_m]] with c = c_1...c_m the LS factorization.
struct SpecialBracket {
  NAWord templ;        // the bracketing with a hole where [v] sits
  NAWord bracketing;   // the hole replaced by shirshov_bracket(v)
  Poly expansion;      // lie_expand(bracketing); leading term (pi|_v, 1)
};

// Requires pi's hole to carry no D-powers and v, pi|_v differential LS words;
// throws Error otherwise.
SpecialBracket special_bracket(const Context& pi, const Word& v);

// Just the template; skips the expansion and the leading-term certificate.
NAWord special_bracket_template(const Context& pi, const Word& v);

} // namespace difflie
