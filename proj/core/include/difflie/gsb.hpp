#pragma once

#include "difflie/context.hpp"
#include "difflie/lyndon.hpp"
#include "difflie/naword.hpp"
#include "difflie/poly.hpp"
#include "difflie/word.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace difflie {

enum class Mode { assoc, lie };

// Where a rule came from: a family name plus the words it was instantiated at.
struct RuleOrigin {
  std::string schema;
  std::vector<Word> params;
};

// A relation s, stored monic.
struct Rule {
  Poly poly;
  RuleOrigin origin;
};

// Divides by the leading coefficient. Throws Error on the zero polynomial.
Rule make_rule(const Poly& p, RuleOrigin origin);

// D^lift(s) for a rule s, with its leading word and coefficient.
struct LiftedRule {
  std::shared_ptr<const Rule> rule;
  unsigned lift = 0;
  Poly poly;
  Word lead;
  Rational lc;
};

// A normal occurrence of a lifted leading word: w = context|_{lead}, hole
// without D-powers.
struct Match {
  std::shared_ptr<const LiftedRule> rule;
  Context context;
};

// pi|_s = pi'|_{D^i(s)} with pi' carrying no D over the hole.
struct NormalSWord {
  Context context;
  unsigned lift;
};
NormalSWord normalize_s_word(const Context& pi);

// Anything that can say which lifted rules occur in a word.
class RuleSource {
public:
  virtual ~RuleSource() = default;

  virtual const Rational& lambda() const = 0;
  // Every match in w, in a deterministic order.
  virtual std::vector<Match> matches(const Word& w) const = 0;
  virtual std::optional<Match> first_match(const Word& w) const;

  bool is_reducible(const Word& w) const { return first_match(w).has_value(); }
};

// A finite, eagerly lifted rule table: all D^i(s) whose leading word has degree
// <= max_degree. Immutable after construction.
class RuleSet : public RuleSource {
public:
  RuleSet(std::vector<Rule> rules, Rational lambda, unsigned max_degree);

  const Rational& lambda() const override { return lambda_; }
  unsigned max_degree() const noexcept { return max_degree_; }
  const std::vector<std::shared_ptr<const Rule>>& rules() const noexcept { return rules_; }
  const std::vector<std::shared_ptr<const LiftedRule>>& lifted() const noexcept { return lifted_; }

  std::vector<Match> matches(const Word& w) const override;
  std::optional<Match> first_match(const Word& w) const override;

  // Indices into lifted() whose leading word equals w.
  const std::vector<std::size_t>* with_lead(const Word& w) const;
  // Indices into lifted() whose leading word starts with the proper prefix p.
  const std::vector<std::size_t>* with_prefix(const Word& p) const;

private:
  template <class Visit>
  void scan(const Word& w, Visit&& visit) const;

  Rational lambda_;
  unsigned max_degree_;
  std::vector<std::shared_ptr<const Rule>> rules_;
  std::vector<std::shared_ptr<const LiftedRule>> lifted_;
  std::unordered_map<Prime, std::vector<std::size_t>, PrimeHash> by_first_prime_;
  std::unordered_map<Word, std::vector<std::size_t>, WordHash> by_lead_;
  std::unordered_map<Word, std::vector<std::size_t>, WordHash> by_prefix_;
};

// An overlap of two lifted leading words.
struct Ambiguity {
  enum class Kind { intersection, inclusion };
  Kind kind;
  std::shared_ptr<const LiftedRule> left;   // f, lifted
  std::shared_ptr<const LiftedRule> right;  // g, lifted
  Word w;
  Word a;           // intersection: w = lead(f) a
  Word b;           // intersection: w = b lead(g)
  Context context;  // inclusion: w = context|_{lead(g)}
};

// All intersection and inclusion ambiguities with deg(w) <= max_degree, over
// the lifts held by `rules` (which must cover max_degree).
std::vector<Ambiguity> find_ambiguities(const RuleSet& rules, unsigned max_degree);

// (f,g)_w in assoc mode, <f,g>_w (special bracketings) in lie mode.
Poly composition(const Ambiguity& amb, Mode mode, const Rational& lambda);

enum class Strategy {
  leading_first,     // always rewrite the leading monomial, first match
  random_reducible,  // any reducible monomial, any match (assoc); any match (lie)
};

// One rewrite: coefficient times context|_{D^i(s)} was subtracted (in lie mode
// the special bracketing of it).
struct ReductionStep {
  std::shared_ptr<const LiftedRule> rule;
  Context context;
  Rational coefficient;
  bool special = false;
};

struct ReductionOptions {
  Strategy strategy = Strategy::leading_first;
  std::uint64_t seed = 0;
  std::vector<ReductionStep>* trace = nullptr;
};

// A Lie polynomial written as sum c [w] over LS words w.
struct LieForm {
  std::map<Word, Rational, DeglexDescending> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  Poly expand() const;
  std::vector<std::pair<Rational, NAWord>> bracketed() const;
  friend bool operator==(const LieForm&, const LieForm&) = default;
};

// Normal form modulo the rules. Assoc mode returns a combination of words that
// contain no lifted leading word. Lie mode requires p to be a Lie polynomial
// and returns the expansion of reduce_lie.
Poly reduce(const Poly& p, const RuleSource& rules, Mode mode, const ReductionOptions& options = {});

// Lie-mode normal form as a combination of bracketed irreducible LS words.
// Throws Error if some irreducible leading word is not an LS word (p was not a
// Lie polynomial).
LieForm reduce_lie(const Poly& p, const RuleSource& rules, const ReductionOptions& options = {});

struct GsbFailure {
  Ambiguity ambiguity;
  Poly residue;
  std::string note;
};

struct GsbReport {
  Mode mode = Mode::lie;
  unsigned max_degree = 0;
  std::size_t intersections = 0;
  std::size_t inclusions = 0;
  std::vector<GsbFailure> failures;

  bool pass() const noexcept { return failures.empty(); }
  std::size_t ambiguities() const noexcept { return intersections + inclusions; }
};

// Reduces every composition of degree <= max_degree; passes when all reduce to
// zero. A nonzero residue means "not certified" at this bound.
GsbReport is_gsb(const RuleSet& rules, unsigned max_degree, Mode mode);

// Words of degree <= max_degree containing no lifted leading word.
std::vector<Word> enumerate_irr_assoc(const RuleSource& rules, const Alphabet& alphabet, unsigned max_degree);
// [w] for LS words w of degree <= max_degree containing no lifted leading word.
std::vector<NAWord> enumerate_irr_lie(const RuleSource& rules, const Alphabet& alphabet, unsigned max_degree);

} // namespace difflie
