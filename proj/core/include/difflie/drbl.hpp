#pragma once

#include "difflie/gsb.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace difflie {

// The free lambda-differential Lie Rota-Baxter algebra on a set of generators,
// presented by
//   g(w)   = D(P([w])) - [w]
//   f(u,v) = [P([u]) P([v])] - P([[u] P([v])]) - P([P([u]) [v]]) - lambda P([[u] [v]])
// for LS words u > v and w. As a RuleSource it recognises lifted leading words
// directly and instantiates the matching rules on demand.
class DrblSystem : public RuleSource {
public:
  // The alphabet must have exactly one operator, unary. Words of degree above
  // max_degree are rejected.
  DrblSystem(Alphabet alphabet, Rational lambda, unsigned max_degree, bool with_f = true);
  // Generators x1 > ... > xN and the operator P.
  static DrblSystem numbered(std::size_t generators, Rational lambda, unsigned max_degree, bool with_f = true);

  const Alphabet& alphabet() const noexcept { return config_.alphabet; }
  const AlgebraConfig& config() const noexcept { return config_; }
  const Rational& lambda() const override { return config_.lambda; }
  unsigned max_degree() const noexcept { return max_degree_; }
  bool with_f() const noexcept { return with_f_; }
  OperatorId p() const noexcept { return 0; }

  std::vector<Match> matches(const Word& w) const override;
  std::optional<Match> first_match(const Word& w) const override;

  Poly g(const Word& w) const;
  Poly f(const Word& u, const Word& v) const;

  // D^lift(g(w)) and D^lift(f(u,v)), cached.
  std::shared_ptr<const LiftedRule> g_lift(const Word& w, unsigned lift) const;
  std::shared_ptr<const LiftedRule> f_lift(const Word& u, const Word& v, unsigned lift) const;

  // P applied to a polynomial.
  Poly apply_p(const Poly& a) const;

private:
  struct Key {
    bool is_f;
    Word u;
    Word v;
    unsigned lift;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  std::shared_ptr<const LiftedRule> lifted(const Key& key) const;
  void check_degree(const Word& w) const;

  AlgebraConfig config_;
  unsigned max_degree_;
  bool with_f_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Key, std::shared_ptr<const LiftedRule>, KeyHash> cache_;
};

// Every g(w) with deg D(P(w)) <= max_degree and every f(u,v) with
// deg P(u)P(v) <= max_degree, u > v, over the LS words of the alphabet.
std::vector<Rule> instantiate_rules(const DrblSystem& sys, unsigned max_degree);
// The g family alone.
std::vector<Rule> s1_rules(const DrblSystem& sys, unsigned max_degree);

// True when w contains a lifted leading word of the system, found by pattern:
// D^k(P(u)) for k >= 1; adjacent D^j(P(u)) D^j(P(v)) (lambda != 0) or
// D^j(P(u)) P(v) (lambda = 0) with u > v; and, for lambda != 0, a run
// D^i(u_1)...D^i(u_n) with (n-1)i >= 2, which then leads D^i(g(u)) in place of
// D^{i+1}(P(u)). u, v range over LS words.
bool is_drbl_reducible(const Word& w, const DrblSystem& sys);

// Normal form in the basis produced by enumerate_basis. Every D^k(P(u)), k >= 1,
// is rewritten through D^{k-1}(g(u)) and every adjacent P(u) P(v), u > v,
// through f(u,v), always treating the term that is greatest by number of P and
// then deglex. Only the trace field of options is used. Throws Error when the
// degree exceeds the system bound or p is not a Lie polynomial.
LieForm drbl_nf(const Poly& p, const DrblSystem& sys, const ReductionOptions& options = {});
LieForm drbl_nf(const NAWord& t, const DrblSystem& sys, const ReductionOptions& options = {});

// The basis built directly: LS words over the letters D^i(x) and P(b), b an
// earlier basis word, with no adjacent P(u) P(v), u > v, at any depth. Sorted by
// degree, then ascending deglex; standard bracketing.
std::vector<NAWord> enumerate_basis(const Alphabet& alphabet, unsigned max_degree);

struct AxiomFailure {
  NAWord a;
  NAWord b;
  std::string identity;
  LieForm residue;
};

struct AxiomReport {
  std::size_t samples = 0;
  std::vector<AxiomFailure> failures;
  bool pass() const noexcept { return failures.empty(); }
};

// Samples pairs of basis elements of degree <= max_degree and reduces the
// Rota-Baxter relation, the Leibniz rule and the section relation D(P(a)) = a.
AxiomReport verify_axioms(const DrblSystem& sys, std::size_t samples, unsigned max_degree, std::uint64_t seed);

} // namespace difflie
