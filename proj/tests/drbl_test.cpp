#include "reference.hpp"

#include "difflie/drbl.hpp"
#include "difflie/lyndon.hpp"
#include "difflie/oracle.hpp"
#include "difflie/text.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

using namespace difflie;
using namespace difflie::testing;

namespace {

const Alphabet X = x_only();
const Alphabet XY = xy();

std::vector<std::size_t> counts_by_degree(const std::vector<NAWord>& basis, unsigned max_degree) {
  std::vector<std::size_t> out(max_degree, 0);
  for (const auto& t : basis) ++out[t.underlying_word().degree() - 1];
  return out;
}

std::vector<std::string> formatted(const std::vector<NAWord>& ts, const Alphabet& a) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(format(t, a));
  return out;
}

Poly random_lie(const std::vector<NAWord>& basis, std::mt19937_64& rng, std::size_t terms) {
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coefficient(-3, 3);
  Poly out;
  for (std::size_t i = 0; i < terms; ++i) {
    NAWord a = basis[pick(rng)], b = basis[pick(rng)];
    out.add_scaled(lie_expand(NAWord::bracket(a, NAWord::apply(0, {b}))), coefficient(rng));
    out.add_scaled(lie_expand(NAWord::bracket(a, b)), coefficient(rng));
  }
  return out;
}

using MatchKey = std::tuple<std::string, unsigned, std::string>;

std::vector<MatchKey> keys(const std::vector<Match>& ms, const Alphabet& a) {
  std::vector<MatchKey> out;
  for (const auto& m : ms)
    out.emplace_back(format(m.rule->poly, a), m.rule->lift, format(substitute(m.context, m.rule->lead), a));
  std::sort(out.begin(), out.end());
  return out;
}

LieForm rota_baxter_residue(const DrblSystem& sys, const NAWord& a, const NAWord& b) {
  Poly pa = lie_expand(a), pb = lie_expand(b);
  Poly Pa = sys.apply_p(pa), Pb = sys.apply_p(pb);
  Poly rb = commutator(Pa, Pb) - sys.apply_p(commutator(pa, Pb)) - sys.apply_p(commutator(Pa, pb));
  rb.add_scaled(sys.apply_p(commutator(pa, pb)), -sys.lambda());
  return drbl_nf(rb, sys);
}

} // namespace

TEST(DrblSystem, Relations) {
  DrblSystem sys(XY, 3, 6);
  auto x = word("x", XY), y = word("y", XY);
  EXPECT_EQ(sys.g(x), poly("D(P(x)) - x", XY));
  EXPECT_EQ(sys.g(word("x y", XY)), poly("D(P([x y])) - [x y]", XY));
  EXPECT_EQ(sys.f(x, y), poly("[P(x) P(y)] - P([x P(y)]) - P([P(x) y]) - 3 P([x y])", XY));
  EXPECT_EQ(sys.f(x, y).leading(), std::make_pair(word("P(x) P(y)", XY), Rational(1)));
  EXPECT_THROW(sys.f(y, x), Error);
  EXPECT_THROW(sys.f(x, x), Error);
  EXPECT_THROW(DrblSystem(Alphabet({"x"}, {}), 1, 4), Error);
}

TEST(DrblSystem, LiftLeadingWords) {
  DrblSystem sys(X, 1, 9);
  auto u = word("P(x) x", X);
  EXPECT_EQ(sys.g_lift(u, 1)->lead, word("D^2(P(P(x) x))", X));
  auto second = sys.g_lift(u, 2);
  EXPECT_EQ(second->lead, word("D^2(P(x)) D^2(x)", X));
  EXPECT_EQ(second->lc, Rational(-1));
  EXPECT_EQ(second->poly, apply_D(sys.g(u), 1, 2));

  DrblSystem zero(X, 0, 9);
  EXPECT_EQ(zero.g_lift(u, 2)->lead, word("D^3(P(P(x) x))", X));
  EXPECT_THROW(sys.g_lift(word("x P(x)", X), 0), Error);
}

TEST(InstantiateRules, Examples) {
  auto one = DrblSystem(X, 1, 4);
  auto rules = instantiate_rules(one, 3);
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0].origin.schema, "g");
  EXPECT_EQ(rules[0].poly, poly("D(P(x)) - x", X));

  rules = instantiate_rules(one, 4);
  EXPECT_EQ(rules.size(), 3u);
  EXPECT_TRUE(std::all_of(rules.begin(), rules.end(), [](const Rule& r) { return r.origin.schema == "g"; }));

  auto two = DrblSystem(XY, 1, 4);
  rules = instantiate_rules(two, 4);
  auto f_rules = std::count_if(rules.begin(), rules.end(), [](const Rule& r) { return r.origin.schema == "f"; });
  EXPECT_EQ(f_rules, 1);
  EXPECT_EQ(s1_rules(two, 4).size(), rules.size() - 1);
}

TEST(DrblNf, RotaBaxterExample) {
  auto sys = DrblSystem::numbered(2, 1, 6);
  auto nf = drbl_nf(parse_naword("[P(x1) P(x2)]", sys.alphabet()), sys);
  EXPECT_EQ(format(nf, sys.alphabet()), "P([P(x1) x2]) - P([P(x2) x1]) + P([x1 x2])");
}

TEST(DrblNf, SectionRelationVanishes) {
  for (int lambda : {0, 1, 2}) {
    DrblSystem sys(XY, lambda, 6);
    for (const auto& t : enumerate_basis(XY, 3)) {
      auto element = lie_expand(NAWord::apply(0, {t}));
      auto relation = apply_D(element, lambda) - lie_expand(t);
      EXPECT_TRUE(drbl_nf(relation, sys).is_zero()) << format(t, XY);
    }
  }
}

TEST(DrblNf, BasisElementsAreFixed) {
  DrblSystem sys(XY, 2, 5);
  for (const auto& t : enumerate_basis(XY, 5)) {
    auto nf = drbl_nf(t, sys);
    ASSERT_EQ(nf.terms.size(), 1u);
    EXPECT_EQ(nf.terms.begin()->first, t.underlying_word());
    EXPECT_EQ(nf.terms.begin()->second, Rational(1));
  }
}

TEST(DrblNf, IdempotentAndLinear) {
  std::mt19937_64 rng(41);
  for (int lambda : {0, 1, -1}) {
    DrblSystem sys(XY, lambda, 7);
    auto basis = enumerate_basis(XY, 2);
    for (int i = 0; i < 30; ++i) {
      auto p = random_lie(basis, rng, 2), q = random_lie(basis, rng, 2);
      auto nf_p = drbl_nf(p, sys), nf_q = drbl_nf(q, sys);
      ASSERT_EQ(drbl_nf(nf_p.expand(), sys), nf_p);
      Rational alpha(2, 3), beta(-5);
      ASSERT_EQ(drbl_nf(alpha * p + beta * q, sys).expand(), alpha * nf_p.expand() + beta * nf_q.expand());
    }
  }
}

TEST(DrblNf, AgreesWithRuleReduction) {
  std::mt19937_64 rng(43);
  for (int lambda : {0, 1, 2}) {
    unsigned bound = lambda == 0 ? 6 : 5;
    DrblSystem sys(XY, lambda, bound);
    RuleSet rules(instantiate_rules(sys, bound), lambda, bound);
    auto basis = enumerate_basis(XY, bound / 2 - 1);
    for (int i = 0; i < 30; ++i) {
      auto p = random_lie(basis, rng, 2);
      ASSERT_EQ(drbl_nf(p, sys), reduce_lie(p, rules));
    }
  }
}

TEST(DrblNf, RejectsDegreeAboveBound) {
  DrblSystem sys(X, 1, 3);
  EXPECT_THROW(drbl_nf(parse_poly("P(P(D(x)))", X), sys), Error);
}

TEST(EnumerateBasis, SmallDegrees) {
  auto basis = enumerate_basis(X, 3);
  EXPECT_EQ(counts_by_degree(basis, 3), (std::vector<std::size_t>{1, 2, 5}));
  std::vector<std::string> expected{"x", "D(x)", "P(x)", "D^2(x)", "P(D(x))", "P(P(x))", "[D(x) x]", "[P(x) x]"};
  auto got = formatted(basis, X);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(EnumerateBasis, MatchesIrreducibleWords) {
  for (const Alphabet* alphabet : {&X, &XY})
    for (int lambda : {0, 1}) {
      DrblSystem sys(*alphabet, lambda, 5);
      RuleSet rules(instantiate_rules(sys, 5), lambda, 5);
      EXPECT_EQ(enumerate_basis(*alphabet, 5), enumerate_irr_lie(rules, *alphabet, 5));
      EXPECT_EQ(enumerate_basis(*alphabet, 5), enumerate_irr_lie(sys, *alphabet, 5));
    }
}

TEST(EnumerateBasis, MatchesQuotientDimensions) {
  for (int lambda : {0, 1}) {
    auto x_dims = oracle::quotient_dim({X, lambda}, oracle::Relations::drbl, 4);
    EXPECT_EQ(x_dims, counts_by_degree(enumerate_basis(X, 4), 4));
    auto xy_dims = oracle::quotient_dim({XY, lambda}, oracle::Relations::drbl, 3);
    EXPECT_EQ(xy_dims, counts_by_degree(enumerate_basis(XY, 3), 3));
  }
  EXPECT_EQ(counts_by_degree(enumerate_basis(X, 7), 7), (std::vector<std::size_t>{1, 2, 5, 12, 32, 83, 230}));
  EXPECT_EQ(counts_by_degree(enumerate_basis(XY, 3), 3), (std::vector<std::size_t>{2, 5, 17}));
}

TEST(Matcher, PatternsAgreeWithRuleTable) {
  for (int lambda : {0, 1, 2})
    for (const Alphabet* alphabet : {&X, &XY}) {
      unsigned bound = alphabet == &X ? 7 : 6;
      DrblSystem sys(*alphabet, lambda, bound);
      RuleSet rules(instantiate_rules(sys, bound), lambda, bound);
      for (const auto& w : enumerate_words(*alphabet, bound)) {
        auto lazy = sys.matches(w);
        ASSERT_EQ(keys(lazy, *alphabet), keys(rules.matches(w), *alphabet)) << format(w, *alphabet);
        ASSERT_EQ(is_drbl_reducible(w, sys), !lazy.empty());
      }
    }
}

TEST(Matcher, ReducibleExamples) {
  DrblSystem sys(XY, 1, 8);
  EXPECT_TRUE(is_drbl_reducible(word("D(P(x))", XY), sys));
  EXPECT_TRUE(is_drbl_reducible(word("y P(x) P(y)", XY), sys));
  EXPECT_FALSE(is_drbl_reducible(word("P(y) P(x)", XY), sys));
  EXPECT_TRUE(is_drbl_reducible(word("D(P(x)) D(P(y))", XY), sys));
  EXPECT_TRUE(is_drbl_reducible(word("P(x D(P(y)))", XY), sys));
  EXPECT_TRUE(is_drbl_reducible(word("D^2(x) D^2(y)", XY), sys));
  EXPECT_FALSE(is_drbl_reducible(word("D(x) D(y)", XY), sys));

  DrblSystem zero(XY, 0, 8);
  EXPECT_TRUE(is_drbl_reducible(word("D(P(x)) P(y)", XY), zero));
  EXPECT_FALSE(is_drbl_reducible(word("D^2(x) D^2(y)", XY), zero));
}

TEST(VerifyAxioms, Examples) {
  auto x = parse_naword("x", XY), y = parse_naword("y", XY);
  DrblSystem zero(XY, 0, 8);
  EXPECT_TRUE(rota_baxter_residue(zero, x, y).is_zero());
  EXPECT_TRUE(rota_baxter_residue(zero, x, x).is_zero());
  DrblSystem two(X, 2, 8);
  EXPECT_TRUE(rota_baxter_residue(two, parse_naword("D(x)", X), parse_naword("P(x)", X)).is_zero());
  EXPECT_TRUE(rota_baxter_residue(two, parse_naword("[P(x) x]", X), parse_naword("D(x)", X)).is_zero());
}

TEST(VerifyAxioms, RandomSamplesPass) {
  for (int lambda : {0, 1, 2}) {
    auto sys = DrblSystem::numbered(2, lambda, 8);
    auto report = verify_axioms(sys, 40, 3, 99);
    EXPECT_EQ(report.samples, 40u);
    EXPECT_TRUE(report.pass()) << lambda;
  }
  EXPECT_THROW(verify_axioms(DrblSystem::numbered(1, 1, 6), 1, 3, 0), Error);
}

TEST(LiftedRotaBaxter, ReducesToLeadingBracket) {
  auto alphabet = xy();
  std::vector<Word> params{word("x", alphabet), word("y", alphabet), word("D(x)", alphabet)};
  for (int lambda : {0, 1, 2})
    for (unsigned j : {1u, 2u})
      for (const auto& u : params)
        for (const auto& v : params) {
          if (deglex_cmp(u, v) <= 0) continue;
          DrblSystem s1(alphabet, lambda, 12, false);
          Poly lifted = apply_D(s1.f(u, v), lambda, j);
          Poly bu = lie_expand(shirshov_bracket(u)), bv = lie_expand(shirshov_bracket(v));
          Poly pu = s1.apply_p(bu), pv = s1.apply_p(bv);
          Poly expected;
          if (lambda != 0)
            expected = pow(Rational(lambda), j) *
                       (commutator(apply_D(pu, lambda, j), apply_D(pv, lambda, j)) -
                        commutator(apply_D(bu, lambda, j - 1), apply_D(bv, lambda, j - 1)));
          else
            expected = commutator(apply_D(pu, lambda, j), pv) - commutator(apply_D(bu, lambda, j - 1), pv);
          Poly difference = lifted - expected;
          ASSERT_FALSE(difference.is_zero());
          EXPECT_LT(sign(deglex_cmp(difference.leading_word(), lifted.leading_word())), 0);
          EXPECT_TRUE(drbl_nf(difference, s1).is_zero());
        }
}

TEST(DegreeSeven, IrreducibleCountExceedsQuotientForNonzeroLambda) {
  auto oracle_dims = oracle::quotient_dim({X, 1}, oracle::Relations::drbl, 7);
  EXPECT_EQ(oracle_dims, (std::vector<std::size_t>{1, 2, 5, 12, 32, 83, 230}));
  EXPECT_EQ(oracle_dims, counts_by_degree(enumerate_basis(X, 7), 7));

  DrblSystem sys(X, 1, 7);
  RuleSet rules(instantiate_rules(sys, 7), 1, 7);
  auto irr = counts_by_degree(enumerate_irr_lie(rules, X, 7), 7);
  EXPECT_EQ(irr, (std::vector<std::size_t>{1, 2, 5, 12, 32, 83, 232}));

  auto report = is_gsb(rules, 7, Mode::lie);
  EXPECT_EQ(report.failures.size(), 2u);
  for (const auto& failure : report.failures) {
    bool multi_prime_section_lift = false;
    for (const auto* side : {&failure.ambiguity.left, &failure.ambiguity.right})
      if ((*side)->rule->origin.schema == "g" && (*side)->lead.breadth() > 1) multi_prime_section_lift = true;
    EXPECT_TRUE(multi_prime_section_lift);
  }
}

TEST(DegreeSeven, ZeroLambdaCertifies) {
  DrblSystem sys(X, 0, 7);
  RuleSet rules(instantiate_rules(sys, 7), 0, 7);
  EXPECT_TRUE(is_gsb(rules, 7, Mode::lie).pass());
  EXPECT_EQ(counts_by_degree(enumerate_irr_lie(rules, X, 7), 7),
            oracle::quotient_dim({X, 0}, oracle::Relations::drbl, 7));
}
