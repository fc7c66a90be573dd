#include "reference.hpp"

#include "difflie/cli.hpp"
#include "difflie/drbl.hpp"
#include "difflie/text.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace difflie;
using namespace difflie::testing;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

const Alphabet N2 = Alphabet::numbered(2);

} // namespace

TEST(Parse, Examples) {
  auto t = parse_term("D^2(x1)", N2);
  ASSERT_TRUE(std::holds_alternative<NAWord>(t));
  auto prime = std::get<NAWord>(t).underlying_prime();
  EXPECT_EQ(prime.d_power(), 2u);
  EXPECT_TRUE(prime.is_generator());
  EXPECT_EQ(prime.generator_id(), 0u);

  auto w = parse_word("P(x1 x2) * D(x1)", N2);
  EXPECT_EQ(w.breadth(), 2u);
  EXPECT_EQ(w, parse_word("P(x1 x2) D(x1)", N2));

  t = parse_term("[x1 [x1 x2]]", N2);
  ASSERT_TRUE(std::holds_alternative<NAWord>(t));
  auto x1 = NAWord::generator(0), x2 = NAWord::generator(1);
  EXPECT_EQ(std::get<NAWord>(t), NAWord::bracket(x1, NAWord::bracket(x1, x2)));

  EXPECT_EQ(parse_word("D^0(x1)", N2), parse_word("x1", N2));
  EXPECT_EQ(parse_poly("  x1+ 2  x2 ", N2), parse_poly("x1 + 2 x2", N2));
  EXPECT_TRUE(parse_poly("0", N2).is_zero());
  EXPECT_EQ(parse_poly("D(D(x1))", N2), parse_poly("D^2(x1)", N2));
}

TEST(Parse, Errors) {
  try {
    parse_poly("x1 + * x2", N2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_poly("x3", N2), ParseError);
  EXPECT_THROW(parse_poly("Q(x1)", N2), ParseError);
  EXPECT_THROW(parse_poly("P(x1, x2)", N2), ParseError);
  EXPECT_THROW(parse_poly("x1 / 0", N2), Error);
  EXPECT_THROW(parse_word("2 x1", N2), Error);
}

TEST(Format, Examples) {
  EXPECT_EQ(format(parse_word("D^1(x1)", N2), N2), "D(x1)");
  EXPECT_EQ(format(parse_word("P(x1 x2) x1", N2), N2), "P(x1 x2) * x1");
  EXPECT_EQ(format(parse_poly("-3/2 D(x1)", N2), N2), "-3/2 D(x1)");
  EXPECT_EQ(format(parse_poly("x2 - x1", N2), N2), "-x1 + x2");
  EXPECT_EQ(format(Poly(), N2), "0");
  EXPECT_EQ(format(parse_naword("[P([x1 x2]) x2]", N2), N2), "[P([x1 x2]) x2]");
}

TEST(Format, RoundTrip) {
  for (const auto& t : enumerate_basis(N2, 4)) {
    auto text = format(t, N2);
    ASSERT_EQ(parse_naword(text, N2), t) << text;
    auto expansion = lie_expand(t);
    ASSERT_EQ(parse_poly(format(expansion, N2), N2), expansion);
  }
  for (const auto& w : enumerate_words(N2, 4)) ASSERT_EQ(parse_word(format(w, N2), N2), w);
  auto p = parse_poly("7/3 P(D(x1) x2) - 1/5 D^3(x2) x1 + 4 x1", N2);
  EXPECT_EQ(parse_poly(format(p, N2), N2), p);
}

TEST(Run, NormalForm) {
  auto r = run({"nf", "--lambda", "1", "--mode", "lie", "--max-deg", "4", "[P(x1) P(x2)]"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "P([P(x1) x2]) - P([P(x2) x1]) + P([x1 x2])\n");

  r = run({"nf", "--lambda", "0", "--mode", "assoc", "--max-deg", "3", "D(P(x1)) + x2"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "x1 + x2\n");
}

TEST(Run, Basis) {
  auto r = run({"basis", "--gens", "1", "--lambda", "1", "--max-deg", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("degree 1: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("degree 2: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("degree 3: 5\n"), std::string::npos);

  r = run({"basis", "--gens", "1", "--lambda", "1/2", "--max-deg", "2", "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"lambda\": \"1/2\""), std::string::npos);
  EXPECT_NE(r.out.find("\"count\": 2"), std::string::npos);
}

TEST(Run, LyndonAndBracket) {
  auto r = run({"lyndon", "--gens", "2", "--max-deg", "5"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("length 5: 6\n"), std::string::npos);
  r = run({"bracket", "x1 x1 x2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "[x1 [x1 x2]]\n");
}

TEST(Run, CheckGsb) {
  auto r = run({"check-gsb", "--system", "s1", "--lambda", "0", "--max-deg", "5"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.ends_with("certified\n"));
  EXPECT_EQ(r.out.find("not certified"), std::string::npos);
}

TEST(Run, OracleDim) {
  auto r = run({"oracle-dim", "--gens", "1", "--lambda", "1", "--max-deg", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.ends_with("agree\n"));
}

TEST(Run, Errors) {
  EXPECT_NE(run({"nf", "--max-deg", "3", "x1 +"}).status, 0);
  EXPECT_NE(run({"nf", "--max-deg", "2", "P(P(x1))"}).status, 0);
  EXPECT_NE(run({"basis", "--max-deg", "zero"}).status, 0);
  EXPECT_NE(run({"frobnicate"}).status, 0);
  auto r = run({"bracket", "x2 x1"});
  EXPECT_EQ(r.status, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Run, Deterministic) {
  std::vector<std::string> args{"basis", "--gens", "2", "--lambda", "2", "--max-deg", "4", "--json"};
  EXPECT_EQ(run(args).out, run(args).out);
  std::vector<std::string> gsb{"check-gsb", "--system", "drbl", "--lambda", "1", "--max-deg", "5"};
  EXPECT_EQ(run(gsb).out, run(gsb).out);
}
