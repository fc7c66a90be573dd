// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "reference.hpp"

#include "difflie/cli.hpp"
#include "difflie/drbl.hpp"
#include "difflie/gsb.hpp"
#include "difflie/lyndon.hpp"
#include "difflie/oracle.hpp"
#include "difflie/text.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace difflie;
using namespace difflie::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<std::size_t> counts_by_degree(const std::vector<NAWord>& basis, unsigned max_degree) {
  std::vector<std::size_t> out(max_degree, 0);
  for (const auto& t : basis) ++out[t.underlying_word().degree() - 1];
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

Outcome lyndon_counts() {
  Outcome o;
  for (unsigned q : {2u, 3u}) {
    std::vector<Prime> letters;
    for (unsigned i = 0; i < q; ++i) letters.push_back(Prime::generator(i));
    std::vector<std::uint64_t> counts(9, 0);
    for (const auto& u : enumerate_lyndon(letters, 8)) ++counts[u.degree()];
    for (unsigned n = 1; n <= 8; ++n)
      if (counts[n] != oracle::lyndon_count(q, n)) {
        o.pass = false;
        o.detail += " q=" + std::to_string(q) + " n=" + std::to_string(n);
      }
  }
  if (o.pass) o.detail = "q in {2,3}, n <= 8";
  return o;
}

Outcome bracket_leading() {
  Outcome o;
  auto words = enumerate_alsw(xy(), 6);
  for (const auto& u : words)
    if (lie_expand(shirshov_bracket(u)).leading() != std::make_pair(u, Rational(1))) {
      o.pass = false;
      o.detail += " " + format(u, xy());
    }
  if (o.pass) o.detail = std::to_string(words.size()) + " LS words, X={x,y}, degree <= 6";
  return o;
}

Outcome d_expansion() {
  Outcome o;
  auto words = enumerate_words(xy(), 5);
  auto small = enumerate_words(xy(), 4);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  std::uniform_int_distribution<unsigned> power(0, 3);
  std::size_t closed = 0, leading = 0;
  for (int lambda : {0, 1, 2, -1}) {
    for (const auto& u : words) {
      ++closed;
      if (apply_D(Poly(u), lambda) != recursive_D(u, lambda)) o.pass = false;
    }
    for (int s = 0; s < 200; ++s) {
      const Word& u = small[pick(rng)];
      unsigned i = power(rng);
      ++leading;
      if (d_power_leading(u, i, lambda) != apply_D(u, lambda, i).leading()) o.pass = false;
    }
  }
  o.detail = std::to_string(closed) + " closed-form checks, " + std::to_string(leading) + " leading-term checks";
  return o;
}

Outcome section_family() {
  Outcome o;
  for (int lambda : {0, 1}) {
    auto sys = DrblSystem::numbered(2, lambda, 6, false);
    RuleSet rules(s1_rules(sys, 6), lambda, 6);
    auto report = is_gsb(rules, 6, Mode::lie);
    o.pass = o.pass && report.pass();
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("lambda=") + std::to_string(lambda) + " " +
                std::to_string(report.ambiguities()) + " ambiguities, " + std::to_string(report.failures.size()) +
                " failing";
  }
  return o;
}

Outcome full_system() {
  Outcome o;
  for (int lambda : {0, 1, 2}) {
    auto sys = DrblSystem::numbered(2, lambda, 7);
    RuleSet rules(instantiate_rules(sys, 7), lambda, 7);
    auto report = is_gsb(rules, 7, Mode::lie);
    o.pass = o.pass && report.pass();
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("lambda=") + std::to_string(lambda) + " " +
                std::to_string(report.failures.size()) + "/" + std::to_string(report.ambiguities()) + " failing";
    if (!report.pass())
      o.detail += " (first at " + format(report.failures.front().ambiguity.w, sys.alphabet()) + ")";
  }
  return o;
}

Outcome basis_dimensions() {
  Outcome o;
  const std::pair<Alphabet, unsigned> cases[] = {{x_only(), 4}, {xy(), 3}};
  for (int lambda : {0, 1})
    for (const auto& [alphabet, bound] : cases) {
      auto basis = counts_by_degree(enumerate_basis(alphabet, bound), bound);
      auto dims = oracle::quotient_dim({alphabet, lambda}, oracle::Relations::drbl, bound);
      if (basis != dims) {
        o.pass = false;
        o.detail += " basis " + join(basis) + " vs oracle " + join(dims);
      }
    }
  auto x = counts_by_degree(enumerate_basis(x_only(), 4), 4);
  auto xy_counts = counts_by_degree(enumerate_basis(xy(), 3), 3);
  if (x[0] != 1 || x[1] != 2 || x[2] != 5) o.pass = false;
  if (o.pass) o.detail = "X={x}: " + join(x) + "; X={x,y}: " + join(xy_counts);
  return o;
}

Outcome axioms() {
  Outcome o;
  for (int lambda : {0, 1, 2}) {
    auto report = verify_axioms(DrblSystem::numbered(2, lambda, 8), 100, 3, 7 + lambda);
    o.pass = o.pass && report.pass() && report.samples == 100;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("lambda=") + std::to_string(lambda) + " " +
                std::to_string(report.failures.size()) + " nonzero residues";
  }
  return o;
}

Outcome confluence() {
  Outcome o;
  std::mt19937_64 rng(99);
  auto sys = DrblSystem::numbered(2, 1, 4);
  auto pool = enumerate_words(sys.alphabet(), 4);
  auto alsw = enumerate_alsw(sys.alphabet(), 4);
  std::uniform_int_distribution<std::size_t> pick(0, alsw.size() - 1);
  std::size_t differ = 0;
  for (int i = 0; i < 100; ++i) {
    auto p = random_poly(pool, rng, 5);
    if (reduce(p, sys, Mode::assoc) != reduce(p, sys, Mode::assoc, {Strategy::random_reducible, rng(), nullptr}))
      ++differ;
    Poly lie = lie_expand(shirshov_bracket(alsw[pick(rng)])) - lie_expand(shirshov_bracket(alsw[pick(rng)]));
    if (reduce(lie, sys, Mode::lie) != reduce(lie, sys, Mode::lie, {Strategy::random_reducible, rng(), nullptr}))
      ++differ;
  }
  o.pass = differ == 0;
  o.detail = "200 polynomials, " + std::to_string(differ) + " differing";
  return o;
}

Outcome lifted_rota_baxter() {
  Outcome o;
  auto alphabet = xy();
  std::vector<Word> params{word("x", alphabet), word("y", alphabet), word("D(x)", alphabet)};
  std::size_t cases = 0;
  for (int lambda : {0, 1, 2})
    for (unsigned j : {1u, 2u})
      for (const auto& u : params)
        for (const auto& v : params) {
          if (deglex_cmp(u, v) <= 0) continue;
          ++cases;
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
          unsigned bound = lifted.degree();
          RuleSet rules(s1_rules(s1, bound), lambda, bound);
          bool ok = !difference.is_zero() && deglex_cmp(difference.leading_word(), lifted.leading_word()) < 0 &&
                    drbl_nf(difference, s1).is_zero() && reduce_lie(difference, rules).is_zero();
          if (!ok) {
            o.pass = false;
            o.detail += " lambda=" + std::to_string(lambda) + ",j=" + std::to_string(j) + ",u=" +
                        format(u, alphabet) + ",v=" + format(v, alphabet);
          }
        }
  if (o.pass) o.detail = std::to_string(cases) + " cases, both lambda branches";
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::vector<std::pair<Term, Alphabet>> corpus;
  const std::pair<unsigned, unsigned> cases[] = {{1, 4}, {2, 3}};
  for (const auto& [gens, bound] : cases) {
    auto alphabet = Alphabet::numbered(gens);
    for (const auto& t : enumerate_basis(alphabet, bound)) {
      corpus.emplace_back(t, alphabet);
      corpus.emplace_back(lie_expand(t), alphabet);
    }
  }
  auto alphabet = Alphabet::numbered(2);
  auto pool = enumerate_words(alphabet, 4);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> numerator(-9, 9), denominator(1, 7);
  while (corpus.size() < 200) {
    Poly p = random_poly(pool, rng, 1 + corpus.size() % 4);
    Rational scale(numerator(rng), denominator(rng));
    scale.canonicalize();
    p *= scale;
    corpus.emplace_back(p, alphabet);
  }
  std::size_t bad = 0;
  for (const auto& [t, a] : corpus) {
    auto text = format(t, a);
    Term back = parse_term(text, a);
    bool same = std::visit(
        [&](const auto& original) {
          using T = std::decay_t<decltype(original)>;
          if (std::holds_alternative<T>(back)) return std::get<T>(back) == original;
          if constexpr (std::is_same_v<T, Poly>)
            return std::holds_alternative<NAWord>(back) && lie_expand(std::get<NAWord>(back)) == original;
          return false;
        },
        t);
    if (!same) ++bad;
  }
  const std::vector<std::vector<std::string>> commands{
      {"basis", "--gens", "2", "--lambda", "1", "--max-deg", "4", "--json"},
      {"nf", "--lambda", "1", "--mode", "lie", "--max-deg", "4", "[P(x1) P(x2)]"},
      {"check-gsb", "--system", "drbl", "--lambda", "2", "--max-deg", "5"},
      {"lyndon", "--gens", "3", "--max-deg", "5"}};
  std::size_t unstable = 0;
  for (const auto& args : commands) {
    std::ostringstream first, second, err;
    cli::run(args, first, err);
    cli::run(args, second, err);
    if (first.str() != second.str() || first.str().empty()) ++unstable;
  }
  o.pass = bad == 0 && unstable == 0;
  o.detail = std::to_string(corpus.size()) + " expressions, " + std::to_string(bad) + " mismatches; " +
             std::to_string(commands.size()) + " commands, " + std::to_string(unstable) + " unstable";
  return o;
}

} // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Lyndon counts", lyndon_counts},
      {"bracket leading term", bracket_leading},
      {"D-expansion coherence", d_expansion},
      {"section family certified to degree 6", section_family},
      {"full system certified to degree 7", full_system},
      {"basis dimensions", basis_dimensions},
      {"axiom suite", axioms},
      {"confluence", confluence},
      {"lifted Rota-Baxter residue", lifted_rota_baxter},
      {"CLI round trip", round_trip},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("error: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << index << " " << name << " [" << timing << "] "
              << outcome.detail << std::endl;
    if (!outcome.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
