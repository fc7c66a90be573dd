#include "difflie/drbl.hpp"

#include "difflie/error.hpp"

#include <algorithm>
#include <random>

namespace difflie {

namespace {

Alphabet checked(Alphabet alphabet) {
  if (alphabet.operator_count() != 1 || alphabet.arity(0) != 1)
    throw Error("DRBL system needs exactly one unary operator");
  return alphabet;
}

NAWord p_of(const NAWord& t) { return NAWord::apply(0, {t}); }

bool is_p(const Prime& q) { return !q.is_generator() && q.op() == 0; }

} // namespace

DrblSystem::DrblSystem(Alphabet alphabet, Rational lambda, unsigned max_degree, bool with_f)
    : config_{checked(std::move(alphabet)), std::move(lambda)}, max_degree_(max_degree), with_f_(with_f) {}

DrblSystem DrblSystem::numbered(std::size_t generators, Rational lambda, unsigned max_degree, bool with_f) {
  return DrblSystem(Alphabet::numbered(generators), std::move(lambda), max_degree, with_f);
}

std::size_t DrblSystem::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = k.u.hash();
  h ^= k.v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= (static_cast<std::size_t>(k.lift) << 1 | static_cast<std::size_t>(k.is_f)) + 0x9e3779b97f4a7c15ULL + (h << 6) +
       (h >> 2);
  return h;
}

Poly DrblSystem::apply_p(const Poly& a) const {
  return apply_operator(config_.alphabet, p(), std::span<const Poly>(&a, 1));
}

Poly DrblSystem::g(const Word& w) const {
  NAWord bw = shirshov_bracket(w);
  return lie_expand(NAWord::apply(p(), {bw}, 1)) - lie_expand(bw);
}

Poly DrblSystem::f(const Word& u, const Word& v) const {
  if (deglex_cmp(u, v) <= 0) throw Error("f(u,v) needs u > v");
  NAWord bu = shirshov_bracket(u);
  NAWord bv = shirshov_bracket(v);
  Poly out = lie_expand(NAWord::bracket(p_of(bu), p_of(bv)));
  out -= lie_expand(p_of(NAWord::bracket(bu, p_of(bv))));
  out -= lie_expand(p_of(NAWord::bracket(p_of(bu), bv)));
  out.add_scaled(lie_expand(p_of(NAWord::bracket(bu, bv))), -lambda());
  return out;
}

std::shared_ptr<const LiftedRule> DrblSystem::lifted(const Key& key) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::shared_ptr<const LiftedRule> out;
  if (key.lift == 0) {
    Rule rule = key.is_f ? make_rule(f(key.u, key.v), {"f", {key.u, key.v}}) : make_rule(g(key.u), {"g", {key.u}});
    auto entry = std::make_shared<LiftedRule>();
    entry->rule = std::make_shared<const Rule>(std::move(rule));
    entry->poly = entry->rule->poly;
    entry->lead = entry->poly.leading_word();
    entry->lc = entry->poly.leading_coefficient();
    out = std::move(entry);
  } else {
    auto base = lifted(Key{key.is_f, key.u, key.v, key.lift - 1});
    auto entry = std::make_shared<LiftedRule>();
    entry->rule = base->rule;
    entry->lift = key.lift;
    entry->poly = apply_D(base->poly, lambda());
    entry->lead = entry->poly.leading_word();
    entry->lc = entry->poly.leading_coefficient();
    out = std::move(entry);
  }
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(out)).first->second;
}

std::shared_ptr<const LiftedRule> DrblSystem::g_lift(const Word& w, unsigned lift) const {
  return lifted(Key{false, w, Word(), lift});
}

std::shared_ptr<const LiftedRule> DrblSystem::f_lift(const Word& u, const Word& v, unsigned lift) const {
  return lifted(Key{true, u, v, lift});
}

void DrblSystem::check_degree(const Word& w) const {
  if (w.degree() > max_degree_)
    throw Error("degree " + std::to_string(w.degree()) + " exceeds the DRBL system bound " +
                std::to_string(max_degree_));
}

namespace {

// A lifted leading word of the system located in some prime sequence.
struct Site {
  bool is_f;
  Word u;
  Word v;
  unsigned lift;
  std::size_t start;
  std::size_t length;
};

// Whether D^{i+1}(P(u)) leads D^i(g(u)); otherwise the lift of -[u] does.
bool g_lift_leads_with_p(const Word& u, unsigned i, const Rational& lambda) {
  Word top({Prime::apply(0, {u}, i + 1)});
  return deglex_cmp(top, d_power_leading(u, i, lambda).first) > 0;
}

// Calls visit(walker, seq, site) for every lifted leading word occurring in w,
// in pre-order; visit returns true to stop.
template <class Visit>
void scan_sites(const Word& w, const Rational& lambda, bool with_f, Visit&& visit) {
  SequenceWalker walker;
  const bool zero = lambda == 0;
  walker.walk(w.primes(), [&](SequenceWalker& self, const std::vector<Prime>& seq, std::size_t i) {
    const Prime& q = seq[i];
    if (is_p(q)) {
      const Word& u = q.args()[0];
      if (is_differential_alsw(u)) {
        const unsigned k = q.d_power();
        if (k >= 1 && g_lift_leads_with_p(u, k - 1, lambda) && visit(self, seq, Site{false, u, Word(), k - 1, i, 1}))
          return true;
        if (with_f && i + 1 < seq.size()) {
          const Prime& r = seq[i + 1];
          if (is_p(r) && r.d_power() == (zero ? 0 : k)) {
            const Word& v = r.args()[0];
            if (deglex_cmp(u, v) > 0 && is_differential_alsw(v) && visit(self, seq, Site{true, u, v, k, i, 2}))
              return true;
          }
        }
      }
    }
    // D^i(u_1)...D^i(u_n) leads D^i(g(u)) once lambda != 0 and (n-1)i >= 2.
    if (zero || q.d_power() == 0) return false;
    for (unsigned d = 1; d <= q.d_power(); ++d) {
      std::vector<Prime> base{q.with_d_power(q.d_power() - d)};
      for (std::size_t n = 2; i + n <= seq.size(); ++n) {
        const Prime& next = seq[i + n - 1];
        if (next.d_power() < d) break;
        base.push_back(next.with_d_power(next.d_power() - d));
        if ((n - 1) * d < 2) continue;
        Word u(base);
        if (!is_differential_alsw(u) || g_lift_leads_with_p(u, d, lambda)) continue;
        if (visit(self, seq, Site{false, std::move(u), Word(), d, i, n})) return true;
      }
    }
    return false;
  });
}

} // namespace

namespace {

Match match_at(const DrblSystem& sys, const SequenceWalker& walker, const std::vector<Prime>& seq, const Site& site) {
  auto rule = site.is_f ? sys.f_lift(site.u, site.v, site.lift) : sys.g_lift(site.u, site.lift);
  const auto first = seq.begin() + static_cast<std::ptrdiff_t>(site.start);
  if (!(rule->lead == Word(std::vector<Prime>(first, first + static_cast<std::ptrdiff_t>(site.length)))))
    throw Error("DRBL rule lift does not lead with the recognised pattern");
  return {std::move(rule), walker.context(seq, site.start, site.length)};
}

} // namespace

std::vector<Match> DrblSystem::matches(const Word& w) const {
  check_degree(w);
  std::vector<Match> out;
  scan_sites(w, lambda(), with_f_, [&](SequenceWalker& self, const std::vector<Prime>& seq, const Site& site) {
    out.push_back(match_at(*this, self, seq, site));
    return false;
  });
  return out;
}

std::optional<Match> DrblSystem::first_match(const Word& w) const {
  check_degree(w);
  std::optional<Match> out;
  scan_sites(w, lambda(), with_f_, [&](SequenceWalker& self, const std::vector<Prime>& seq, const Site& site) {
    out = match_at(*this, self, seq, site);
    return true;
  });
  return out;
}

bool is_drbl_reducible(const Word& w, const DrblSystem& sys) {
  bool found = false;
  scan_sites(w, sys.lambda(), sys.with_f(), [&](SequenceWalker&, const std::vector<Prime>&, const Site&) {
    return found = true;
  });
  return found;
}

namespace {

std::vector<Rule> instantiate(const DrblSystem& sys, unsigned max_degree, bool with_f) {
  std::vector<Rule> out;
  if (max_degree < 3) return out;
  const auto words = enumerate_alsw(sys.alphabet(), max_degree - 2);
  for (const auto& w : words) out.push_back(make_rule(sys.g(w), {"g", {w}}));
  if (!with_f) return out;
  for (const auto& u : words)
    for (const auto& v : words)
      if (u.degree() + v.degree() + 2 <= max_degree && deglex_cmp(u, v) > 0)
        out.push_back(make_rule(sys.f(u, v), {"f", {u, v}}));
  return out;
}

} // namespace

std::vector<Rule> instantiate_rules(const DrblSystem& sys, unsigned max_degree) {
  return instantiate(sys, max_degree, sys.with_f());
}

std::vector<Rule> s1_rules(const DrblSystem& sys, unsigned max_degree) { return instantiate(sys, max_degree, false); }

namespace {

unsigned p_count(const Word& w) {
  unsigned n = 0;
  for (const auto& q : w) {
    if (q.is_generator()) continue;
    n += q.op() == 0;
    for (const auto& a : q.args()) n += p_count(a);
  }
  return n;
}

// The term maximal for (number of P, deglex).
std::pair<Word, Rational> top_term(const Poly& p) {
  auto best = p.begin();
  unsigned best_count = p_count(best->first);
  for (auto it = std::next(p.begin()); it != p.end(); ++it) {
    unsigned c = p_count(it->first);
    if (c > best_count) {
      best = it;
      best_count = c;
    }
  }
  return *best;
}

struct Pattern {
  bool is_f;
  Word u;
  Word v;
  unsigned k;
  Context context;
};

// First D^k(P(u)), k >= 1, in pre-order; failing that the first P(u) P(v), u > v.
std::optional<Pattern> find_pattern(const Word& w, bool with_f) {
  std::optional<Pattern> f_site;
  std::optional<Pattern> g_site;
  SequenceWalker walker;
  walker.walk(w.primes(), [&](SequenceWalker& self, const std::vector<Prime>& seq, std::size_t i) {
    const Prime& q = seq[i];
    if (!is_p(q) || !is_differential_alsw(q.args()[0])) return false;
    if (q.d_power() >= 1) {
      g_site = Pattern{false, q.args()[0], Word(), q.d_power(), self.context(seq, i, 1)};
      return true;
    }
    if (with_f && !f_site && i + 1 < seq.size()) {
      const Prime& r = seq[i + 1];
      if (is_p(r) && r.d_power() == 0 && deglex_cmp(q.args()[0], r.args()[0]) > 0 && is_differential_alsw(r.args()[0]))
        f_site = Pattern{true, q.args()[0], r.args()[0], 0, self.context(seq, i, 2)};
    }
    return false;
  });
  return g_site ? g_site : f_site;
}

} // namespace

LieForm drbl_nf(const Poly& p, const DrblSystem& sys, const ReductionOptions& options) {
  if (!p.is_zero() && p.degree() > sys.max_degree())
    throw Error("degree " + std::to_string(p.degree()) + " exceeds the DRBL system bound " +
                std::to_string(sys.max_degree()));
  LieForm out;
  Poly work = p;
  while (!work.is_zero()) {
    const auto [w, c] = top_term(work);
    if (!is_differential_alsw(w))
      throw Error("drbl_nf: irreducible top word is not a Lyndon-Shirshov word; input is not a Lie polynomial");
    auto site = find_pattern(w, sys.with_f());
    if (!site) {
      out.terms.emplace(w, c);
      work.add_scaled(lie_expand(shirshov_bracket(w)), -c);
      continue;
    }
    auto rule = site->is_f ? sys.f_lift(site->u, site->v, 0) : sys.g_lift(site->u, site->k - 1);
    const Word pattern = site->is_f ? rule->lead : Word({Prime::apply(0, {site->u}, site->k)});
    NAWord templ = special_bracket_template(site->context, pattern);
    // The rule polynomial carries the pattern with coefficient 1.
    const Rational k = c / rule->poly.coefficient(pattern);
    work.add_scaled(lie_expand(templ, rule->poly), -k);
    if (options.trace) options.trace->push_back({rule, site->context, k, true});
  }
  return out;
}

LieForm drbl_nf(const NAWord& t, const DrblSystem& sys, const ReductionOptions& options) {
  return drbl_nf(lie_expand(t), sys, options);
}

namespace {

bool has_descending_p_pair(const std::vector<Prime>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (is_p(seq[i]) && is_p(seq[i + 1]) && deglex_cmp(seq[i].args()[0], seq[i + 1].args()[0]) > 0) return true;
  return false;
}

} // namespace

std::vector<NAWord> enumerate_basis(const Alphabet& alphabet, unsigned max_degree) {
  checked(alphabet);
  std::vector<std::vector<Word>> by_degree(max_degree + 1);
  std::vector<Prime> letters;
  for (unsigned n = 1; n <= max_degree; ++n) {
    for (GeneratorId x = 0; x < alphabet.generator_count(); ++x) letters.push_back(Prime::generator(x, n - 1));
    if (n >= 2)
      for (const auto& b : by_degree[n - 1]) letters.push_back(Prime::apply(0, {b}));
    for (auto& w : enumerate_lyndon(letters, n))
      if (w.degree() == n && !has_descending_p_pair(w.primes())) by_degree[n].push_back(std::move(w));
    std::sort(by_degree[n].begin(), by_degree[n].end(), DeglexAscending{});
  }
  std::vector<NAWord> out;
  for (const auto& ws : by_degree)
    for (const auto& w : ws) out.push_back(shirshov_bracket(w));
  return out;
}

AxiomReport verify_axioms(const DrblSystem& sys, std::size_t samples, unsigned max_degree, std::uint64_t seed) {
  if (sys.max_degree() < 2 * max_degree + 2)
    throw Error("verify_axioms needs a system bound of at least " + std::to_string(2 * max_degree + 2));
  const auto basis = enumerate_basis(sys.alphabet(), max_degree);
  AxiomReport report;
  if (basis.empty()) return report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  const Rational& lambda = sys.lambda();
  for (std::size_t s = 0; s < samples; ++s) {
    const NAWord& a = basis[pick(rng)];
    const NAWord& b = basis[pick(rng)];
    const Poly pa = lie_expand(a);
    const Poly pb = lie_expand(b);
    const Poly Pa = sys.apply_p(pa);
    const Poly Pb = sys.apply_p(pb);
    const Poly Da = apply_D(pa, lambda);
    const Poly Db = apply_D(pb, lambda);

    Poly rb = commutator(Pa, Pb) - sys.apply_p(commutator(pa, Pb)) - sys.apply_p(commutator(Pa, pb));
    rb.add_scaled(sys.apply_p(commutator(pa, pb)), -lambda);
    Poly leibniz = apply_D(commutator(pa, pb), lambda) - commutator(Da, pb) - commutator(pa, Db);
    leibniz.add_scaled(commutator(Da, Db), -lambda);
    Poly section = apply_D(Pa, lambda) - pa;

    const std::pair<const char*, const Poly*> identities[] = {
        {"rota-baxter", &rb}, {"leibniz", &leibniz}, {"section", &section}};
    for (const auto& [name, poly] : identities) {
      LieForm residue = drbl_nf(*poly, sys);
      if (!residue.is_zero()) report.failures.push_back({a, b, name, std::move(residue)});
    }
    ++report.samples;
  }
  return report;
}

} // namespace difflie
