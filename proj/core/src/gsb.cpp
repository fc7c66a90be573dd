#include "difflie/gsb.hpp"

#include "difflie/error.hpp"

#include <algorithm>
#include <random>

namespace difflie {

Rule make_rule(const Poly& p, RuleOrigin origin) {
  if (p.is_zero()) throw Error("a rule must be nonzero");
  Rational inv = 1 / p.leading_coefficient();
  return {p * inv, std::move(origin)};
}

NormalSWord normalize_s_word(const Context& pi) { return {pi.without_hole_power(), pi.hole_d_power()}; }

std::optional<Match> RuleSource::first_match(const Word& w) const {
  auto all = matches(w);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

RuleSet::RuleSet(std::vector<Rule> rules, Rational lambda, unsigned max_degree)
    : lambda_(std::move(lambda)), max_degree_(max_degree) {
  for (auto& r : rules) {
    if (r.poly.is_zero()) throw Error("a rule must be nonzero");
    if (r.poly.leading_coefficient() != 1) r = make_rule(r.poly, std::move(r.origin));
    auto shared = std::make_shared<const Rule>(std::move(r));
    rules_.push_back(shared);
    const Word& lead = shared->poly.leading_word();
    Poly lifted = shared->poly;
    for (unsigned i = 0; d_power_leading_degree(lead, i, lambda_) <= max_degree_; ++i) {
      if (i > 0) lifted = apply_D(lifted, lambda_);
      auto entry = std::make_shared<LiftedRule>();
      entry->rule = shared;
      entry->lift = i;
      entry->poly = lifted;
      entry->lead = lifted.leading_word();
      entry->lc = lifted.leading_coefficient();
      const std::size_t id = lifted_.size();
      by_first_prime_[entry->lead[0]].push_back(id);
      by_lead_[entry->lead].push_back(id);
      for (std::size_t k = 1; k < entry->lead.breadth(); ++k) by_prefix_[entry->lead.slice(0, k)].push_back(id);
      lifted_.push_back(std::move(entry));
    }
  }
}

const std::vector<std::size_t>* RuleSet::with_lead(const Word& w) const {
  auto it = by_lead_.find(w);
  return it == by_lead_.end() ? nullptr : &it->second;
}

const std::vector<std::size_t>* RuleSet::with_prefix(const Word& p) const {
  auto it = by_prefix_.find(p);
  return it == by_prefix_.end() ? nullptr : &it->second;
}

namespace {

bool lead_matches_at(const Word& lead, const std::vector<Prime>& seq, std::size_t i) {
  if (i + lead.breadth() > seq.size()) return false;
  for (std::size_t k = 1; k < lead.breadth(); ++k)
    if (!(seq[i + k] == lead[k])) return false;
  return true;
}

} // namespace

template <class Visit>
void RuleSet::scan(const Word& w, Visit&& on_match) const {
  SequenceWalker walker;
  auto visit = [&](SequenceWalker& self, const std::vector<Prime>& seq, std::size_t i) {
    auto it = by_first_prime_.find(seq[i]);
    if (it == by_first_prime_.end()) return false;
    for (std::size_t id : it->second) {
      const auto& rule = lifted_[id];
      if (!lead_matches_at(rule->lead, seq, i)) continue;
      if (on_match(Match{rule, self.context(seq, i, rule->lead.breadth())})) return true;
    }
    return false;
  };
  walker.walk(w.primes(), visit);
}

std::vector<Match> RuleSet::matches(const Word& w) const {
  std::vector<Match> out;
  scan(w, [&](Match m) {
    out.push_back(std::move(m));
    return false;
  });
  return out;
}

std::optional<Match> RuleSet::first_match(const Word& w) const {
  std::optional<Match> out;
  scan(w, [&](Match m) {
    out = std::move(m);
    return true;
  });
  return out;
}

std::vector<Ambiguity> find_ambiguities(const RuleSet& rules, unsigned max_degree) {
  if (max_degree > rules.max_degree())
    throw Error("find_ambiguities: rule table only lifted to degree " + std::to_string(rules.max_degree()));
  std::vector<Ambiguity> out;
  const auto& lifted = rules.lifted();
  for (std::size_t fi = 0; fi < lifted.size(); ++fi) {
    const auto& f = lifted[fi];
    const Word& lf = f->lead;
    if (lf.degree() > max_degree) continue;

    // Inclusions: lead(g) is a run in some sequence of lead(f).
    SequenceWalker walker;
    auto visit = [&](SequenceWalker& self, const std::vector<Prime>& seq, std::size_t i) {
      for (std::size_t len = 1; i + len <= seq.size(); ++len) {
        Word run(std::vector<Prime>(seq.begin() + static_cast<std::ptrdiff_t>(i),
                                    seq.begin() + static_cast<std::ptrdiff_t>(i + len)));
        const auto* hits = rules.with_lead(run);
        if (!hits) continue;
        for (std::size_t gi : *hits) {
          if (gi == fi && self.top_level() && len == seq.size()) continue;
          Ambiguity amb{Ambiguity::Kind::inclusion, f, lifted[gi], lf, {}, {}, self.context(seq, i, len)};
          out.push_back(std::move(amb));
        }
      }
      return false;
    };
    walker.walk(lf.primes(), visit);

    // Intersections: a proper suffix of lead(f) is a proper prefix of lead(g).
    const std::size_t m = lf.breadth();
    for (std::size_t k = 1; k < m; ++k) {
      Word suffix = lf.slice(m - k, k);
      const auto* hits = rules.with_prefix(suffix);
      if (!hits) continue;
      for (std::size_t gi : *hits) {
        const auto& g = lifted[gi];
        const Word& lg = g->lead;
        if (lg.breadth() <= k) continue;
        Word a = lg.slice(k, lg.breadth() - k);
        Word w = lf * a;
        if (w.degree() > max_degree) continue;
        Word b = lf.slice(0, m - k);
        out.push_back({Ambiguity::Kind::intersection, f, g, std::move(w), std::move(a), std::move(b), Context()});
      }
    }
  }
  return out;
}

namespace {

Context prefix_context(const Word& b) { return Context({{b.primes(), {}}}, {}, 0); }
Context suffix_context(const Word& a) { return Context({{{}, a.primes()}}, {}, 0); }

// [pi|_{D^i(s)}]_{lead}: the special bracketing with the lifted rule filled in.
Poly special_multiple(const Context& pi, const LiftedRule& rule) {
  NAWord templ = special_bracket_template(pi, rule.lead);
  return lie_expand(templ, rule.poly);
}

} // namespace

Poly composition(const Ambiguity& amb, Mode mode, const Rational& lambda) {
  const LiftedRule& f = *amb.left;
  const LiftedRule& g = *amb.right;
  const Rational inv_f = 1 / f.lc;
  const Rational inv_g = 1 / g.lc;
  if (amb.kind == Ambiguity::Kind::intersection) {
    if (mode == Mode::assoc)
      return f.poly * Poly(amb.a) * inv_f - Poly(amb.b) * g.poly * inv_g;
    return special_multiple(suffix_context(amb.a), f) * inv_f - special_multiple(prefix_context(amb.b), g) * inv_g;
  }
  if (mode == Mode::assoc) return f.poly * inv_f - substitute(amb.context, g.poly, lambda) * inv_g;
  return f.poly * inv_f - special_multiple(amb.context, g) * inv_g;
}

Poly LieForm::expand() const {
  Poly out;
  for (const auto& [w, c] : terms) out.add_scaled(lie_expand(shirshov_bracket(w)), c);
  return out;
}

std::vector<std::pair<Rational, NAWord>> LieForm::bracketed() const {
  std::vector<std::pair<Rational, NAWord>> out;
  for (const auto& [w, c] : terms) out.emplace_back(c, shirshov_bracket(w));
  return out;
}

namespace {

Poly reduce_assoc(const Poly& p, const RuleSource& rules, const ReductionOptions& options) {
  const Rational& lambda = rules.lambda();
  Poly work = p;
  Poly out;
  auto apply = [&](const Match& m, const Rational& c) {
    const Rational k = c / m.rule->lc;
    work.add_scaled(substitute(m.context, m.rule->poly, lambda), -k);
    if (options.trace) options.trace->push_back({m.rule, m.context, k, false});
  };

  if (options.strategy == Strategy::leading_first) {
    while (!work.is_zero()) {
      const auto [w, c] = work.leading();
      if (auto m = rules.first_match(w)) {
        apply(*m, c);
      } else {
        out.add(w, c);
        work.add(w, -c);
      }
    }
    return out;
  }

  std::mt19937_64 rng(options.seed);
  for (;;) {
    std::vector<std::pair<Word, Rational>> terms(work.begin(), work.end());
    std::shuffle(terms.begin(), terms.end(), rng);
    bool rewrote = false;
    for (const auto& [w, c] : terms) {
      auto ms = rules.matches(w);
      if (ms.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
      apply(ms[pick(rng)], c);
      rewrote = true;
      break;
    }
    if (!rewrote) return work;
  }
}

} // namespace

LieForm reduce_lie(const Poly& p, const RuleSource& rules, const ReductionOptions& options) {
  std::mt19937_64 rng(options.seed);
  LieForm out;
  Poly work = p;
  while (!work.is_zero()) {
    const auto [w, c] = work.leading();
    std::optional<Match> m;
    if (options.strategy == Strategy::leading_first) {
      m = rules.first_match(w);
    } else {
      auto ms = rules.matches(w);
      if (!ms.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
        m = std::move(ms[pick(rng)]);
      }
    }
    if (m) {
      const Rational k = c / m->rule->lc;
      Poly reducer = special_multiple(m->context, *m->rule);
      work.add_scaled(reducer, -k);
      if (options.trace) options.trace->push_back({m->rule, m->context, k, true});
      continue;
    }
    if (!is_differential_alsw(w))
      throw Error("reduce_lie: irreducible leading word is not a Lyndon-Shirshov word; input is not a Lie polynomial");
    out.terms.emplace(w, c);
    work.add_scaled(lie_expand(shirshov_bracket(w)), -c);
  }
  return out;
}

Poly reduce(const Poly& p, const RuleSource& rules, Mode mode, const ReductionOptions& options) {
  if (mode == Mode::assoc) return reduce_assoc(p, rules, options);
  return reduce_lie(p, rules, options).expand();
}

GsbReport is_gsb(const RuleSet& rules, unsigned max_degree, Mode mode) {
  GsbReport report;
  report.mode = mode;
  report.max_degree = max_degree;
  for (auto& amb : find_ambiguities(rules, max_degree)) {
    (amb.kind == Ambiguity::Kind::intersection ? report.intersections : report.inclusions) += 1;
    try {
      Poly comp = composition(amb, mode, rules.lambda());
      if (!comp.is_zero() && deglex_cmp(comp.leading_word(), amb.w) >= 0) {
        report.failures.push_back({amb, comp, "composition does not drop below w"});
        continue;
      }
      Poly residue = mode == Mode::lie ? reduce_lie(comp, rules).expand() : reduce(comp, rules, mode);
      if (!residue.is_zero()) report.failures.push_back({std::move(amb), std::move(residue), "nonzero residue"});
    } catch (const Error& e) {
      report.failures.push_back({std::move(amb), Poly(), e.what()});
    }
  }
  return report;
}

std::vector<Word> enumerate_irr_assoc(const RuleSource& rules, const Alphabet& alphabet, unsigned max_degree) {
  std::vector<Word> out;
  for (auto& w : enumerate_words(alphabet, max_degree))
    if (!rules.is_reducible(w)) out.push_back(std::move(w));
  return out;
}

std::vector<NAWord> enumerate_irr_lie(const RuleSource& rules, const Alphabet& alphabet, unsigned max_degree) {
  std::vector<NAWord> out;
  for (const auto& w : enumerate_alsw(alphabet, max_degree))
    if (!rules.is_reducible(w)) out.push_back(shirshov_bracket(w));
  return out;
}

} // namespace difflie
