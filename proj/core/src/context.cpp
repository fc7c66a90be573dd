#include "difflie/context.hpp"

#include "difflie/error.hpp"

namespace difflie {

Context::Context(unsigned hole_d_power) : levels_(1), hole_d_power_(hole_d_power) {}

Context::Context(std::vector<Level> levels, std::vector<Enclosure> enclosures, unsigned hole_d_power)
    : levels_(std::move(levels)), enclosures_(std::move(enclosures)), hole_d_power_(hole_d_power) {
  if (levels_.size() != enclosures_.size() + 1) throw Error("malformed context");
}

Context Context::without_hole_power() const {
  Context c = *this;
  c.hole_d_power_ = 0;
  return c;
}

unsigned Context::degree() const {
  unsigned d = hole_d_power_;
  for (const auto& level : levels_) {
    for (const auto& p : level.left) d += p.degree();
    for (const auto& p : level.right) d += p.degree();
  }
  for (const auto& e : enclosures_) {
    d += e.d_power + 1;
    for (const auto& w : e.before) d += w.degree();
    for (const auto& w : e.after) d += w.degree();
  }
  return d;
}

Word Context::fill(std::vector<Prime> content) const {
  if (hole_d_power_ > 0) {
    if (content.size() != 1) throw Error("a D-wrapped hole needs a single prime");
    content[0] = content[0].derived(hole_d_power_);
  }
  std::vector<Prime> inner = std::move(content);
  for (std::size_t k = levels_.size(); k-- > 0;) {
    const Level& level = levels_[k];
    std::vector<Prime> seq;
    seq.reserve(level.left.size() + inner.size() + level.right.size());
    seq.insert(seq.end(), level.left.begin(), level.left.end());
    seq.insert(seq.end(), std::make_move_iterator(inner.begin()), std::make_move_iterator(inner.end()));
    seq.insert(seq.end(), level.right.begin(), level.right.end());
    if (k == 0) return Word(std::move(seq));
    const Enclosure& e = enclosures_[k - 1];
    std::vector<Word> args = e.before;
    args.emplace_back(std::move(seq));
    args.insert(args.end(), e.after.begin(), e.after.end());
    inner = {Prime::apply(e.op, std::move(args), e.d_power)};
  }
  return {};
}

Word substitute(const Context& pi, const Word& u) {
  if (u.empty()) throw Error("cannot substitute the empty word");
  if (pi.hole_d_power() > 0 && u.breadth() != 1)
    throw Error("D-wrapped hole with a multi-prime word yields a polynomial");
  return pi.fill(u.primes());
}

namespace {

struct OccurrenceSearch {
  const Word& pattern;
  std::vector<Context::Level> levels;
  std::vector<Context::Enclosure> enclosures;
  std::vector<Context> found;

  void scan(const std::vector<Prime>& seq) {
    const std::size_t n = seq.size();
    const std::size_t m = pattern.breadth();
    for (std::size_t i = 0; i < n; ++i) {
      // Runs starting at i.
      if (i + m <= n) {
        bool match = true;
        for (std::size_t j = 0; j < m && match; ++j) match = seq[i + j] == pattern[j];
        if (match) emit(seq, i, m, 0);
      }
      // D-wrapped single-prime match.
      if (m == 1 && seq[i].d_power() > pattern[0].d_power() && seq[i].same_head(pattern[0]))
        emit(seq, i, 1, seq[i].d_power() - pattern[0].d_power());
      // Descend into arguments.
      if (!seq[i].is_generator()) {
        const auto& args = seq[i].args();
        for (std::size_t a = 0; a < args.size(); ++a) {
          levels.push_back({std::vector<Prime>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i)),
                            std::vector<Prime>(seq.begin() + static_cast<std::ptrdiff_t>(i + 1), seq.end())});
          enclosures.push_back({seq[i].d_power(), seq[i].op(),
                                std::vector<Word>(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(a)),
                                std::vector<Word>(args.begin() + static_cast<std::ptrdiff_t>(a + 1), args.end())});
          scan(args[a].primes());
          levels.pop_back();
          enclosures.pop_back();
        }
      }
    }
  }

  void emit(const std::vector<Prime>& seq, std::size_t start, std::size_t length, unsigned power) {
    auto all = levels;
    all.push_back({std::vector<Prime>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(start)),
                   std::vector<Prime>(seq.begin() + static_cast<std::ptrdiff_t>(start + length), seq.end())});
    found.emplace_back(std::move(all), enclosures, power);
  }
};

} // namespace

std::vector<Context> occurrences(const Word& w, const Word& p) {
  if (p.empty()) throw Error("empty pattern");
  OccurrenceSearch search{p, {}, {}, {}};
  search.scan(w.primes());
  return std::move(search.found);
}

Context SequenceWalker::context(const std::vector<Prime>& seq, std::size_t start, std::size_t length) const {
  auto levels = levels_;
  const auto at = [&](std::size_t k) { return seq.begin() + static_cast<std::ptrdiff_t>(k); };
  levels.push_back({{seq.begin(), at(start)}, {at(start + length), seq.end()}});
  return Context(std::move(levels), enclosures_, 0);
}

void SequenceWalker::push(const std::vector<Prime>& seq, std::size_t i, std::size_t arg) {
  const auto at = [&](std::size_t k) { return seq.begin() + static_cast<std::ptrdiff_t>(k); };
  levels_.push_back({{seq.begin(), at(i)}, {at(i + 1), seq.end()}});
  const auto& args = seq[i].args();
  const auto arg_at = [&](std::size_t k) { return args.begin() + static_cast<std::ptrdiff_t>(k); };
  enclosures_.push_back({seq[i].d_power(), seq[i].op(), {args.begin(), arg_at(arg)}, {arg_at(arg + 1), args.end()}});
}

void SequenceWalker::pop() {
  levels_.pop_back();
  enclosures_.pop_back();
}

} // namespace difflie
