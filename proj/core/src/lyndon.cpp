#include "difflie/lyndon.hpp"

#include "difflie/error.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_map>

namespace difflie {

bool is_alsw(std::span<const Prime> letters) {
  const std::size_t n = letters.size();
  if (n == 0) return false;
  for (std::size_t k = 1; k < n; ++k) {
    // Compare letters against its rotation starting at k.
    for (std::size_t i = 0; i < n; ++i) {
      auto c = deglex_cmp(letters[i], letters[(i + k) % n]);
      if (c > 0) break;
      if (c < 0) return false;
      if (i + 1 == n) return false; // equal rotation: not primitive
    }
  }
  return true;
}

bool is_differential_alsw(const Word& u) {
  if (!is_alsw(u)) return false;
  for (const auto& p : u) {
    if (p.is_generator()) continue;
    for (const auto& a : p.args())
      if (!is_differential_alsw(a)) return false;
  }
  return true;
}

namespace {

struct TreeNode {
  std::size_t begin;
  std::size_t end;
  int left = -1;
  int right = -1;
};

int build_tree(std::span<const Prime> letters, std::size_t begin, std::size_t end,
               std::vector<TreeNode>& nodes) {
  const int id = static_cast<int>(nodes.size());
  nodes.push_back({begin, end});
  if (end - begin == 1) return id;
  std::size_t split = end;
  for (std::size_t s = begin + 1; s < end; ++s) {
    if (is_alsw(letters.subspan(s, end - s))) {
      split = s;
      break;
    }
  }
  if (split == end) throw Error("word has no proper LS suffix; not an LS word");
  const int l = build_tree(letters, begin, split, nodes);
  const int r = build_tree(letters, split, end, nodes);
  nodes[static_cast<std::size_t>(id)].left = l;
  nodes[static_cast<std::size_t>(id)].right = r;
  return id;
}

NAWord letter_bracket(const Prime& p) {
  if (p.is_generator()) return NAWord::generator(p.generator_id(), p.d_power());
  std::vector<NAWord> args;
  args.reserve(p.args().size());
  for (const auto& a : p.args()) args.push_back(shirshov_bracket(a));
  return NAWord::apply(p.op(), std::move(args), p.d_power());
}

using Override = std::function<std::optional<NAWord>(const TreeNode&)>;

NAWord tree_to_naword(const std::vector<TreeNode>& nodes, int id, std::span<const Prime> letters,
                      const Override& override_node) {
  const TreeNode& node = nodes[static_cast<std::size_t>(id)];
  if (override_node)
    if (auto replaced = override_node(node)) return *replaced;
  if (node.left < 0) return letter_bracket(letters[node.begin]);
  return NAWord::bracket(tree_to_naword(nodes, node.left, letters, override_node),
                         tree_to_naword(nodes, node.right, letters, override_node));
}

} // namespace

NAWord shirshov_bracket(const Word& u) {
  if (!is_alsw(u)) throw Error("shirshov_bracket: input is not a Lyndon-Shirshov word");
  std::span<const Prime> letters(u.primes());
  std::vector<TreeNode> nodes;
  const int root = build_tree(letters, 0, letters.size(), nodes);
  return tree_to_naword(nodes, root, letters, nullptr);
}

std::vector<Word> lyndon_factorization(const Word& c) {
  std::vector<Word> factors;
  std::span<const Prime> rest(c.primes());
  while (!rest.empty()) {
    std::size_t take = 1;
    for (std::size_t len = rest.size(); len > 1; --len) {
      if (is_alsw(rest.first(len))) {
        take = len;
        break;
      }
    }
    factors.emplace_back(std::vector<Prime>(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(take)));
    rest = rest.subspan(take);
  }
  return factors;
}

namespace {

// LS words over `letters` (sorted descending) whose degree lies in
// [min_degree, max_degree].
void lyndon_dfs(std::span<const Prime> letters, unsigned min_degree, unsigned max_degree,
                std::vector<Word>& out) {
  std::vector<Prime> seq;
  auto rec = [&](auto&& self, std::size_t first, unsigned degree) -> void {
    if (degree >= min_degree && is_alsw(seq)) out.emplace_back(seq);
    for (std::size_t i = first; i < letters.size(); ++i) {
      if (degree + letters[i].degree() > max_degree) continue;
      seq.push_back(letters[i]);
      self(self, first, degree + letters[i].degree());
      seq.pop_back();
    }
  };
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].degree() > max_degree) continue;
    seq = {letters[i]};
    rec(rec, i, letters[i].degree());
  }
}

void sort_descending(std::vector<Prime>& letters) {
  std::sort(letters.begin(), letters.end(),
            [](const Prime& a, const Prime& b) { return deglex_cmp(a, b) > 0; });
}

} // namespace

std::vector<Word> enumerate_lyndon(std::span<const Prime> letters, unsigned max_degree) {
  std::vector<Prime> sorted(letters.begin(), letters.end());
  sort_descending(sorted);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Word> out;
  lyndon_dfs(sorted, 1, max_degree, out);
  std::sort(out.begin(), out.end(), DeglexAscending{});
  return out;
}

std::vector<Word> enumerate_alsw_stratum(const Alphabet& alphabet, unsigned max_degree, unsigned depth) {
  // words_by_degree[d]: words of degree d with their operator nesting depth.
  std::vector<std::vector<std::pair<Word, unsigned>>> words_by_degree(max_degree + 1);
  std::vector<std::pair<Prime, unsigned>> letters;

  for (unsigned d = 1; d <= max_degree; ++d) {
    // Letters of degree d.
    for (GeneratorId g = 0; g < alphabet.generator_count(); ++g)
      letters.emplace_back(Prime::generator(g, d - 1), 0);
    if (depth > 0) {
      for (OperatorId op = 0; op < alphabet.operator_count(); ++op) {
        const unsigned m = alphabet.arity(op);
        // d = i + 1 + sum(arg degrees), each argument of degree >= 1.
        for (unsigned i = 0; i + 1 + m <= d; ++i) {
          const unsigned budget = d - 1 - i;
          std::vector<Word> args(m);
          auto rec = [&](auto&& self, unsigned k, unsigned remaining, unsigned arg_depth) -> void {
            if (k == m) {
              if (remaining == 0) letters.emplace_back(Prime::apply(op, args, i), arg_depth + 1);
              return;
            }
            const unsigned slots_after = m - k - 1;
            for (unsigned dk = 1; dk + slots_after <= remaining; ++dk) {
              for (const auto& [w, wd] : words_by_degree[dk]) {
                if (wd + 1 > depth) continue;
                args[k] = w;
                self(self, k + 1, remaining - dk, std::max(arg_depth, wd));
              }
            }
          };
          rec(rec, 0, budget, 0);
        }
      }
    }
    // LS words of degree exactly d over all letters so far.
    std::vector<Prime> current;
    current.reserve(letters.size());
    for (const auto& [p, pd] : letters) current.push_back(p);
    sort_descending(current);
    std::vector<Word> found;
    lyndon_dfs(current, d, d, found);
    std::unordered_map<Prime, unsigned, PrimeHash> letter_depth;
    for (const auto& [p, pd] : letters) letter_depth.emplace(p, pd);
    for (auto& w : found) {
      unsigned wd = 0;
      for (const auto& p : w) wd = std::max(wd, letter_depth.at(p));
      words_by_degree[d].emplace_back(std::move(w), wd);
    }
  }

  std::vector<Word> out;
  for (auto& bucket : words_by_degree)
    for (auto& [w, wd] : bucket) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), DeglexAscending{});
  return out;
}

std::vector<Word> enumerate_alsw(const Alphabet& alphabet, unsigned max_degree) {
  std::vector<Word> previous = enumerate_alsw_stratum(alphabet, max_degree, 0);
  for (unsigned depth = 1;; ++depth) {
    std::vector<Word> current = enumerate_alsw_stratum(alphabet, max_degree, depth);
    if (current.size() == previous.size()) return current;
    previous = std::move(current);
  }
}

namespace {

NAWord build_special(const Context& pi, std::size_t level, std::span<const Prime> seq, const Word& v) {
  const std::size_t pos = pi.levels()[level].left.size();
  std::vector<TreeNode> nodes;
  const int root = build_tree(seq, 0, seq.size(), nodes);

  if (level == pi.depth()) {
    const std::size_t v_end = pos + v.breadth();
    // Smallest subtree starting at v's first letter that covers all of v.
    const TreeNode* target = nullptr;
    for (const auto& node : nodes) {
      if (node.begin != pos || node.end < v_end) continue;
      if (!target || node.end < target->end) target = &node;
    }
    if (!target) throw Error("special_bracket: no subtree of the form [vc]");
    const TreeNode chosen = *target;
    Override replace = [&](const TreeNode& node) -> std::optional<NAWord> {
      if (node.begin != chosen.begin || node.end != chosen.end) return std::nullopt;
      NAWord out = NAWord::hole();
      if (chosen.end > v_end) {
        Word c(std::vector<Prime>(seq.begin() + static_cast<std::ptrdiff_t>(v_end),
                                  seq.begin() + static_cast<std::ptrdiff_t>(chosen.end)));
        for (const auto& ci : lyndon_factorization(c)) out = NAWord::bracket(out, shirshov_bracket(ci));
      }
      return out;
    };
    return tree_to_naword(nodes, root, seq, replace);
  }

  const Context::Enclosure& e = pi.enclosures()[level];
  const Prime& host = seq[pos];
  const std::size_t arg_index = e.before.size();
  Override replace = [&](const TreeNode& node) -> std::optional<NAWord> {
    if (node.left >= 0 || node.begin != pos) return std::nullopt;
    std::vector<NAWord> args;
    for (std::size_t a = 0; a < host.args().size(); ++a) {
      if (a == arg_index) {
        args.push_back(build_special(pi, level + 1, std::span<const Prime>(host.args()[a].primes()), v));
      } else {
        args.push_back(shirshov_bracket(host.args()[a]));
      }
    }
    return NAWord::apply(host.op(), std::move(args), host.d_power());
  };
  return tree_to_naword(nodes, root, seq, replace);
}

NAWord fill_hole(const NAWord& t, const NAWord& fill) {
  switch (t.kind()) {
  case NAWord::Kind::hole:
    return fill;
  case NAWord::Kind::bracket:
    if (!t.contains_hole()) return t;
    return NAWord::bracket(fill_hole(t.left(), fill), fill_hole(t.right(), fill));
  case NAWord::Kind::leaf:
    break;
  }
  if (!t.contains_hole()) return t;
  std::vector<NAWord> args;
  for (const auto& a : t.args()) args.push_back(fill_hole(a, fill));
  return NAWord::apply(t.op(), std::move(args), t.d_power());
}

} // namespace

NAWord special_bracket_template(const Context& pi, const Word& v) {
  if (pi.hole_d_power() != 0) throw Error("special_bracket: normalize the context first");
  const Word w = substitute(pi, v);
  if (!is_differential_alsw(v)) throw Error("special_bracket: v is not an LS word");
  if (!is_differential_alsw(w)) throw Error("special_bracket: pi|_v is not an LS word");
  return build_special(pi, 0, std::span<const Prime>(w.primes()), v);
}

SpecialBracket special_bracket(const Context& pi, const Word& v) {
  NAWord templ = special_bracket_template(pi, v);
  NAWord bracketing = fill_hole(templ, shirshov_bracket(v));
  Poly expansion = lie_expand(bracketing);
  const Word w = substitute(pi, v);
  if (expansion.is_zero() || !(expansion.leading_word() == w) || expansion.leading_coefficient() != 1)
    throw Error("special_bracket: leading term certificate failed");
  return {std::move(templ), std::move(bracketing), std::move(expansion)};
}

} // namespace difflie
