#include "difflie/cli.hpp"

#include "difflie/drbl.hpp"
#include "difflie/error.hpp"
#include "difflie/lyndon.hpp"
#include "difflie/oracle.hpp"
#include "difflie/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <regex>

namespace difflie::cli {

namespace {

unsigned generators_in(const std::string& text) {
  static const std::regex name("x([0-9]+)");
  unsigned most = 1;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), name); it != std::sregex_iterator(); ++it)
    most = std::max(most, static_cast<unsigned>(std::stoul((*it)[1].str())));
  return most;
}

Rational lambda_of(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw Error("--lambda: " + std::string(e.what()));
  }
}

std::map<unsigned, std::vector<NAWord>> by_degree(const std::vector<NAWord>& basis) {
  std::map<unsigned, std::vector<NAWord>> out;
  for (const auto& t : basis) out[t.underlying_word().degree()].push_back(t);
  return out;
}

struct Options {
  std::string lambda = "0";
  std::string mode = "lie";
  std::string system = "drbl";
  unsigned max_degree = 0;
  unsigned gens = 0;
  unsigned slack = 0;
  bool json = false;
  bool verbose = false;
  std::string expr;
};

int nf(const Options& o, std::ostream& out) {
  const unsigned gens = o.gens ? o.gens : generators_in(o.expr);
  DrblSystem sys(Alphabet::numbered(gens), lambda_of(o.lambda), o.max_degree, o.system == "drbl");
  Poly p = parse_poly(o.expr, sys.alphabet());
  if (!p.is_zero() && p.degree() > o.max_degree)
    throw Error("expression has degree " + std::to_string(p.degree()) + ", above --max-deg " +
                     std::to_string(o.max_degree));
  if (o.mode == "lie") {
    out << format(drbl_nf(p, sys), sys.alphabet()) << "\n";
  } else {
    out << format(reduce(p, sys, Mode::assoc), sys.alphabet()) << "\n";
  }
  return 0;
}

int basis(const Options& o, std::ostream& out) {
  const Rational lambda = lambda_of(o.lambda);
  const Alphabet alphabet = Alphabet::numbered(o.gens ? o.gens : 1);
  const auto groups = by_degree(enumerate_basis(alphabet, o.max_degree));
  if (o.json) {
    nlohmann::ordered_json doc;
    doc["lambda"] = to_string(lambda);
    doc["degrees"] = nlohmann::ordered_json::array();
    for (unsigned d = 1; d <= o.max_degree; ++d) {
      nlohmann::ordered_json entry;
      entry["degree"] = d;
      auto it = groups.find(d);
      entry["count"] = it == groups.end() ? 0 : it->second.size();
      entry["elements"] = nlohmann::ordered_json::array();
      if (it != groups.end())
        for (const auto& t : it->second) entry["elements"].push_back(format(t, alphabet));
      doc["degrees"].push_back(std::move(entry));
    }
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "lambda " << to_string(lambda) << "\n";
  for (unsigned d = 1; d <= o.max_degree; ++d) {
    auto it = groups.find(d);
    out << "degree " << d << ": " << (it == groups.end() ? 0 : it->second.size()) << "\n";
    if (it != groups.end())
      for (const auto& t : it->second) out << "  " << format(t, alphabet) << "\n";
  }
  return 0;
}

int lyndon(const Options& o, std::ostream& out) {
  const Alphabet alphabet = Alphabet::numbered(o.gens ? o.gens : 2);
  std::vector<Prime> letters;
  for (GeneratorId x = 0; x < alphabet.generator_count(); ++x) letters.push_back(Prime::generator(x));
  auto words = enumerate_lyndon(letters, o.max_degree);
  std::stable_sort(words.begin(), words.end(), DeglexAscending{});
  std::map<unsigned, std::size_t> counts;
  for (const auto& w : words) {
    ++counts[w.degree()];
    out << format(w, alphabet) << "  " << format(shirshov_bracket(w), alphabet) << "\n";
  }
  for (const auto& [n, c] : counts) out << "length " << n << ": " << c << "\n";
  return 0;
}

int bracket(const Options& o, std::ostream& out) {
  const Alphabet alphabet = Alphabet::numbered(o.gens ? o.gens : generators_in(o.expr));
  Word w = parse_word(o.expr, alphabet);
  if (!is_differential_alsw(w)) throw Error("not a Lyndon-Shirshov word: " + format(w, alphabet));
  out << format(shirshov_bracket(w), alphabet) << "\n";
  return 0;
}

const char* kind_name(Ambiguity::Kind k) { return k == Ambiguity::Kind::inclusion ? "inclusion" : "intersection"; }

int check_gsb(const Options& o, std::ostream& out) {
  const Rational lambda = lambda_of(o.lambda);
  DrblSystem sys(Alphabet::numbered(o.gens ? o.gens : 2), lambda, o.max_degree, o.system == "drbl");
  RuleSet rules(instantiate_rules(sys, o.max_degree), lambda, o.max_degree);
  const Mode mode = o.mode == "lie" ? Mode::lie : Mode::assoc;
  GsbReport report = is_gsb(rules, o.max_degree, mode);
  const Alphabet& a = sys.alphabet();
  out << "system " << o.system << ", lambda " << to_string(lambda) << ", generators " << a.generator_count()
      << ", degree <= " << o.max_degree << ", mode " << o.mode << "\n";
  out << "rules " << rules.rules().size() << ", lifts " << rules.lifted().size() << "\n";
  out << "ambiguities " << report.ambiguities() << " (intersection " << report.intersections << ", inclusion "
      << report.inclusions << ")\n";
  for (const auto& f : report.failures) {
    out << "not certified: " << kind_name(f.ambiguity.kind) << " at " << format(f.ambiguity.w, a) << "\n";
    if (o.verbose) out << "  " << f.note << ": " << format(f.residue, a) << "\n";
  }
  out << (report.pass() ? "certified" : "not certified: " + std::to_string(report.failures.size())) << "\n";
  return report.pass() ? 0 : 1;
}

int oracle_dim(const Options& o, std::ostream& out) {
  const Rational lambda = lambda_of(o.lambda);
  const Alphabet alphabet = Alphabet::numbered(o.gens ? o.gens : 1);
  const auto relations = o.system == "none" ? oracle::Relations::none
                         : o.system == "s1" ? oracle::Relations::section
                                            : oracle::Relations::drbl;
  oracle::QuotientOptions options;
  options.slack = o.slack;
  const auto dims = oracle::quotient_dim({alphabet, lambda}, relations, o.max_degree, options);
  if (relations != oracle::Relations::drbl) {
    for (unsigned d = 1; d <= o.max_degree; ++d) out << "degree " << d << ": " << dims[d - 1] << "\n";
    return 0;
  }
  const auto groups = by_degree(enumerate_basis(alphabet, o.max_degree));
  bool agree = true;
  for (unsigned d = 1; d <= o.max_degree; ++d) {
    auto it = groups.find(d);
    const std::size_t count = it == groups.end() ? 0 : it->second.size();
    agree = agree && count == dims[d - 1];
    out << "degree " << d << ": oracle " << dims[d - 1] << ", basis " << count << "\n";
  }
  out << (agree ? "agree" : "differ") << "\n";
  return agree ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal forms and bases for free lambda-differential Lie Rota-Baxter algebras", "difflie"};
  app.require_subcommand(1);
  Options o;

  auto lambda_opt = [&](CLI::App* c) { c->add_option("--lambda", o.lambda, "weight, an exact rational p/q"); };
  auto max_deg = [&](CLI::App* c) {
    c->add_option("--max-deg", o.max_degree, "degree bound")->required()->check(CLI::Range(1u, 64u));
  };
  auto gens = [&](CLI::App* c, const std::string& help) {
    c->add_option("--gens", o.gens, help)->check(CLI::Range(1u, 26u));
  };

  auto* nf_cmd = app.add_subcommand("nf", "normal form of a term");
  lambda_opt(nf_cmd);
  max_deg(nf_cmd);
  nf_cmd->add_option("--mode", o.mode, "lie or assoc")->check(CLI::IsMember({"lie", "assoc"}));
  nf_cmd->add_option("--system", o.system, "drbl or s1")->check(CLI::IsMember({"drbl", "s1"}));
  gens(nf_cmd, "number of generators (default: highest xN in EXPR)");
  nf_cmd->add_option("EXPR", o.expr, "term")->required();

  auto* basis_cmd = app.add_subcommand("basis", "enumerate the linear basis by degree");
  gens(basis_cmd, "number of generators (default 1)");
  lambda_opt(basis_cmd);
  max_deg(basis_cmd);
  basis_cmd->add_flag("--json", o.json, "JSON output");

  auto* lyndon_cmd = app.add_subcommand("lyndon", "Lyndon-Shirshov words on generators");
  gens(lyndon_cmd, "number of generators (default 2)");
  max_deg(lyndon_cmd);

  auto* bracket_cmd = app.add_subcommand("bracket", "standard bracketing of an LS word");
  gens(bracket_cmd, "number of generators (default: highest xN in WORD)");
  bracket_cmd->add_option("WORD", o.expr, "word")->required();

  auto* gsb_cmd = app.add_subcommand("check-gsb", "reduce every composition up to a degree");
  gsb_cmd->add_option("--system", o.system, "drbl or s1")->check(CLI::IsMember({"drbl", "s1"}));
  lambda_opt(gsb_cmd);
  max_deg(gsb_cmd);
  gens(gsb_cmd, "number of generators (default 2)");
  gsb_cmd->add_option("--mode", o.mode, "lie or assoc")->check(CLI::IsMember({"lie", "assoc"}));
  gsb_cmd->add_flag("--verbose", o.verbose, "print residues");

  auto* oracle_cmd = app.add_subcommand("oracle-dim", "quotient dimensions by exact elimination");
  gens(oracle_cmd, "number of generators (default 1)");
  lambda_opt(oracle_cmd);
  max_deg(oracle_cmd);
  oracle_cmd->add_option("--system", o.system, "drbl, s1 or none")->check(CLI::IsMember({"drbl", "s1", "none"}));
  oracle_cmd->add_option("--slack", o.slack, "extra degrees for ideal generation");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (nf_cmd->parsed()) return nf(o, out);
    if (basis_cmd->parsed()) return basis(o, out);
    if (lyndon_cmd->parsed()) return lyndon(o, out);
    if (bracket_cmd->parsed()) return bracket(o, out);
    if (gsb_cmd->parsed()) return check_gsb(o, out);
    if (oracle_cmd->parsed()) return oracle_dim(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace difflie::cli
