// Command-line front end: exact computation in the groups F, F', D and
// their real-line models, plus the theorem-instance verification suites.
//
// Exit codes: 0 success / equal / all pass, 1 semantic negative
// (unequal, non-member, failed suite), 2 usage or parse errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "thompson/generators.hpp"
#include "thompson/morphisms.hpp"
#include "thompson/verify.hpp"
#include "thompson/words.hpp"

namespace {

using namespace thompson;

// Word text, or "@file" naming a serialized map.
PLMap load_operand(const std::string& arg, Domain empty_domain = Domain::Unit) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot open map file '" + arg.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return PLMap::deserialize(ss.str());
  }
  return realize(Word::parse(arg), empty_domain);
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("range must look like '-8..8'");
  try {
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("bad range '" + text + "'");
  }
}

void print_plot(const PLMap& m, const std::string& format, std::ostream& os) {
  if (format == "json") {
    nlohmann::json j;
    j["domain"] = (m.domain() == Domain::Unit) ? "unit" : "real";
    if (m.domain() == Domain::Real)
      j["tails"] = {m.left_shift(), m.right_shift()};
    auto& bps = j["breakpoints"] = nlohmann::json::array();
    for (const auto& p : m.points()) bps.push_back({p.x.str(), p.y.str()});
    os << j.dump(2) << "\n";
    return;
  }
  os << "# domain: " << (m.domain() == Domain::Unit ? "unit" : "real") << "\n";
  if (m.domain() == Domain::Real)
    os << "# tails: " << m.left_shift() << " " << m.right_shift() << "\n";
  for (const auto& p : m.points()) os << p.x.str() << "\t" << p.y.str() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Exact piecewise-linear computation in Thompson's groups"};
  app.require_subcommand(1);

  std::string word_a, word_b, point_text, class_name, format = "text", target;
  std::string range_text, out_path;
  long level = 5, shift = 0, param_k = 0, param_n = 1, param_m = 1;
  bool realize_flag = false;

  auto* eval = app.add_subcommand("eval", "evaluate a word or map file at a dyadic point");
  eval->add_option("word", word_a, "word ('' for the identity) or @mapfile")
      ->required();
  eval->add_option("point", point_text, "dyadic point, grammar p/2^k")->required();

  auto* eq = app.add_subcommand("eq", "compare two words or map files exactly");
  eq->add_option("a", word_a)->required();
  eq->add_option("b", word_b)->required();

  auto* mul = app.add_subcommand("mul", "multiply words (freely reduced)");
  mul->add_option("a", word_a)->required();
  mul->add_option("b", word_b)->required();
  mul->add_flag("--realize", realize_flag, "print the realized map instead");

  auto* inv = app.add_subcommand("inv", "invert a word");
  inv->add_option("word", word_a)->required();
  inv->add_flag("--realize", realize_flag, "print the realized map instead");

  auto* member = app.add_subcommand("member", "group membership of a realized word");
  member->add_option("word", word_a)->required();
  member->add_option("class", class_name, "F, Ft, Ftprime, D or Fab")->required();
  std::string fab_a = "-1", fab_b = "1";
  member->add_option("--a", fab_a, "left endpoint for Fab");
  member->add_option("--b", fab_b, "right endpoint for Fab");

  auto* support = app.add_subcommand("support", "support interval of a realized word");
  support->add_option("word", word_a)->required();

  auto* convert = app.add_subcommand("convert", "convert between generator families");
  convert->add_option("word", word_a)->required();
  convert->add_option("--to", target, "g, x or map")->required();
  convert->add_option("--n", level, "level for x -> g");

  auto* plot = app.add_subcommand("plot", "print the exact breakpoint table");
  plot->add_option("word", word_a)->required();
  plot->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

  auto* rho_cmd = app.add_subcommand("rho", "shift the indices of a G-alphabet word");
  rho_cmd->add_option("n", shift)->required();
  rho_cmd->add_option("word", word_a)->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "apply sigma_m to a word");
  sigma_cmd->add_option("m", param_m)->required();
  sigma_cmd->add_option("word", word_a)->required();
  sigma_cmd->add_flag("--realize", realize_flag,
                      "conjugate the realized map by h_{m,2m+2} and print it");

  auto* makeh = app.add_subcommand("make-h", "emit the conjugator h_{k,n}");
  makeh->add_option("k", param_k)->required();
  makeh->add_option("n", param_n)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify_cmd
      ->add_option("suite", suite,
                   "presentations, isomorphisms, remark-identity, lemma41, "
                   "h-sigma, cost-witnesses, noncommute or all")
      ->required();
  std::string x_n_text, g_window, gfin_range, remark_window, n_range;
  long k_flag = -1, window_flag = -1;
  int samples = 200;
  unsigned long long seed = 20240101;
  verify_cmd->add_option("--x-n", x_n_text, "x-relation window (single integer)");
  verify_cmd->add_option("--g-window", g_window, "G index window, e.g. -8..8");
  verify_cmd->add_option("--gfin-n", gfin_range, "finite-family levels, e.g. 4..8");
  verify_cmd->add_option("--remark-window", remark_window, "rG index window");
  verify_cmd->add_option("--n-range", n_range, "levels for the isomorphism suite");
  verify_cmd->add_option("--k", k_flag, "support bound (lemma41, h-sigma)");
  verify_cmd->add_option("--window", window_flag, "window (cost-witnesses, noncommute)");
  verify_cmd->add_option("--samples", samples, "sample count (lemma41)");
  verify_cmd->add_option("--seed", seed, "sampler seed");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));
  verify_cmd->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version succeed, usage errors exit 2
  }

  if (eval->parsed()) {
    const Dyadic t = Dyadic::parse(point_text);
    if (word_a.empty()) {
      std::cout << t.str() << "\n";
      return 0;
    }
    std::cout << load_operand(word_a)(t).str() << "\n";
    return 0;
  }

  if (eq->parsed()) {
    PLMap a, b;
    // An empty word adapts to the other side's domain.
    if (word_a.empty() || word_b.empty()) {
      const std::string& other = word_a.empty() ? word_b : word_a;
      const PLMap m = other.empty() ? PLMap() : load_operand(other);
      a = m;
      b = other.empty() ? PLMap() : PLMap::identity(m.domain());
      if (word_a.empty()) std::swap(a, b);
    } else {
      a = load_operand(word_a);
      b = load_operand(word_b);
      if (a.domain() != b.domain())
        throw std::invalid_argument("eq: operands live on different domains");
    }
    const bool equal = a == b;
    std::cout << (equal ? "equal" : "not equal") << "\n";
    return equal ? 0 : 1;
  }

  if (mul->parsed()) {
    const Word w = Word::parse(word_a) * Word::parse(word_b);
    if (realize_flag)
      std::cout << realize(w).serialize();
    else
      std::cout << w.str() << "\n";
    return 0;
  }

  if (inv->parsed()) {
    const Word w = Word::parse(word_a).inverse();
    if (realize_flag)
      std::cout << realize(w).serialize();
    else
      std::cout << w.str() << "\n";
    return 0;
  }

  if (member->parsed()) {
    const PLMap f = load_operand(word_a);
    bool verdict;
    if (class_name == "F")
      verdict = member_of(f, GroupClass::F);
    else if (class_name == "Ft")
      verdict = member_of(f, GroupClass::Ftilde);
    else if (class_name == "Ftprime")
      verdict = member_of(f, GroupClass::FtildePrime);
    else if (class_name == "D")
      verdict = member_of(f, GroupClass::D);
    else if (class_name == "Fab")
      verdict = member_of_interval(f, {Dyadic::parse(fab_a), Dyadic::parse(fab_b)});
    else
      throw std::invalid_argument("unknown class '" + class_name + "'");
    std::cout << (verdict ? "true" : "false") << "\n";
    return verdict ? 0 : 1;
  }

  if (support->parsed()) {
    const auto supp = load_operand(word_a).support();
    if (!supp)
      std::cout << "empty\n";
    else
      std::cout << "[" << supp->lo.str() << ", " << supp->hi.str() << "]\n";
    return 0;
  }

  if (convert->parsed()) {
    const Word w = Word::parse(word_a);
    if (target == "map") {
      std::cout << realize(w).serialize();
    } else if (target == "g") {
      std::cout << map_x_to_g(w, level).str() << "\n";
    } else if (target == "x") {
      std::cout << map_g_to_x(w).str() << "\n";
    } else {
      throw std::invalid_argument("unknown conversion target '" + target + "'");
    }
    return 0;
  }

  if (plot->parsed()) {
    print_plot(load_operand(word_a), format == "text" ? "tsv" : format, std::cout);
    return 0;
  }

  if (rho_cmd->parsed()) {
    std::cout << rho(shift, Word::parse(word_a)).str() << "\n";
    return 0;
  }

  if (sigma_cmd->parsed()) {
    if (realize_flag)
      std::cout << sigma(param_m, realize(Word::parse(word_a), Domain::Real)).serialize();
    else
      std::cout << sigma(param_m, Word::parse(word_a)).str() << "\n";
    return 0;
  }

  if (makeh->parsed()) {
    std::cout << make_h(param_k, param_n).serialize();
    return 0;
  }

  if (verify_cmd->parsed()) {
    verify::AllParams params;
    params.lemma41.samples = samples;
    params.lemma41.seed = seed;
    if (!x_n_text.empty()) params.presentations.x_n = std::stol(x_n_text);
    if (!g_window.empty())
      std::tie(params.presentations.g_lo, params.presentations.g_hi) =
          parse_range(g_window);
    if (!gfin_range.empty())
      std::tie(params.presentations.gfin_lo, params.presentations.gfin_hi) =
          parse_range(gfin_range);
    if (!remark_window.empty())
      std::tie(params.presentations.remark_lo, params.presentations.remark_hi) =
          parse_range(remark_window);
    if (!n_range.empty())
      std::tie(params.isomorphisms.n_lo, params.isomorphisms.n_hi) = parse_range(n_range);
    if (k_flag >= 0) {
      params.lemma41.k_max = k_flag;
      params.h_sigma.k_max = k_flag;
    }
    if (window_flag >= 0) {
      params.cost.window = window_flag;
      params.noncommute.window = window_flag;
    }

    verify::Report report;
    if (suite == "all") {
      report = verify::run_all(params);
    } else if (suite == "presentations") {
      report.checks.push_back(verify::check_presentations(params.presentations));
    } else if (suite == "isomorphisms") {
      report.checks.push_back(verify::check_isomorphisms(params.isomorphisms));
    } else if (suite == "remark-identity") {
      report.checks.push_back(verify::check_remark_identity());
    } else if (suite == "lemma41") {
      report.checks.push_back(verify::check_lemma41(params.lemma41));
    } else if (suite == "h-sigma") {
      report.checks.push_back(verify::check_h_and_sigma(params.h_sigma));
    } else if (suite == "cost-witnesses") {
      report.checks.push_back(verify::check_cost_witnesses(params.cost));
    } else if (suite == "noncommute") {
      report.checks.push_back(verify::check_noncommute_pattern(params.noncommute));
    } else {
      throw std::invalid_argument("unknown suite '" + suite + "'");
    }

    const std::string rendered = (format == "records") ? report.records() : report.text();
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
      out << rendered;
    }
    return report.all_ok() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
