// civan command-line front end: enumerate parameterized projective sets over
// small finite fields, compute vanishing ideals and reduced Groebner bases,
// classify the complete-intersection property, and compute evaluation-code
// parameters. All output is deterministic for a given invocation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "civan/classify.hpp"
#include "civan/errors.hpp"
#include "civan/io.hpp"

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;

// --input takes a file path, or inline JSON when the value starts with '{'.
std::string load_input(const std::string& arg) {
  const size_t first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open input file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string input;
  std::string order = "grevlex";
  int degree = 1;
  std::uint64_t budget_points = 10'000'000;
  std::uint64_t budget_codewords = 1'000'000;
  std::string format = "json";

  civan::Format fmt() const {
    return format == "text" ? civan::Format::Text : civan::Format::Json;
  }
  civan::MonomialOrder monomial_order() const {
    return civan::MonomialOrder{order == "lex" ? civan::OrderKind::Lex
                                               : civan::OrderKind::GRevLex};
  }
};

void add_common(CLI::App* cmd, Options& opt, bool with_order = false, bool with_degree = false) {
  cmd->add_option("--input", opt.input, "input file path or inline JSON")->required();
  cmd->add_option("--budget-points", opt.budget_points, "max q^n tuples to enumerate");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  if (with_order)
    cmd->add_option("--order", opt.order, "monomial order")
        ->check(CLI::IsMember({"grevlex", "lex"}));
  if (with_degree) {
    cmd->add_option("--degree", opt.degree, "evaluation degree d")->required();
    cmd->add_option("--budget-codewords", opt.budget_codewords,
                    "max q^k codewords to sweep for the minimum distance");
  }
}

int run(const std::string& command, const Options& opt) {
  using namespace civan;
  const std::string input = load_input(opt.input);

  if (command == "gb") {
    GeneratorsInput gens = parse_generators(input);
    GroebnerBasis basis =
        buchberger(gens.field, gens.nvars, gens.generators, opt.monomial_order());
    std::cout << render_groebner(basis, opt.fmt());
    return 0;
  }

  ParamSet ps = parse_param_set(input);
  if (command == "enumerate") {
    std::cout << render_points(enumerate_set(ps, opt.budget_points), opt.fmt());
    return 0;
  }
  if (command == "ideal") {
    PointSet x = enumerate_set(ps, opt.budget_points);
    std::cout << render_ideal(vanishing_ideal(x), opt.fmt());
    return 0;
  }
  if (command == "classify") {
    std::cout << render_classification(classify(ps, opt.budget_points), opt.fmt());
    return 0;
  }
  if (command == "code") {
    PointSet x = enumerate_set(ps, opt.budget_points);
    VanishingIdeal vi = vanishing_ideal(x);
    std::cout << render_code(code_parameters(x, vi, opt.degree, opt.budget_codewords),
                             opt.fmt());
    return 0;
  }
  if (command == "check") {
    CheckReport report;
    report.clutter_type = is_clutter_type(ps);
    PointSet x = enumerate_set(ps, opt.budget_points);
    report.monoid_closed = monoid_closed(x);
    report.binomial_generated = is_binomial_generated(vanishing_ideal(x));
    std::cout << render_check(report, opt.fmt());
    return 0;
  }
  throw std::invalid_argument("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vanishing ideals of monomially parameterized sets over finite fields"};
  app.require_subcommand(1);

  Options opt;
  add_common(app.add_subcommand("enumerate", "list the points of the parameterized set"), opt);
  add_common(app.add_subcommand("ideal", "vanishing ideal, reduced basis and Hilbert table"),
             opt);
  add_common(app.add_subcommand("classify",
                                "complete-intersection classification (clutter type only)"),
             opt);
  add_common(app.add_subcommand("gb", "reduced Groebner basis of explicit generators"), opt,
             /*with_order=*/true);
  add_common(app.add_subcommand("code", "evaluation-code parameters [n, k, dmin]"), opt,
             /*with_order=*/false, /*with_degree=*/true);
  add_common(app.add_subcommand("check",
                                "clutter-type, monoid-closure and binomial-ideal checks"),
             opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitPrecondition;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), opt);
  } catch (const civan::budget_error& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
