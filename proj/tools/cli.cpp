#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "onsager/expr.hpp"
#include "onsager/json_io.hpp"
#include "onsager/likeness.hpp"
#include "onsager/symmetry.hpp"
#include "onsager/tables.hpp"
#include "onsager/transitions.hpp"
#include "onsager/verify.hpp"

namespace onsager::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  bool ascii = false;

  std::string expr_text;

  std::string basis;
  std::string family;
  unsigned index = 0;
  std::string form = "closed";

  std::string from;
  std::string to;

  unsigned max_index = 8;
  std::string suite = "all";
  bool serial = false;

  std::string which;

  std::string label;
  std::string element;
  bool onsager = false;

  std::string perm;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::string show(const LoopElem& u, const Options& o) { return to_string(u, {o.ascii}); }

/// Element operands: a bracket expression in A and B, or a LoopElem JSON object.
LoopElem read_element(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return loop_from_json(json::parse(text));
  return evaluate(parse_expr(text));
}

Perm read_perm(const std::string& text) {
  for (BasicAut g : {BasicAut::rho, BasicAut::tau, BasicAut::mu, BasicAut::phi}) {
    if (text == name(g)) return Perm::of(g);
  }
  return Perm::parse(text);
}

int cmd_eval(const Options& o, std::ostream& out) {
  const LoopElem u = evaluate(parse_expr(o.expr_text));
  if (json_out(o)) {
    out << to_json(u).dump() << '\n';
  } else {
    out << show(u, o) << '\n';
  }
  return kOk;
}

int cmd_basis(const Options& o, std::ostream& out) {
  const BasisVector v(parse_basis(o.basis), parse_family(o.family), o.index);
  if (o.form == "recursive") {
    const Expr e = basis_elem_recursive(v);
    if (json_out(o)) {
      out << json{{"vector", v.str()}, {"expr", to_json(e)}}.dump() << '\n';
    } else {
      out << render(e) << '\n';
    }
    return kOk;
  }
  const LoopElem u = basis_elem(v);
  if (json_out(o)) {
    out << json{{"vector", v.str()}, {"value", to_json(u)}}.dump() << '\n';
  } else {
    out << show(u, o) << '\n';
  }
  return kOk;
}

int cmd_convert(const Options& o, std::ostream& out) {
  const BasisId src = parse_basis(o.from);
  const BasisId dst = parse_basis(o.to);
  const OCoords c = transition(src, dst, BasisVector(src, parse_family(o.family), o.index));
  if (json_out(o)) {
    out << to_json(c).dump() << '\n';
  } else {
    out << c.str() << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VerifyReport report =
      run_verify(o.max_index, parse_suite(o.suite), o.serial ? Exec::serial : Exec::parallel);
  if (json_out(o)) {
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
      checks.push_back({{"suite", std::string(suite_name(c.suite))},
                        {"name", c.name},
                        {"passed", c.passed},
                        {"failed", c.failed},
                        {"first_failure", c.first_failure}});
    }
    out << json{{"max_index", o.max_index},
                {"suite", o.suite},
                {"checks", checks},
                {"passed", report.passed()},
                {"failed", report.failed()}}
               .dump(2)
        << '\n';
  } else {
    for (const CheckResult& c : report.checks) {
      out << (c.failed == 0 ? "PASS " : "FAIL ") << std::left << std::setw(12)
          << suite_name(c.suite) << std::setw(36) << c.name << std::right << std::setw(6)
          << c.passed << " passed " << std::setw(4) << c.failed << " failed";
      if (c.failed != 0) out << "  first: " << c.first_failure;
      out << '\n';
    }
    out << "total: " << report.passed() << " passed, " << report.failed() << " failed\n";
  }
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.which == "bases") {
    if (json_out(o)) {
      out << basis_table_json().dump(2) << '\n';
    } else {
      out << render_basis_table(o.ascii);
    }
  } else {
    if (json_out(o)) {
      out << generator_table_json().dump(2) << '\n';
    } else {
      out << render_generator_table();
    }
  }
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const PathLabel label = PathLabel::parse(o.label);
  const LoopElem u = read_element(o.element);
  const PathParts parts = o.onsager ? decompose_onsager(label, u) : decompose_path(label, u);
  if (json_out(o)) {
    out << to_json(parts, label).dump() << '\n';
    return kOk;
  }
  out << "kh  X_" << label.kh().str() << ": " << show(parts.kh, o) << '\n'
      << "hi  X_" << label.hi().str() << ": " << show(parts.hi, o) << '\n'
      << "ij  X_" << label.ij().str() << ": " << show(parts.ij, o) << '\n';
  return kOk;
}

int cmd_apply(const Options& o, std::ostream& out) {
  const LoopElem u = apply_perm(read_perm(o.perm), read_element(o.element));
  if (json_out(o)) {
    out << to_json(u).dump() << '\n';
  } else {
    out << show(u, o) << '\n';
  }
  return kOk;
}

int cmd_coords(const Options& o, std::ostream& out) {
  const OCoords c = coords(read_element(o.element), parse_basis(o.basis));
  if (json_out(o)) {
    out << to_json(c).dump() << '\n';
  } else {
    out << c.str() << '\n';
  }
  return kOk;
}

/// "-A/2 + B" would otherwise be read as a short flag. Leading minus signs of
/// expression operands are rewritten to U+2212, which the expression parser
/// accepts as a minus.
std::vector<std::string> protect_negative_operands(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) {
    std::string a = argv[k];
    if (a.size() > 1 && a[0] == '-' &&
        std::string_view("AB[( 0123456789").find(a[1]) != std::string_view::npos) {
      a.replace(0, 1, "\u2212");
    }
    args.push_back(std::move(a));
  }
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in the Onsager algebra and its four bases", "onsager"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--ascii", o.ascii, "Write the tensor symbol as (x)");

  auto* eval = app.add_subcommand("eval", "Evaluate a bracket expression in A and B");
  eval->add_option("expr", o.expr_text, "Expression, e.g. \"[A,[A,B]] - 2A\"")->required();

  auto* basis = app.add_subcommand("basis", "Show a basis vector");
  basis->add_option("basis", o.basis, "uu, dd, du, ud or a label such as 0312")->required();
  basis->add_option("family", o.family, "A, B or psi")->required();
  basis->add_option("index", o.index, "Index (psi starts at 1)")->required();
  basis->add_option("--form", o.form, "closed or recursive")
      ->check(CLI::IsMember({"closed", "recursive"}));

  auto* convert = app.add_subcommand(
      "convert", "Expand the --to basis vector with the given family and index over --from");
  convert->add_option("--from", o.from, "Source basis")->required();
  convert->add_option("--to", o.to, "Target basis")->required();
  convert->add_option("family", o.family, "A, B or psi")->required();
  convert->add_option("index", o.index, "Index")->required();

  auto* verify = app.add_subcommand("verify", "Run the invariant checks");
  verify->add_option("--max-index", o.max_index, "Largest index exercised");
  verify->add_option("--suite", o.suite, "all, ring, loop, symmetry, likeness, bases, transitions, expr")
      ->check(CLI::IsMember(
          {"all", "ring", "loop", "symmetry", "likeness", "bases", "transitions", "expr"}));
  verify->add_flag("--serial", o.serial, "Run checks one after another");

  auto* table = app.add_subcommand("table", "Print the basis or generator summary table");
  table->add_option("which", o.which, "bases or generators")
      ->required()
      ->check(CLI::IsMember({"bases", "generators"}));

  auto* decompose = app.add_subcommand("decompose", "Split an element along a path label");
  decompose->add_option("label", o.label, "Path label khij, e.g. 0312")->required();
  decompose->add_option("element", o.element, "Expression in A, B or LoopElem JSON")->required();
  decompose->add_flag("--onsager", o.onsager, "Use the decomposition of O (four labels only)");

  auto* apply = app.add_subcommand("apply", "Apply an S4 automorphism");
  apply->add_option("perm", o.perm, "rho, tau, mu, phi or cycle notation such as (123)")
      ->required();
  apply->add_option("element", o.element, "Expression in A, B or LoopElem JSON")->required();

  auto* coords_cmd = app.add_subcommand("coords", "Coordinates of an element of O in a basis");
  coords_cmd->add_option("basis", o.basis, "Basis")->required();
  coords_cmd->add_option("element", o.element, "Expression in A, B or LoopElem JSON")->required();

  try {
    auto args = protect_negative_operands(argc, argv);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*basis) return cmd_basis(o, out);
    if (*convert) return cmd_convert(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*table) return cmd_table(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*apply) return cmd_apply(o, out);
    if (*coords_cmd) return cmd_coords(o, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace onsager::cli
