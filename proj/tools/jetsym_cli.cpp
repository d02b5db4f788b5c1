#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "jetsym/checks.hpp"
#include "jetsym/colemap.hpp"
#include "jetsym/detsolve.hpp"
#include "jetsym/errors.hpp"
#include "jetsym/family.hpp"
#include "jetsym/serialize.hpp"

namespace {

using namespace jetsym;

// Exit codes are part of the scripting contract.
constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kResourceCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kPass;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + out_path + " for writing");
  f << text;
  return kPass;
}

int cmd_gen(const std::string& eq_name, int max_order, const std::string& format, const std::string& out) {
  const auto& eq = EvolutionEquation::from_name(eq_name);
  const int min_order = eq.kind() == EquationKind::Burgers ? 1 : 0;
  if (max_order < min_order)
    throw UsageError("--max-order must be at least " + std::to_string(min_order) + " for " + eq_name);
  const SymmetryTableDoc doc = make_table(eq, max_order);
  if (format == "json") return emit(to_json(doc), out);
  if (format == "latex") return emit(to_latex(doc), out);
  return emit(to_text(doc), out);
}

int cmd_verify(const std::string& suite, int max_order) {
  if (max_order < 1) throw UsageError("--max-order must be at least 1");
  std::size_t checks = 0, failed = 0;
  for (const auto& report : run_suite(suite, max_order)) {
    std::cout << "== " << report.suite << "\n";
    for (const auto& c : report.checks) {
      std::cout << format_check(c) << "\n";
      if (c.informational) continue;
      ++checks;
      failed += c.pass() ? 0 : 1;
    }
  }
  std::cout << "summary: " << checks - failed << "/" << checks << " checks passed\n";
  std::cout << (failed == 0 ? "PASS" : "FAIL") << "\n";
  return failed == 0 ? kPass : kCheckFailed;
}

int cmd_solve(int order, int jet_deg, int x_deg, int t_deg, const std::string& format) {
  if (order < 1) throw UsageError("--order must be at least 1");
  SolveOptions options;
  Ansatz a = Ansatz::with_default_bounds(EvolutionEquation::burgers(), order);
  if (jet_deg >= 0) a.jet_degree = jet_deg;
  if (x_deg >= 0) a.x_degree = x_deg;
  if (t_deg >= 0) a.t_degree = t_deg;
  options.bounds = a;
  const SolveReport r = solve_symmetries(EvolutionEquation::burgers(), order, options);
  if (format == "json") {
    std::cout << to_json(r);
  } else {
    const Notation n = EvolutionEquation::burgers().notation();
    std::cout << "order " << r.order << "\nansatz " << r.ansatz_size << " monomials, " << r.constraint_count
              << " constraints\ndimension " << r.dimension << "\nspan " << to_string(r.span) << "\n";
    for (const auto& b : r.basis) std::cout << "  " << to_text(b.body, n) << "\n";
  }
  return r.span == SpanVerdict::Match ? kPass : kCheckFailed;
}

int cmd_map(const std::string& from, const std::string& to, int k, int l, bool z, bool normalized) {
  if (from != "heat" || (to != "burgers" && to != "potburgers"))
    throw UsageError("supported maps: --from heat --to potburgers|burgers");
  if (k < 0 || l < 0) throw UsageError("--k and --l must be non-negative");
  const Notation un = EvolutionEquation::heat().notation();
  const Notation wn = EvolutionEquation::potential_burgers().notation();
  const Notation vn = EvolutionEquation::burgers().notation();

  const Characteristic heat = q_char(z ? Family::HeatZ : Family::HeatQ, k, l);
  std::cout << "heat:      " << to_text(heat.body, un) << "\n";
  const Characteristic pot = heat_to_potential(heat);
  std::cout << "potential: " << to_text(pot.body, wn) << "\n";
  if (to == "potburgers") return kPass;
  try {
    const Characteristic image = potential_to_burgers(pot, normalized);
    std::cout << "burgers:   " << to_text(image.body, vn) << (normalized ? "  (normalized)" : "  (= -2 BURGERS_Q)") << "\n";
    if (image.body.is_zero()) std::cout << "KERNEL: image is zero\n";
  } catch (const NotProjectable& ex) {
    std::cout << "NotProjectable: " << ex.what() << "\n";
    return kCheckFailed;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized symmetries of the heat, potential Burgers and Burgers equations"};
  app.require_subcommand(1);

  std::string eq_name = "burgers", format = "text", out;
  int max_order = 2;
  auto* gen = app.add_subcommand("gen", "Emit a table of family members with k+l <= N");
  gen->add_option("--eq", eq_name)->check(CLI::IsMember({"heat", "potburgers", "burgers"}));
  gen->add_option("--max-order", max_order)->required();
  gen->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));
  gen->add_option("--out", out, "Write to a file instead of stdout");

  std::string suite = "all";
  int verify_order = 3;
  auto* verify = app.add_subcommand("verify", "Run exact verification suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suites));
  verify->add_option("--max-order", verify_order);

  int order = 2, jet_deg = -1, x_deg = -1, t_deg = -1;
  std::string solve_format = "text";
  auto* solve = app.add_subcommand("solve", "Solve the bounded determining equations for Burgers");
  solve->add_option("--order", order)->required();
  solve->add_option("--jet-deg", jet_deg, "Total jet degree bound (default: order)");
  solve->add_option("--x-deg", x_deg, "Degree bound in x (default: order)");
  solve->add_option("--t-deg", t_deg, "Degree bound in t (default: order)");
  solve->add_option("--format", solve_format)->check(CLI::IsMember({"json", "text"}));

  std::string from = "heat", to = "burgers";
  int k = 0, l = 0;
  bool z = false, normalized = false;
  auto* map = app.add_subcommand("map", "Push a heat family member through the Hopf-Cole chain");
  map->add_option("--from", from);
  map->add_option("--to", to);
  map->add_option("--k", k)->required();
  map->add_option("--l", l)->required();
  map->add_flag("--z", z, "Map the parameter family G^k D_x^l h instead");
  map->add_flag("--normalized", normalized, "Divide the Burgers image by -2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(eq_name, max_order, format, out);
    if (*verify) return cmd_verify(suite, verify_order);
    if (*solve) return cmd_solve(order, jet_deg, x_deg, t_deg, solve_format);
    if (*map) return cmd_map(from, to, k, l, z, normalized);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AnsatzTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
