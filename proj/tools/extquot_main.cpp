#include <CLI11.hpp>

#include "extquot/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace extquot::cli;
  CLI::App app{"Extended quotients of tori by finite monomial groups"};
  app.require_subcommand(1);
  Options o;
  double tol = 0;

  auto add_tolerance = [&](CLI::App* c) {
    c->add_option("--tolerance", tol, "point comparison tolerance (default 1e-9, or EXTQUOT_TOLERANCE)");
  };
  auto add_case = [&](CLI::App* c) {
    c->add_option("--case", o.case_kind, "gl, sl2 or g2")->required();
    c->add_option("--m", o.m, "GL block size m");
    c->add_option("--r", o.r, "GL number of blocks r");
    c->add_option("--q", o.q, "residue field cardinality q > 1");
    c->add_option("--t", o.t, "family parameter, re or re,im");
    c->add_option("--sweep", o.sweep, "t0:t1:steps");
    c->add_option("--samples", o.samples, "samples per component");
    c->add_option("--out", o.out, "output path (default stdout)");
    add_tolerance(c);
  };

  auto* decompose = app.add_subcommand("decompose", "component catalog of X//Gamma");
  decompose->add_option("--input", o.input, "setup JSON")->required();
  decompose->add_option("--out", o.out, "report path (default stdout)");
  add_tolerance(decompose);

  auto* family = app.add_subcommand("family", "sample pi_t on a Bernstein case and check X_t");
  add_case(family);
  family->add_option("--seed", o.seed, "sampling seed");
  family->add_option("--convention", o.convention, "cocharacter (default) or direct");

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of H*(X//Gamma)");
  poincare->add_option("--input", o.input, "setup JSON")->required();
  poincare->add_option("--out", o.out, "output path (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "grid brute-force check of the catalog");
  oracle->add_option("--input", o.input, "setup JSON")->required();
  oracle->add_option("--grid", o.grid, "roots of unity order N");
  oracle->add_option("--out", o.out, "also write a JSON census here");

  auto* plotdata = app.add_subcommand("plotdata", "CSV point clouds of X_t");
  add_case(plotdata);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  for (auto* sc : {decompose, family, poincare, oracle, plotdata})
    if (auto* opt = sc->get_option_no_throw("--tolerance"); opt && opt->count() > 0) o.tolerance = tol;
  if (o.tolerance && !(*o.tolerance > 0)) {
    std::cerr << "error: --tolerance must be positive\n";
    return kUsage;
  }

  if (*decompose) return cmd_decompose(o, std::cout, std::cerr);
  if (*family) return cmd_family(o, std::cout, std::cerr);
  if (*poincare) return cmd_poincare(o, std::cout, std::cerr);
  if (*oracle) return cmd_oracle(o, std::cout, std::cerr);
  return cmd_plotdata(o, std::cout, std::cerr);
}
