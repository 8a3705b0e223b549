#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qrm/reports.hpp"
#include "qrm/symmetry_poly.hpp"

using namespace qrm;

namespace {

void common_flags(CLI::App* s, RunConfig& c) {
  s->add_option("--out", c.out_dir, "output directory");
  s->add_option("--seed", c.seed, "random seed");
}

void spectral_flags(CLI::App* s, RunConfig& c) {
  s->add_option("--ell", c.ells, "bias values l")->delimiter(',');
  s->add_option("--delta", c.deltas, "Delta values")->delimiter(',');
  s->add_option("--g-lo", c.g_lo, "first g");
  s->add_option("--g-hi", c.g_hi, "last g");
  s->add_option("--g-step", c.g_step, "g step");
  s->add_option("--dim-fock", c.dim_fock, "Fock truncation per spin");
  s->add_option("--levels", c.n_levels, "number of levels");
  s->add_option("--residual-tol", c.residual_tol, "tolerance on |mu^2 - p(lambda)|");
}

int env_threads() {
  const char* v = std::getenv("QRMSYM_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end || n < 1 || n > 4096) throw UsageError(std::string("QRMSYM_THREADS must be a positive integer, got ") + v);
  return static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Rabi model hidden symmetry toolkit"};
  app.require_subcommand(1);
  RunConfig c;
  bool corrupt_p3 = false;

  auto* verify = app.add_subcommand("verify-all", "exact checks: divisibility, tables, operator identities, baselines");
  common_flags(verify, c);
  verify->add_option("--ell-max", c.ell_max, "largest l");
  verify->add_option("--n-max", c.n_max, "largest N");
  verify->add_flag("--corrupt-p3", corrupt_p3, "perturb the tabulated p_3 (fault injection)");

  auto* sw = app.add_subcommand("sweep", "joint spectrum, crossings and avoided crossings");
  common_flags(sw, c);
  spectral_flags(sw, c);
  sw->add_flag("--check-convergence", c.check_convergence, "repeat each spectrum at doubled truncation");

  auto* surf = app.add_subcommand("surface", "points of the spectral surface y^2 = p(x; g, Delta)");
  common_flags(surf, c);
  spectral_flags(surf, c);
  surf->add_option("--x-lo", c.x_lo);
  surf->add_option("--x-hi", c.x_hi);
  surf->add_option("--x-steps", c.x_steps);
  surf->add_flag("--overlay", c.overlay, "add the numerical joint spectrum");

  auto* ell = app.add_subcommand("elliptic", "cubic case as an elliptic surface");
  common_flags(ell, c);
  std::vector<double> fiber_deltas{0.25};
  ell->add_option("--delta", fiber_deltas, "Delta values for the singular fiber scan")->delimiter(',');
  ell->add_option("--t-lo", c.t_lo);
  ell->add_option("--t-hi", c.t_hi);

  auto* om = app.add_subcommand("omega", "zero loci of the constraint polynomials in the (g, Delta) plane");
  common_flags(om, c);
  om->add_option("--ell", c.ells)->delimiter(',');
  om->add_option("--n-lo", c.n_lo);
  om->add_option("--n-hi", c.n_hi);
  om->add_option("--g-lo", c.g_lo);
  om->add_option("--g-hi", c.g_hi);
  om->add_option("--g-step", c.g_step);

  auto* dj = app.add_subcommand("derive-j", "derive J_l from the commutation ansatz");
  common_flags(dj, c);
  dj->add_option("--ell", c.ells)->delimiter(',');

  auto* ju = app.add_subcommand("juddian", "action of J on Juddian solutions");
  common_flags(ju, c);
  ju->add_option("--ell", c.ells)->delimiter(',');
  ju->add_option("--delta", c.deltas)->delimiter(',');
  ju->add_option("--n-lo", c.n_lo);
  ju->add_option("--n-hi", c.n_hi);
  ju->add_option("--tol", c.action_tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (ell->parsed()) c.deltas = fiber_deltas;

  try {
    if (int n = env_threads()) omp_set_num_threads(n);
    if (corrupt_p3) c.p3_override = p_table_text(3) + " + 1";
    CommandResult r;
    if (verify->parsed()) r = cmd_verify_all(c);
    if (sw->parsed()) r = cmd_sweep(c);
    if (surf->parsed()) r = cmd_surface(c);
    if (ell->parsed()) r = cmd_elliptic(c);
    if (om->parsed()) r = cmd_omega(c);
    if (dj->parsed()) r = cmd_derive_j(c);
    if (ju->parsed()) r = cmd_juddian(c);
    for (const auto& f : r.files) std::cout << f << "\n";
    if (r.exit_code != 0) std::cerr << "FAIL: " << r.first_failure << "\n";
    else std::cout << "PASS\n";
    return r.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
