#pragma once

#include "qrm/linalg.hpp"
#include "qrm/weyl.hpp"

#include <string>
#include <vector>

namespace qrm {

constexpr int kDefaultDimFock = 80;

// dense matrix on spin (x) Fock, index = spin * dim_fock + n
struct FockOperator {
  int dim_fock = 0;
  int ell = 0;
  double g = 0, delta = 0;
  SymMatrix matrix;
};

// truncated matrix of any 2x2 operator over (P, a, a^dag)
SymMatrix fock_matrix(const Mat2Weyl& op, double g, double delta, int dim_fock);
SymMatrix fock_matrix(const Mat2D& op, int dim_fock);

// H = a^dag a + Delta sigma_z + g sigma_x (a + a^dag) + (l/2) sigma_x
FockOperator hamiltonian_matrix(int ell, double g, double delta, int dim_fock);
// J in the same picture, multiplied by the sign normalization s_l
FockOperator j_matrix(int ell, double g, double delta, int dim_fock);
// the Original-picture operator used by j_matrix (table for l <= 6, derived otherwise)
const Mat2Weyl& j_operator_original(int ell);
int j_sign(int ell);

struct JointSample {
  double lambda = 0;
  double mu = 0;
  double p = 0;             // p_l(lambda)
  double residual = 0;      // |mu^2 - p|
  double rel_residual = 0;  // |mu^2 - p| / max(1, |p|)
  bool converged = true;
  double d_lambda = 0, d_mu = 0;  // changes under truncation doubling
};

struct JointSpectrum {
  int ell = 0;
  double g = 0, delta = 0;
  int dim_fock = 0;
  std::vector<JointSample> samples;  // lambda ascending
};

// lowest n_levels joint eigenpairs; near-degenerate clusters are diagonalized for J jointly
JointSpectrum joint_spectrum(int ell, double g, double delta, int dim_fock, int n_levels, bool check_convergence = true);

// closed form at g = 0: pairs (lambda, mu) sorted by lambda then mu
std::vector<std::pair<double, double>> g0_closed_form(int ell, double delta, int n_levels);

struct CrossingRecord {
  double g = 0;
  double lambda = 0;
  int level = 0;  // lower index of the pair
  int N = -1;     // baseline index when on N + l/2 - g^2
  std::string type;  // "baseline" or "off-baseline"
  double mu_lo = 0, mu_hi = 0;
  double mu_sum = 0;
  double gap = 0;
};

struct AvoidedCrossing {
  double g = 0;
  int level = 0;
  double gap = 0;
};

struct SignAmbiguity {
  double g = 0;
  int level = 0;
  double mu = 0;
};

struct SpectralSweep {
  int ell = 0;
  double delta = 0;
  int n_levels = 0, dim_fock = 0;
  std::vector<double> g_grid;
  std::vector<JointSpectrum> spectra;
  std::vector<std::vector<int>> tracked_signs;  // [g index][level]
  std::vector<SignAmbiguity> ambiguities;
  std::vector<CrossingRecord> crossings;
  std::vector<AvoidedCrossing> avoided;
};

SpectralSweep sweep(int ell, double delta, const std::vector<double>& g_grid, int n_levels, int dim_fock,
                    bool check_convergence = false);

// crossings between consecutive grid spectra, refined to |gap| ~ 1e-12
std::vector<CrossingRecord> crossings_on_grid(int ell, double delta, const std::vector<double>& grid,
                                              const std::vector<JointSpectrum>& spectra, int n_levels, int dim_fock);
std::vector<AvoidedCrossing> avoided_on_grid(const std::vector<double>& grid, const std::vector<JointSpectrum>& spectra,
                                             int n_levels);

// fine scan of (0, g_hi] with the given step
struct CrossingScan {
  std::vector<CrossingRecord> crossings;
  std::vector<AvoidedCrossing> avoided;
};
CrossingScan detect_crossings(int ell, double delta, double g_hi, double step, int n_levels, int dim_fock);

struct CensusRoot {
  int N = 0;
  double g = 0;
  double lambda = 0;
  int level = 0;  // number of eigenvalues strictly below lambda
};
// positive roots of the constraint polynomials P_N((2g)^2, Delta^2), whose degenerate pair lies in the lowest n_levels
std::vector<CensusRoot> constraint_census(int ell, double delta, double g_hi, int n_levels, int dim_fock);

struct CensusComparison {
  std::vector<std::pair<CrossingRecord, CensusRoot>> matched;
  std::vector<CrossingRecord> unmatched_crossings;
  std::vector<CensusRoot> unmatched_roots;
  double max_g_error = 0;
  double max_mu_sum = 0;
  bool bijective() const { return unmatched_crossings.empty() && unmatched_roots.empty(); }
};
CensusComparison compare_census(const std::vector<CrossingRecord>& found, const std::vector<CensusRoot>& roots,
                                double tol = 1e-6);

struct GaaRow {
  double g = 0;
  int N = 0;
  double e_plus = 0, e_minus = 0;
};
std::vector<GaaRow> gaa_curves(int ell, double delta, int n_max, const std::vector<double>& g_grid);

struct SurfacePoint {
  double x = 0, y = 0, g = 0;
  bool spectral = false;  // overlay point (lambda, mu, g) from a sweep
};
std::vector<SurfacePoint> surface_samples(int ell, double delta, const std::vector<double>& g_grid, double x_lo,
                                          double x_hi, int x_steps, const SpectralSweep* overlay = nullptr);

}  // namespace qrm
