#pragma once

#include "qrm/constraint_poly.hpp"

#include <string>
#include <vector>

namespace qrm {

enum class PSource { AppendixTable, Determinant };
std::string to_string(PSource s);

// p_l(x; g, Delta) over the variables {x, g, Delta}
struct SymmetryPolynomial {
  int ell = 0;
  PSource source = PSource::Determinant;
  MultiPoly poly;
};

struct TridiagonalM {
  int ell = 0;
  std::vector<MultiPoly> diag, upper, lower;  // in (x, g)
};

const std::vector<std::string>& xgd_vars();

SymmetryPolynomial p_from_table(int ell);
std::string p_table_text(int ell);
// same, from an arbitrary text (used for fault injection in verify-all)
SymmetryPolynomial p_from_text(int ell, const std::string& text);
TridiagonalM build_M(int ell);
SymmetryPolynomial p_from_determinant(int ell);
// cached; table for l <= 6, determinant otherwise
const MultiPoly& p_poly(int ell);

long double p_eval(int ell, long double x, long double g, long double delta);

struct ConjectureReport {
  int ell = 0;
  PSource source = PSource::AppendixTable;
  int n_lo = 0, n_hi = 0;
  std::vector<int> mismatch_plus;   // N with p(N + l/2 - g^2) != A^l_N
  std::vector<int> mismatch_minus;  // N >= l with p(N - l/2 - g^2) != A^l_{N-l}
  bool ok() const { return mismatch_plus.empty() && mismatch_minus.empty(); }
};
ConjectureReport check_conjecture_at_baselines(int ell, int n_lo, int n_hi, PSource source);
ConjectureReport check_conjecture_with(const MultiPoly& p, int ell, int n_lo, int n_hi, PSource source);

// p restricted to x = x0 - g^2 with x0 rational, as a polynomial in (g, Delta)
MultiPoly p_on_shifted_baseline(const MultiPoly& p, const BigRational& x0);

struct ZeroCurveSample {
  double g;
  std::vector<double> roots;  // ascending real x-roots
};
std::vector<ZeroCurveSample> p_zero_curve(int ell, double delta, const std::vector<double>& g_grid);
std::vector<double> p_real_roots(int ell, const BigRational& g, const BigRational& delta);

struct KernelScan {
  int ell = 0;
  BigRational x0;  // x = x0 - g^2
  MultiPoly poly;  // in (g, Delta)
  std::vector<OmegaPoint> zeros;
  bool has_positive_zero() const { return !zeros.empty(); }
};
// baseline x = N + sign*l/2 - g^2
KernelScan kernel_region_scan(int ell, int N, int sign, const std::vector<double>& g_grid);
// x = l/2 - 1 - g^2 + shift
KernelScan kernel_region_scan_shift(int ell, const BigRational& shift, const std::vector<double>& g_grid);

}  // namespace qrm
