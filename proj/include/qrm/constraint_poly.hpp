#pragma once

#include "qrm/exact_algebra.hpp"

#include <stdexcept>
#include <vector>

namespace qrm {

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct ZeroCoupling : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConstraintFamily {
  int N = 0;
  MultiPoly eps;                // rational constant or the symbol "eps"
  std::vector<MultiPoly> polys;  // P_0 .. P_N in (u, v[, eps])
};

// P_0..P_N by the three-term recurrence; eps may be symbolic.
ConstraintFamily constraint_family(int N, const MultiPoly& eps);
MultiPoly constraint_P(int N, const BigRational& eps, int k);
MultiPoly constraint_P_symbolic(int N, int k);  // eps kept as a variable

// P_N evaluated at u = (2g)^2, v = Delta^2 as a polynomial in g and Delta
MultiPoly constraint_in_g_delta(int N, const BigRational& eps);

template <class T>
std::vector<T> k_values(int N, const T& eps, const T& g, const T& delta) {
  std::vector<T> K(N + 1);
  K[0] = T(1);
  const T two_g = T(2) * g;
  for (int n = 1; n <= N; ++n) {
    T inner = T(n - 1 - N) - eps + delta * delta / T(N - n + 1);
    T coef = two_g + inner / two_g;
    T prev2 = n >= 2 ? K[n - 2] : T(0);
    K[n] = (coef * K[n - 1] - prev2) / T(n);
  }
  return K;
}

struct KCoefficients {
  int N = 0;
  BigRational eps, g, delta;
  std::vector<BigRational> values;
};
KCoefficients coeff_K(int N, const BigRational& eps, const BigRational& g, const BigRational& delta);

struct QuotientA {
  int N = 0;
  int ell = 0;
  MultiPoly poly;  // in (u, v)
};
QuotientA quotient_A(int N, int ell);
// A^ell_N as a polynomial in (N, u, v), recovered by interpolation at N = 0..ell
MultiPoly quotient_A_in_N(int ell);

struct DivisibilityReport {
  int N = 0;
  int ell = 0;
  bool remainder_zero = false;
  bool quotient_matches = false;
  MultiPoly quotient;
  MultiPoly remainder;
  bool ok() const { return remainder_zero && quotient_matches; }
};
DivisibilityReport verify_divisibility(int N, int ell);

std::vector<RootInterval> juddian_g_roots(int N, int ell, const BigRational& delta);
std::vector<double> juddian_g_values(int N, int ell, const BigRational& delta);

struct OmegaPoint {
  double g;
  double delta;
};
std::vector<OmegaPoint> omega_curve_samples(int N, int ell, const std::vector<double>& g_grid);

}  // namespace qrm
