#pragma once

#include "qrm/exact_algebra.hpp"

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrm {

struct SingularCurve : std::domain_error {
  using std::domain_error::domain_error;
};
struct BadReduction : std::domain_error {
  using std::domain_error::domain_error;
};
struct RootFindingStall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// y^2 = X^3 + a2 X^2 + a4 X + a6 obtained from y^2 = p_3(x) with X = 4 g^2 x; all fields in Q[g, Delta]
struct WeierstrassCurve {
  MultiPoly a2, a4, a6;
  MultiPoly c4, c6;
  MultiPoly disc;  // discriminant of y^2 = x^3 - 27 c4 x - 54 c6
  MultiPoly A, B;  // c4 = 3A^2 - B, c6 = -18 B
  bool consistent = false;
};
WeierstrassCurve reduce_ell3();
WeierstrassCurve reduce_ell3(const BigRational& g, const BigRational& delta);

struct SingularFiber {
  std::complex<double> g;
  std::string kodaira;  // "I1" or "unclassified(ord_disc, ord_c4)"
  double residual = 0;  // |disc(g)| for the monic disc polynomial
  double abs_c4 = 0;
  double abs_ddisc = 0;  // |d/dg disc| for the monic polynomial
};
struct FiberReport {
  double delta = 0;
  std::vector<SingularFiber> fibers;
  int distinct_g = 0;
  int distinct_A = 0;
  int iterations = 0;
};
FiberReport singular_fibers(double delta);

// all complex roots of a real polynomial (coefficients by ascending power) by Durand-Kerner
std::vector<std::complex<long double>> durand_kerner(const std::vector<long double>& coeffs, double tol = 1e-12,
                                                     int max_iter = 5000, int* iterations = nullptr);

struct ETCurve {
  BigRational T;
  std::array<BigRational, 3> two_torsion;  // x-coordinates, y = 0
  std::array<BigRational, 3> cubic;        // x^3 + c[0] x^2 + c[1] x + c[2]
  BigRational disc;                        // polynomial discriminant of the cubic
  BigRational disc_formula;                // 2^26 (T-12)^2 (T+6)^2 (T+24)^2
};
ETCurve et_curve(const BigRational& T);

// y^2 = x^3 + a2 x^2 + a4 x + a6 over Z
struct IntCurve {
  BigInt a2, a4, a6;
};
BigInt cubic_discriminant(const BigInt& a2, const BigInt& a4, const BigInt& a6);
long count_points_mod_p(const IntCurve& c, long p);

struct TorsionEntry {
  long T = 0;
  std::map<long, long> counts;  // good prime -> #E(F_p)
  std::vector<long> bad_primes;
  bool divisible_by_4 = true;
  std::string verdict;  // "consistent with Z2+Z2" or "inconclusive"
};
std::vector<TorsionEntry> torsion_check(long t_lo, long t_hi);

BigInt c_mn(const BigInt& M, const BigInt& N);
bool is_perfect_square(const BigInt& n);

}  // namespace qrm
