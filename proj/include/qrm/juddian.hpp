#pragma once

#include "qrm/weyl.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace qrm {

struct ConstraintViolated : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotProportional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// e^{-gz} p_minus(z) + e^{gz} p_plus(z), coefficients by power of z
struct ExpPoly {
  std::array<std::vector<long double>, 2> part;  // [0]: e^{-gz}, [1]: e^{+gz}
  std::vector<long double>& of(int sign) { return part[sign > 0]; }
  const std::vector<long double>& of(int sign) const { return part[sign > 0]; }
};

enum class Which { Psi, Phi, Combined };

// a two-component function in the Bargmann picture (a -> d/dz, a^dag -> z)
struct JuddianFunction {
  int N = 0, ell = 0;
  Which which = Which::Combined;
  long double g = 0, delta = 0;
  std::array<ExpPoly, 2> comp;

  JuddianFunction scaled(long double s) const;
  // this + s * o, same g required
  JuddianFunction plus(const JuddianFunction& o, long double s = 1) const;
  // concatenated coefficients (fixed layout up to degree dmax)
  std::vector<long double> flat(int dmax) const;
  int max_degree() const;
  // Taylor coefficients of component k about z = 0, orders 0..nmax
  std::vector<long double> taylor(int k, int nmax) const;
};

// normalized residual |P| / sum|terms| of the constraint for the chosen solution
long double juddian_constraint_residual(int N, int ell, long double g, long double delta, Which which);

// Psi = Psi^{(N,l)} (psi_1 monic) or Phi = Phi^{(N+l,-l)} (phi_2 monic)
JuddianFunction build_juddian(int N, int ell, long double g, long double delta, Which which, long double tol = 1e-12L);
JuddianFunction build_juddian(int N, int ell, const BigRational& g, const BigRational& delta, Which which);

JuddianFunction bargmann_apply(const Mat2Weyl& op, const JuddianFunction& f);

// sum over components and Taylor orders of n! f_n h_n
long double bargmann_inner(const JuddianFunction& f, const JuddianFunction& h, int nmax = 200);

// least-squares c with y ~ c x, and the relative residual |y - c x| / |y|
struct ScalarFit {
  long double c = 0;
  long double residual = 0;
};
ScalarFit fit_scalar(const JuddianFunction& y, const JuddianFunction& x);

struct ActionConstants {
  long double alpha = 0, beta = 0;  // J Phi = alpha Psi, J Psi = beta Phi
  long double residual_alpha = 0, residual_beta = 0;
  long double p_value = 0;             // p_l(N + l/2 - g^2)
  long double product_rel_error = 0;   // |alpha beta - p| / max(1, |p|)
};
// J is the tabulated J_l (l <= 6) or any operator given explicitly
ActionConstants action_constants(int N, int ell, long double g, long double delta, long double fit_tol = 1e-9L);
ActionConstants action_constants_with(const Mat2Weyl& j, int N, int ell, long double g, long double delta,
                                      long double fit_tol = 1e-9L);

struct ParitySolutions {
  long double mu = 0;  // +sqrt(p_l(lambda))
  JuddianFunction plus, minus;
  long double residual_plus = 0, residual_minus = 0;  // |J Pi -+ mu Pi| / |mu Pi|
  long double inner = 0;                              // <Pi+, Pi-> / (|Pi+| |Pi-|)
};
ParitySolutions parity_solutions(int N, int ell, long double g, long double delta);

}  // namespace qrm
