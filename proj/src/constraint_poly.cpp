#include "qrm/constraint_poly.hpp"

#include <algorithm>

namespace qrm {

namespace {
const std::vector<std::string> kUV{"u", "v"};
const std::vector<std::string> kUVE{"u", "v", "eps"};
}  // namespace

ConstraintFamily constraint_family(int N, const MultiPoly& eps) {
  if (N < 0) throw IndexOutOfRange("constraint_family: N < 0");
  auto vars = union_vars(kUV, eps.vars());
  MultiPoly u = MultiPoly::variable("u", vars), v = MultiPoly::variable("v", vars);
  MultiPoly e = eps.embed(vars);
  ConstraintFamily f{N, eps, {}};
  f.polys.push_back(MultiPoly(vars, 1));
  if (N >= 1) f.polys.push_back(u + v - MultiPoly(vars, 1) - e);
  for (int k = 2; k <= N; ++k) {
    MultiPoly a = u * rat(k) + v - (MultiPoly(vars, rat(k)) + e) * rat(k);
    MultiPoly b = u * rat(static_cast<long>(k) * (k - 1) * (N - k + 1));
    f.polys.push_back(a * f.polys[k - 1] - b * f.polys[k - 2]);
  }
  return f;
}

MultiPoly constraint_P(int N, const BigRational& eps, int k) {
  if (k < 0 || k > N) throw IndexOutOfRange("constraint_P: require 0 <= k <= N");
  return constraint_family(N, MultiPoly(kUV, eps)).polys[k];
}

MultiPoly constraint_P_symbolic(int N, int k) {
  if (k < 0 || k > N) throw IndexOutOfRange("constraint_P: require 0 <= k <= N");
  return constraint_family(N, MultiPoly::variable("eps", kUVE)).polys[k];
}

MultiPoly constraint_in_g_delta(int N, const BigRational& eps) {
  std::vector<std::string> gd{"g", "Delta"};
  MultiPoly g = MultiPoly::variable("g", gd), d = MultiPoly::variable("Delta", gd);
  return constraint_P(N, eps, N).subs("u", g * g * rat(4)).subs("v", d * d).embed(gd);
}

KCoefficients coeff_K(int N, const BigRational& eps, const BigRational& g, const BigRational& delta) {
  if (g == 0) throw ZeroCoupling("coeff_K: g = 0");
  if (N < 1) throw IndexOutOfRange("coeff_K: N >= 1 required");
  return {N, eps, g, delta, k_values<BigRational>(N, eps, g, delta)};
}

QuotientA quotient_A(int N, int ell) {
  if (N < 0 || ell < 0) throw IndexOutOfRange("quotient_A: negative index");
  QuotientA q{N, ell, MultiPoly(kUV, 1)};
  if (ell == 0) return q;
  MultiPoly u = MultiPoly::variable("u", kUV), v = MultiPoly::variable("v", kUV);
  std::vector<MultiPoly> diag, upper, lower;
  for (int i = 1; i <= ell; ++i) {
    diag.push_back(u + v * rat(1, N + i) + MultiPoly(kUV, rat(2 * i - 1 - ell)));
    if (i < ell) {
      upper.push_back(MultiPoly(kUV, 1));
      lower.push_back(MultiPoly(kUV, rat(-static_cast<long>(i) * (ell - i))));
    }
  }
  BigRational scale = rat(factorial(N + ell), factorial(N));
  q.poly = tridiag_det(diag, upper, lower) * scale;
  return q;
}

MultiPoly quotient_A_in_N(int ell) {
  std::vector<std::pair<BigRational, MultiPoly>> pts;
  for (int n = 0; n <= ell; ++n) pts.emplace_back(rat(n), quotient_A(n, ell).poly);
  return interpolate_univar(pts, "N").embed({"N", "u", "v"});
}

DivisibilityReport verify_divisibility(int N, int ell) {
  DivisibilityReport rep;
  rep.N = N;
  rep.ell = ell;
  MultiPoly dividend = constraint_P(N + ell, rat(-ell), N + ell);
  MultiPoly divisor = constraint_P(N, rat(ell), N);
  auto [q, r] = poly_divmod(dividend, divisor, "u");
  rep.quotient = q.embed(kUV);
  rep.remainder = r.embed(kUV);
  rep.remainder_zero = r.is_zero();
  rep.quotient_matches = rep.quotient == quotient_A(N, ell).poly;
  return rep;
}

std::vector<RootInterval> juddian_g_roots(int N, int ell, const BigRational& delta) {
  MultiPoly p = constraint_in_g_delta(N, rat(ell)).specialize("Delta", delta);
  UPoly up = p.drop_unused_vars().embed({"g"}).to_univariate("g");
  return isolate_positive_roots(up);
}

std::vector<double> juddian_g_values(int N, int ell, const BigRational& delta) {
  MultiPoly p = constraint_in_g_delta(N, rat(ell)).specialize("Delta", delta);
  UPoly up = p.drop_unused_vars().embed({"g"}).to_univariate("g");
  std::vector<double> out;
  for (auto& iv : isolate_positive_roots(up)) out.push_back(refine_root(up, iv, rat(1, 100000000000000L)).midpoint());
  return out;
}

std::vector<OmegaPoint> omega_curve_samples(int N, int ell, const std::vector<double>& g_grid) {
  MultiPoly base = constraint_in_g_delta(N, rat(ell));
  std::vector<std::vector<OmegaPoint>> per(g_grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(g_grid.size()); ++i) {
    double g = g_grid[i];
    if (g < 0) continue;
    UPoly up = base.specialize("g", from_decimal(g)).drop_unused_vars().embed({"Delta"}).to_univariate("Delta");
    trim(up);
    if (up.size() < 2) continue;
    for (auto& iv : isolate_positive_roots(up))
      per[i].push_back({g, refine_root(up, iv, rat(1, 100000000000000L)).midpoint()});
  }
  std::vector<OmegaPoint> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  std::stable_sort(out.begin(), out.end(), [](const OmegaPoint& a, const OmegaPoint& b) {
    return a.g < b.g || (a.g == b.g && a.delta < b.delta);
  });
  return out;
}

}  // namespace qrm
