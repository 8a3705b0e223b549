#include "qrm/symmetry_poly.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "tables.hpp"

namespace qrm {

std::string to_string(PSource s) { return s == PSource::AppendixTable ? "table" : "determinant"; }

const std::vector<std::string>& xgd_vars() {
  static const std::vector<std::string> v{"x", "g", "Delta"};
  return v;
}

SymmetryPolynomial p_from_text(int ell, const std::string& text) {
  return {ell, PSource::AppendixTable, parse_poly(text, xgd_vars(), {{"D", "Delta"}})};
}

std::string p_table_text(int ell) { return tables::p_table(ell); }

SymmetryPolynomial p_from_table(int ell) { return p_from_text(ell, tables::p_table(ell)); }

TridiagonalM build_M(int ell) {
  const std::vector<std::string> xg{"x", "g"};
  MultiPoly x = MultiPoly::variable("x", xg), g = MultiPoly::variable("g", xg);
  auto s = [&](int i) { return x + g * g + MultiPoly(xg, rat(2 * i - ell, 2)); };
  TridiagonalM m{ell, {}, {}, {}};
  for (int i = 1; i <= ell; ++i) {
    m.diag.push_back((g * g * rat(4) + MultiPoly(xg, rat(2 * i - 1 - ell))) * s(i));
    if (i < ell) {
      m.upper.push_back(s(i));
      m.lower.push_back(s(i + 1) * rat(-static_cast<long>(i) * (ell - i)));
    }
  }
  return m;
}

SymmetryPolynomial p_from_determinant(int ell) {
  const auto& v = xgd_vars();
  if (ell == 0) return {0, PSource::Determinant, MultiPoly(v, 1)};
  TridiagonalM m = build_M(ell);
  MultiPoly d2 = MultiPoly::variable("Delta", v).pow(2);
  std::vector<MultiPoly> diag, upper, lower;
  for (auto& e : m.diag) diag.push_back(e.embed(v) + d2);
  for (auto& e : m.upper) upper.push_back(e.embed(v));
  for (auto& e : m.lower) lower.push_back(e.embed(v));
  return {ell, PSource::Determinant, tridiag_det(diag, upper, lower).embed(v)};
}

const MultiPoly& p_poly(int ell) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<MultiPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[ell];
  if (!slot) slot = std::make_unique<MultiPoly>(ell <= 6 ? p_from_table(ell).poly : p_from_determinant(ell).poly);
  return *slot;
}

long double p_eval(int ell, long double x, long double g, long double delta) {
  return p_poly(ell).eval_ld({{"x", x}, {"g", g}, {"Delta", delta}});
}

MultiPoly p_on_shifted_baseline(const MultiPoly& p, const BigRational& x0) {
  const std::vector<std::string> gd{"g", "Delta"};
  MultiPoly g = MultiPoly::variable("g", gd);
  return p.subs("x", MultiPoly(gd, x0) - g * g).embed(gd);
}

static MultiPoly a_in_g_delta(int N, int ell) {
  const std::vector<std::string> gd{"g", "Delta"};
  MultiPoly g = MultiPoly::variable("g", gd), d = MultiPoly::variable("Delta", gd);
  return quotient_A(N, ell).poly.subs("u", g * g * rat(4)).subs("v", d * d).embed(gd);
}

ConjectureReport check_conjecture_with(const MultiPoly& p, int ell, int n_lo, int n_hi, PSource source) {
  ConjectureReport r;
  r.ell = ell;
  r.source = source;
  r.n_lo = n_lo;
  r.n_hi = n_hi;
  for (int N = n_lo; N <= n_hi; ++N) {
    if (p_on_shifted_baseline(p, rat(2 * N + ell, 2)) != a_in_g_delta(N, ell)) r.mismatch_plus.push_back(N);
    if (N >= ell && p_on_shifted_baseline(p, rat(2 * N - ell, 2)) != a_in_g_delta(N - ell, ell))
      r.mismatch_minus.push_back(N);
  }
  return r;
}

ConjectureReport check_conjecture_at_baselines(int ell, int n_lo, int n_hi, PSource source) {
  MultiPoly p = source == PSource::AppendixTable ? p_from_table(ell).poly : p_from_determinant(ell).poly;
  return check_conjecture_with(p, ell, n_lo, n_hi, source);
}

static UPoly p_in_x(int ell, const BigRational& g, const BigRational& delta) {
  return p_poly(ell).specialize("g", g).specialize("Delta", delta).embed({"x"}).to_univariate("x");
}

std::vector<double> p_real_roots(int ell, const BigRational& g, const BigRational& delta) {
  UPoly up = p_in_x(ell, g, delta);
  BigRational b = cauchy_bound(up);
  return refined_roots(up, -b, b);
}

std::vector<ZeroCurveSample> p_zero_curve(int ell, double delta, const std::vector<double>& g_grid) {
  p_poly(ell);
  std::vector<ZeroCurveSample> out(g_grid.size());
  BigRational d = from_double(delta);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(g_grid.size()); ++i) {
    out[i].g = g_grid[i];
    out[i].roots = p_real_roots(ell, from_double(g_grid[i]), d);
  }
  return out;
}

static KernelScan scan_at(int ell, const BigRational& x0, const std::vector<double>& g_grid) {
  KernelScan k;
  k.ell = ell;
  k.x0 = x0;
  k.poly = p_on_shifted_baseline(p_poly(ell), x0);
  std::vector<std::vector<OmegaPoint>> per(g_grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(g_grid.size()); ++i) {
    double g = g_grid[i];
    if (!(g > 0)) continue;
    UPoly up = k.poly.specialize("g", from_double(g)).embed({"Delta"}).to_univariate("Delta");
    if (up.size() <= 1) continue;
    for (auto& iv : isolate_positive_roots(up))
      per[i].push_back({g, refine_root(up, iv, rat(1, 100000000000000L)).midpoint()});
  }
  for (auto& v : per) k.zeros.insert(k.zeros.end(), v.begin(), v.end());
  return k;
}

KernelScan kernel_region_scan(int ell, int N, int sign, const std::vector<double>& g_grid) {
  return scan_at(ell, rat(2 * N + (sign >= 0 ? ell : -ell), 2), g_grid);
}

KernelScan kernel_region_scan_shift(int ell, const BigRational& shift, const std::vector<double>& g_grid) {
  return scan_at(ell, rat(ell - 2, 2) + shift, g_grid);
}

}  // namespace qrm
