#include "qrm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "qrm/derive_j.hpp"
#include "qrm/symmetry_poly.hpp"

extern "C" {
#include <quadmath.h>
}

namespace qrm {

namespace {

struct JCache {
  Mat2Weyl original;
  int sign = 1;
};

const JCache& j_cache(int ell) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<JCache>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[ell];
  if (!slot) {
    Mat2Weyl tilde = ell <= 6 ? build_J(ell) : derive_J(ell).j;
    slot = std::make_unique<JCache>();
    slot->original = cayley_conjugate(tilde);
    slot->sign = j_sign_normalization(tilde, ell);
  }
  return *slot;
}

}  // namespace

const Mat2Weyl& j_operator_original(int ell) { return j_cache(ell).original; }
int j_sign(int ell) { return j_cache(ell).sign; }

SymMatrix fock_matrix(const Mat2D& op, int dim) {
  SymMatrix m(2 * dim);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (const auto& [key, c] : op.at(i, j).terms()) {
        for (int k = key.n; k < dim; ++k) {
          int out = k - key.n + key.m;
          if (out >= dim) break;
          // a^n |k> then (a^dag)^m
          double amp = 1;
          for (int t = k - key.n + 1; t <= k; ++t) amp *= std::sqrt(static_cast<double>(t));
          for (int t = k - key.n + 1; t <= out; ++t) amp *= std::sqrt(static_cast<double>(t));
          if (key.e && (out & 1)) amp = -amp;
          m(i * dim + out, j * dim + k) += c * amp;
        }
      }
  return m;
}

SymMatrix fock_matrix(const Mat2Weyl& op, double g, double delta, int dim) {
  return fock_matrix(specialize_d(op, g, delta), dim);
}

FockOperator hamiltonian_matrix(int ell, double g, double delta, int dim) {
  FockOperator f{dim, ell, g, delta, SymMatrix(2 * dim)};
  SymMatrix& m = f.matrix;
  for (int n = 0; n < dim; ++n) {
    m(n, n) = n + delta;
    m(dim + n, dim + n) = n - delta;
    m(n, dim + n) = m(dim + n, n) = ell / 2.0;
    if (n + 1 < dim) {
      double c = g * std::sqrt(static_cast<double>(n + 1));
      m(n, dim + n + 1) = m(dim + n + 1, n) = c;
      m(n + 1, dim + n) = m(dim + n, n + 1) = c;
    }
  }
  return f;
}

FockOperator j_matrix(int ell, double g, double delta, int dim) {
  const JCache& jc = j_cache(ell);
  FockOperator f{dim, ell, g, delta, fock_matrix(jc.original, g, delta, dim)};
  if (jc.sign < 0)
    for (double& x : f.matrix.a) x = -x;
  return f;
}

namespace {

using quad = __float128;

quad to_quad(const BigRational& q) {
  mpf_class f(q, 256);
  double hi = f.get_d();
  f -= hi;
  return static_cast<quad>(hi) + static_cast<quad>(f.get_d());
}

BigRational quad_to_rational(quad x) {
  double hi = static_cast<double>(x);
  double lo = static_cast<double>(x - hi);
  return from_double(hi) + from_double(lo);
}

struct SparseQ {
  int n = 0;
  std::vector<int> row, col;
  std::vector<quad> val;
  std::vector<quad> apply(const std::vector<quad>& v) const {
    std::vector<quad> out(n, 0);
    for (size_t k = 0; k < val.size(); ++k) out[row[k]] += val[k] * v[col[k]];
    return out;
  }
};

quad qdot(const std::vector<quad>& x, const std::vector<quad>& y) {
  quad s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// quad-precision copies of H and s_l J for Rayleigh quotients
SparseQ hamiltonian_q(int ell, double g, double delta, int dim) {
  SparseQ h;
  h.n = 2 * dim;
  auto put = [&](int r, int c, quad v) {
    h.row.push_back(r);
    h.col.push_back(c);
    h.val.push_back(v);
  };
  const quad qg = g, qd = delta, half = static_cast<quad>(ell) / 2;
  for (int n = 0; n < dim; ++n) {
    put(n, n, n + qd);
    put(dim + n, dim + n, n - qd);
    put(n, dim + n, half);
    put(dim + n, n, half);
    if (n + 1 < dim) {
      quad c = qg * sqrtq(static_cast<quad>(n + 1));
      put(n, dim + n + 1, c);
      put(dim + n + 1, n, c);
      put(n + 1, dim + n, c);
      put(dim + n, n + 1, c);
    }
  }
  return h;
}

SparseQ j_q(int ell, double g, double delta, int dim) {
  const JCache& jc = j_cache(ell);
  SparseQ j;
  j.n = 2 * dim;
  std::map<std::string, BigRational> at{{"g", from_double(g)}, {"Delta", from_double(delta)}};
  for (int i = 0; i < 2; ++i)
    for (int b = 0; b < 2; ++b)
      for (const auto& [key, coef] : jc.original.at(i, b).terms()) {
        quad c = to_quad(coef.eval(at)) * jc.sign;
        if (c == 0) continue;
        for (int k = key.n; k < dim; ++k) {
          int out = k - key.n + key.m;
          if (out >= dim) break;
          quad prod = 1;
          for (int t = k - key.n + 1; t <= k; ++t) prod *= t;
          for (int t = k - key.n + 1; t <= out; ++t) prod *= t;
          quad amp = sqrtq(prod);
          if (key.e && (out & 1)) amp = -amp;
          j.row.push_back(i * dim + out);
          j.col.push_back(b * dim + k);
          j.val.push_back(c * amp);
        }
      }
  return j;
}

struct Pair {
  quad lambda, mu;
};

std::vector<Pair> joint_core(int ell, double g, double delta, int dim, int n_levels) {
  FockOperator h = hamiltonian_matrix(ell, g, delta, dim);
  EigenResult eig = sym_eig(h.matrix);
  SparseQ hq = hamiltonian_q(ell, g, delta, dim);
  SparseQ jq = j_q(ell, g, delta, dim);
  const int n = h.matrix.n;
  auto vec = [&](int k) {
    std::vector<quad> v(n);
    for (int i = 0; i < n; ++i) v[i] = eig.vectors(k, i);
    quad nn = sqrtq(qdot(v, v));
    for (auto& x : v) x /= nn;
    return v;
  };
  std::vector<Pair> out;
  int k = 0;
  while (k < n_levels) {
    int e = k + 1;
    while (e < n && std::fabs(eig.values[e] - eig.values[e - 1]) < 1e-7 * std::max(1.0, std::fabs(eig.values[e])))
      ++e;
    const int c = e - k;
    if (c == 1) {
      auto v = vec(k);
      out.push_back({qdot(v, hq.apply(v)), qdot(v, jq.apply(v))});
    } else {
      // diagonalize J inside the cluster, then Rayleigh quotients
      std::vector<std::vector<quad>> vs, jv;
      for (int a = 0; a < c; ++a) {
        vs.push_back(vec(k + a));
        jv.push_back(jq.apply(vs.back()));
      }
      SymMatrix pj(c);
      for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b) pj(a, b) = static_cast<double>((qdot(vs[a], jv[b]) + qdot(vs[b], jv[a])) / 2);
      EigenResult small = sym_eig_serial(pj);
      std::vector<Pair> cl;
      for (int t = 0; t < c; ++t) {
        std::vector<quad> w(n, 0);
        for (int a = 0; a < c; ++a)
          for (int i = 0; i < n; ++i) w[i] += static_cast<quad>(small.vectors(t, a)) * vs[a][i];
        quad nn = sqrtq(qdot(w, w));
        for (auto& x : w) x /= nn;
        cl.push_back({qdot(w, hq.apply(w)), qdot(w, jq.apply(w))});
      }
      std::sort(cl.begin(), cl.end(), [](const Pair& x, const Pair& y) { return x.mu < y.mu; });
      out.insert(out.end(), cl.begin(), cl.end());
    }
    k = e;
  }
  out.resize(n_levels);
  return out;
}

}  // namespace

JointSpectrum joint_spectrum(int ell, double g, double delta, int dim, int n_levels, bool check_convergence) {
  JointSpectrum js{ell, g, delta, dim, {}};
  auto base = joint_core(ell, g, delta, dim, n_levels);
  std::vector<Pair> twice;
  if (check_convergence) twice = joint_core(ell, g, delta, 2 * dim, n_levels);
  const MultiPoly& p = p_poly(ell);
  const BigRational qg = from_double(g), qd = from_double(delta);
  for (int i = 0; i < n_levels; ++i) {
    JointSample s;
    s.lambda = static_cast<double>(base[i].lambda);
    s.mu = static_cast<double>(base[i].mu);
    // exact p at the quad-precision lambda
    BigRational pv = p.eval({{"x", quad_to_rational(base[i].lambda)}, {"g", qg}, {"Delta", qd}});
    BigRational mu = quad_to_rational(base[i].mu);
    s.p = pv.get_d();
    s.residual = std::fabs(BigRational(mu * mu - pv).get_d());
    s.rel_residual = s.residual / std::max(1.0, std::fabs(s.p));
    if (check_convergence) {
      s.d_lambda = static_cast<double>(fabsq(twice[i].lambda - base[i].lambda));
      s.d_mu = static_cast<double>(fabsq(twice[i].mu - base[i].mu) / std::max<quad>(1, fabsq(base[i].mu)));
      s.converged = s.d_lambda < 1e-8 && s.d_mu < 1e-8;
    }
    js.samples.push_back(s);
  }
  return js;
}

std::vector<std::pair<double, double>> g0_closed_form(int ell, double delta, int n_levels) {
  const double r = std::sqrt(delta * delta + ell * ell / 4.0);
  const double q = std::sqrt(static_cast<double>(p_eval(ell, 0, 0, delta)));
  std::vector<std::pair<double, double>> v;
  for (int n = 0; n <= n_levels; ++n) {
    double s = (n & 1) ? -q : q;
    v.push_back({n + r, s});
    v.push_back({n - r, ell % 2 == 0 ? -s : s});
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (std::fabs(a.first - b.first) < 1e-9) return a.second < b.second;
    return a.first < b.first;
  });
  v.resize(n_levels);
  return v;
}

namespace {

int sgn_of(double mu) { return std::fabs(mu) < 1e-6 ? 0 : (mu > 0 ? 1 : -1); }

std::vector<int> signs_of(const JointSpectrum& js, int n) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = sgn_of(js.samples[i].mu);
  return s;
}

bool same(int a, int b) { return a == 0 || b == 0 || a == b; }

// split sign changes into adjacent swaps; false if something else is adjacent to a change
bool decompose(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& swaps) {
  swaps.clear();
  const int n = static_cast<int>(a.size());
  std::vector<bool> changed(n);
  for (int i = 0; i < n; ++i) changed[i] = !same(a[i], b[i]);
  for (int i = 0; i < n; ++i) {
    if (!changed[i]) continue;
    if (i + 1 < n && changed[i + 1] && a[i] == -a[i + 1] && b[i] == a[i + 1] && b[i + 1] == a[i]) {
      swaps.push_back(i);
      ++i;
      continue;
    }
    // lone sign flip of mu through zero; must not touch another change
    if ((i > 0 && changed[i - 1]) || (i + 1 < n && changed[i + 1])) return false;
  }
  return true;
}

struct Ctx {
  int ell;
  double delta;
  int n_levels, dim;
};

double pair_h(const Ctx& c, double g, int i, int s0, JointSpectrum* keep) {
  JointSpectrum js = joint_spectrum(c.ell, g, c.delta, c.dim, c.n_levels, false);
  const auto& lo = js.samples[i];
  const auto& hi = js.samples[i + 1];
  if (keep) *keep = js;
  if (sgn_of(lo.mu) == s0 && sgn_of(hi.mu) == -s0) return lo.lambda - hi.lambda;
  if (sgn_of(hi.mu) == s0 && sgn_of(lo.mu) == -s0) return hi.lambda - lo.lambda;
  return std::nan("");
}

CrossingRecord refine(const Ctx& c, int i, double ga, double gb, int s0) {
  CrossingRecord rec;
  rec.level = i;
  JointSpectrum js;
  double fa = pair_h(c, ga, i, s0, nullptr), fb = pair_h(c, gb, i, s0, nullptr);
  double gc = 0.5 * (ga + gb), fc = std::nan("");
  // a crossing sitting on a grid point
  if (std::isfinite(fb) && std::fabs(fb) < 1e-12) {
    gc = gb;
    fc = pair_h(c, gc, i, s0, &js);
  } else if (std::isfinite(fa) && std::fabs(fa) < 1e-12) {
    gc = ga;
    fc = pair_h(c, gc, i, s0, &js);
  } else if (std::isfinite(fa) && std::isfinite(fb) && fa < 0 && fb > 0) {
    int side = 0;
    for (int it = 0; it < 100; ++it) {
      gc = (ga * fb - gb * fa) / (fb - fa);
      fc = pair_h(c, gc, i, s0, &js);
      if (!std::isfinite(fc)) break;
      if (std::fabs(fc) < 1e-13 || gb - ga < 1e-13) break;
      if (fc > 0) {
        gb = gc;
        fb = fc;
        if (side == 1) fa /= 2;
        side = 1;
      } else {
        ga = gc;
        fa = fc;
        if (side == -1) fb /= 2;
        side = -1;
      }
    }
  }
  if (!std::isfinite(fc)) {
    // golden section on the raw gap
    auto gap = [&](double g) {
      JointSpectrum t = joint_spectrum(c.ell, g, c.delta, c.dim, c.n_levels, false);
      return t.samples[i + 1].lambda - t.samples[i].lambda;
    };
    const double r = 0.5 * (std::sqrt(5.0) - 1);
    double x1 = gb - r * (gb - ga), x2 = ga + r * (gb - ga);
    double f1 = gap(x1), f2 = gap(x2);
    while (gb - ga > 1e-10) {
      if (f1 < f2) {
        gb = x2;
        x2 = x1;
        f2 = f1;
        x1 = gb - r * (gb - ga);
        f1 = gap(x1);
      } else {
        ga = x1;
        x1 = x2;
        f1 = f2;
        x2 = ga + r * (gb - ga);
        f2 = gap(x2);
      }
    }
    gc = 0.5 * (ga + gb);
    js = joint_spectrum(c.ell, gc, c.delta, c.dim, c.n_levels, false);
    if (js.samples[i + 1].lambda - js.samples[i].lambda > 1e-8) rec.type = "unresolved";
  }
  const auto& lo = js.samples[i];
  const auto& hi = js.samples[i + 1];
  rec.g = gc;
  rec.lambda = 0.5 * (lo.lambda + hi.lambda);
  rec.gap = std::fabs(hi.lambda - lo.lambda);
  rec.mu_lo = lo.mu;
  rec.mu_hi = hi.mu;
  rec.mu_sum = std::fabs(lo.mu + hi.mu);
  double np = rec.lambda + gc * gc - c.ell / 2.0;
  double nr = std::round(np);
  if (rec.type.empty()) {
    if (std::fabs(np - nr) < 1e-8 && nr >= 0) {
      rec.type = "baseline";
      rec.N = static_cast<int>(nr);
    } else {
      rec.type = "off-baseline";
    }
  }
  return rec;
}

void scan_interval(const Ctx& c, double ga, const JointSpectrum& sa, double gb, const JointSpectrum& sb, int depth,
                   std::vector<CrossingRecord>& out) {
  const int n = c.n_levels;
  auto a = signs_of(sa, n), b = signs_of(sb, n);
  std::vector<int> swaps;
  bool ok = decompose(a, b, swaps);
  if (!ok && depth < 12) {
    double gm = 0.5 * (ga + gb);
    JointSpectrum sm = joint_spectrum(c.ell, gm, c.delta, c.dim, n, false);
    scan_interval(c, ga, sa, gm, sm, depth + 1, out);
    scan_interval(c, gm, sm, gb, sb, depth + 1, out);
    return;
  }
  for (int i : swaps) out.push_back(refine(c, i, ga, gb, a[i]));
}

}  // namespace

std::vector<CrossingRecord> crossings_on_grid(int ell, double delta, const std::vector<double>& grid,
                                              const std::vector<JointSpectrum>& spectra, int n_levels, int dim) {
  Ctx c{ell, delta, n_levels, dim};
  std::vector<std::vector<CrossingRecord>> per(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(grid.size()) - 1; ++k)
    scan_interval(c, grid[k], spectra[k], grid[k + 1], spectra[k + 1], 0, per[k]);
  std::vector<CrossingRecord> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.g < y.g || (x.g == y.g && x.level < y.level); });
  return out;
}

std::vector<AvoidedCrossing> avoided_on_grid(const std::vector<double>& grid, const std::vector<JointSpectrum>& spectra,
                                             int n_levels) {
  std::vector<AvoidedCrossing> out;
  for (size_t k = 1; k + 1 < grid.size(); ++k)
    for (int i = 0; i + 1 < n_levels; ++i) {
      auto gap = [&](size_t t) { return spectra[t].samples[i + 1].lambda - spectra[t].samples[i].lambda; };
      auto sector = [&](size_t t) {
        int a = sgn_of(spectra[t].samples[i].mu), b = sgn_of(spectra[t].samples[i + 1].mu);
        return a != 0 && a == b;
      };
      if (!(sector(k - 1) && sector(k) && sector(k + 1))) continue;
      double g0 = gap(k - 1), g1 = gap(k), g2 = gap(k + 1);
      if (g1 < g0 && g1 < g2 && g1 > 1e-8 && g1 < 1e-2) out.push_back({grid[k], i, g1});
    }
  return out;
}

SpectralSweep sweep(int ell, double delta, const std::vector<double>& g_grid, int n_levels, int dim,
                    bool check_convergence) {
  SpectralSweep sw;
  sw.ell = ell;
  sw.delta = delta;
  sw.n_levels = n_levels;
  sw.dim_fock = dim;
  sw.g_grid = g_grid;
  sw.spectra.resize(g_grid.size());
  j_cache(ell);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(g_grid.size()); ++k)
    sw.spectra[k] = joint_spectrum(ell, g_grid[k], delta, dim, n_levels, check_convergence);

  // sequential continuation of signs
  std::vector<int> prev;
  for (size_t k = 0; k < g_grid.size(); ++k) {
    std::vector<int> cur(n_levels);
    if (k == 0 && g_grid[0] == 0) {
      auto cf = g0_closed_form(ell, delta, n_levels);
      for (int i = 0; i < n_levels; ++i) cur[i] = cf[i].second >= 0 ? 1 : -1;
    } else {
      for (int i = 0; i < n_levels; ++i) {
        double mu = sw.spectra[k].samples[i].mu;
        int s = sgn_of(mu);
        if (s == 0) {
          sw.ambiguities.push_back({g_grid[k], i, mu});
          s = prev.empty() ? 1 : prev[i];
        }
        cur[i] = s;
      }
    }
    sw.tracked_signs.push_back(cur);
    prev = cur;
  }
  sw.crossings = crossings_on_grid(ell, delta, g_grid, sw.spectra, n_levels, dim);
  sw.avoided = avoided_on_grid(g_grid, sw.spectra, n_levels);
  return sw;
}

CrossingScan detect_crossings(int ell, double delta, double g_hi, double step, int n_levels, int dim) {
  std::vector<double> grid;
  const int steps = static_cast<int>(std::ceil(g_hi / step - 1e-9));
  for (int k = 0; k <= steps; ++k) grid.push_back(std::min(g_hi, k * step));
  std::vector<JointSpectrum> spectra(grid.size());
  j_cache(ell);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(grid.size()); ++k)
    spectra[k] = joint_spectrum(ell, grid[k], delta, dim, n_levels, false);
  CrossingScan scan;
  scan.crossings = crossings_on_grid(ell, delta, grid, spectra, n_levels, dim);
  scan.avoided = avoided_on_grid(grid, spectra, n_levels);
  return scan;
}

std::vector<CensusRoot> constraint_census(int ell, double delta, double g_hi, int n_levels, int dim) {
  std::vector<CensusRoot> cand;
  for (int N = 1; N <= n_levels; ++N)
    for (double g : juddian_g_values(N, ell, from_double(delta)))
      if (g > 0 && g <= g_hi) cand.push_back({N, g, N + ell / 2.0 - g * g, 0});
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(cand.size()); ++k) {
    FockOperator h = hamiltonian_matrix(ell, cand[k].g, delta, dim);
    EigenResult e = sym_eig(h.matrix);
    int below = 0;
    for (double v : e.values)
      if (v < cand[k].lambda - 1e-7) ++below;
    cand[k].level = below;
  }
  std::vector<CensusRoot> out;
  for (auto& r : cand)
    if (r.level + 1 < n_levels) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.g < b.g; });
  return out;
}

CensusComparison compare_census(const std::vector<CrossingRecord>& found, const std::vector<CensusRoot>& roots,
                                double tol) {
  CensusComparison cc;
  std::vector<bool> used(found.size(), false);
  for (const auto& r : roots) {
    int best = -1;
    double bd = tol;
    for (size_t i = 0; i < found.size(); ++i) {
      if (used[i]) continue;
      double d = std::fabs(found[i].g - r.g);
      if (d < bd) {
        bd = d;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) {
      cc.unmatched_roots.push_back(r);
      continue;
    }
    used[best] = true;
    cc.matched.push_back({found[best], r});
    cc.max_g_error = std::max(cc.max_g_error, bd);
    cc.max_mu_sum = std::max(cc.max_mu_sum, found[best].mu_sum);
  }
  for (size_t i = 0; i < found.size(); ++i)
    if (!used[i]) cc.unmatched_crossings.push_back(found[i]);
  return cc;
}

std::vector<GaaRow> gaa_curves(int ell, double delta, int n_max, const std::vector<double>& g_grid) {
  std::vector<MultiPoly> polys;
  for (int N = 0; N <= n_max; ++N) polys.push_back(constraint_P(N, rat(ell), N));
  std::vector<GaaRow> out;
  for (double g : g_grid)
    for (int N = 0; N <= n_max; ++N) {
      long double pn = polys[N].eval_ld({{"u", 4.0L * g * g}, {"v", static_cast<long double>(delta) * delta}});
      long double fn = std::tgamma(N + 1.0L), fl = std::tgamma(N + ell + 1.0L);
      long double amp = ((N + ell) % 2 ? -1.0L : 1.0L) * std::pow(2.0L * g * g, static_cast<long double>(ell)) * delta /
                        (2 * std::pow(fn, 1.5L) * std::sqrt(fl)) * std::exp(-2.0L * g * g) * pn;
      double base = N + ell / 2.0 - g * g;
      out.push_back({g, N, static_cast<double>(base + amp), static_cast<double>(base - amp)});
    }
  return out;
}

std::vector<SurfacePoint> surface_samples(int ell, double delta, const std::vector<double>& g_grid, double x_lo,
                                          double x_hi, int x_steps, const SpectralSweep* overlay) {
  std::vector<SurfacePoint> out;
  for (double g : g_grid)
    for (int k = 0; k <= x_steps; ++k) {
      double x = x_lo + (x_hi - x_lo) * k / std::max(1, x_steps);
      long double p = p_eval(ell, x, g, delta);
      if (p < 0) continue;
      double y = static_cast<double>(std::sqrt(p));
      out.push_back({x, y, g, false});
      if (y != 0) out.push_back({x, -y, g, false});
    }
  if (overlay)
    for (size_t k = 0; k < overlay->g_grid.size(); ++k)
      for (const auto& s : overlay->spectra[k].samples) out.push_back({s.lambda, s.mu, overlay->g_grid[k], true});
  return out;
}

}  // namespace qrm
