#include "qrm/juddian.hpp"

#include <cmath>

#include "qrm/constraint_poly.hpp"
#include "qrm/symmetry_poly.hpp"

namespace qrm {

namespace {

using Vec = std::vector<long double>;

void add_into(Vec& dst, const Vec& src, long double s) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0.0L);
  for (size_t i = 0; i < src.size(); ++i) dst[i] += s * src[i];
}

// sum c_n (g + sign*z)^n expanded in powers of z
Vec shifted_to_z(const Vec& c, long double g, int sign) {
  Vec out(c.size(), 0.0L);
  for (size_t n = 0; n < c.size(); ++n) {
    long double binom = 1;
    for (size_t k = 0; k <= n; ++k) {
      if (k > 0) binom = binom * static_cast<long double>(n - k + 1) / static_cast<long double>(k);
      long double t = c[n] * binom * std::pow(g, static_cast<long double>(n - k));
      out[k] += (sign < 0 && (k & 1)) ? -t : t;
    }
  }
  return out;
}

long double norm(const Vec& v) {
  long double s = 0;
  for (auto x : v) s += x * x;
  return std::sqrt(s);
}

// d/dz on e^{s g z} p(z)
Vec diff_part(const Vec& p, long double sg) {
  Vec out(p.size(), 0.0L);
  for (size_t k = 0; k < p.size(); ++k) {
    out[k] += sg * p[k];
    if (k > 0) out[k - 1] += static_cast<long double>(k) * p[k];
  }
  return out;
}

const MultiPoly& constraint_poly_for(int N, int ell, Which which) {
  static thread_local std::map<std::tuple<int, int, int>, MultiPoly> cache;
  auto key = std::make_tuple(N, ell, static_cast<int>(which));
  auto it = cache.find(key);
  if (it == cache.end()) {
    MultiPoly p = which == Which::Phi ? constraint_in_g_delta(N + ell, rat(-ell)) : constraint_in_g_delta(N, rat(ell));
    it = cache.emplace(key, std::move(p)).first;
  }
  return it->second;
}

}  // namespace

JuddianFunction JuddianFunction::scaled(long double s) const {
  JuddianFunction r = *this;
  for (auto& c : r.comp)
    for (auto& p : c.part)
      for (auto& x : p) x *= s;
  return r;
}

JuddianFunction JuddianFunction::plus(const JuddianFunction& o, long double s) const {
  JuddianFunction r = *this;
  r.which = Which::Combined;
  for (int k = 0; k < 2; ++k)
    for (int e = 0; e < 2; ++e) add_into(r.comp[k].part[e], o.comp[k].part[e], s);
  return r;
}

int JuddianFunction::max_degree() const {
  int d = 0;
  for (const auto& c : comp)
    for (const auto& p : c.part) d = std::max(d, static_cast<int>(p.size()) - 1);
  return d;
}

std::vector<long double> JuddianFunction::flat(int dmax) const {
  Vec out;
  for (const auto& c : comp)
    for (const auto& p : c.part)
      for (int k = 0; k <= dmax; ++k) out.push_back(k < static_cast<int>(p.size()) ? p[k] : 0.0L);
  return out;
}

std::vector<long double> JuddianFunction::taylor(int k, int nmax) const {
  Vec t(nmax + 1, 0.0L);
  for (int e = 0; e < 2; ++e) {
    const Vec& p = comp[k].part[e];
    long double sg = e ? g : -g;
    for (size_t j = 0; j < p.size(); ++j) {
      if (p[j] == 0) continue;
      // p_j z^j e^{sg z}: coefficient of z^n is p_j sg^{n-j} / (n-j)!
      long double term = p[j];
      for (int n = static_cast<int>(j); n <= nmax; ++n) {
        t[n] += term;
        term *= sg / static_cast<long double>(n - j + 1);
      }
    }
  }
  return t;
}

long double juddian_constraint_residual(int N, int ell, long double g, long double delta, Which which) {
  const MultiPoly& p = constraint_poly_for(N, ell, which);
  int ig = p.var_index("g"), id = p.var_index("Delta");
  long double val = 0, scale = 0;
  for (const auto& [m, c] : p.terms()) {
    long double t = static_cast<long double>(c.get_d());
    if (ig >= 0) t *= std::pow(g, static_cast<long double>(m.e[ig]));
    if (id >= 0) t *= std::pow(delta, static_cast<long double>(m.e[id]));
    val += t;
    scale += std::fabs(t);
  }
  return scale == 0 ? 0 : std::fabs(val) / scale;
}

JuddianFunction build_juddian(int N, int ell, long double g, long double delta, Which which, long double tol) {
  if (which == Which::Combined) throw std::invalid_argument("build_juddian: choose Psi or Phi");
  if (N < 1 || ell < 0) throw IndexOutOfRange("build_juddian: N >= 1, l >= 0");
  if (g == 0) throw ZeroCoupling("build_juddian: g = 0");
  if (delta == 0) throw ConstraintViolated("build_juddian: Delta = 0");
  long double res = juddian_constraint_residual(N, ell, g, delta, which);
  if (!(res <= tol))
    throw ConstraintViolated("build_juddian: constraint residual " + std::to_string(static_cast<double>(res)));

  JuddianFunction f;
  f.N = N;
  f.ell = ell;
  f.which = which;
  f.g = g;
  f.delta = delta;
  if (which == Which::Psi) {
    auto K = k_values<long double>(N, ell, g, delta);
    Vec c1(N + 1, 0.0L), c2(N, 0.0L);
    c1[N] = 2 * g * K[N - 1] / delta;
    for (int n = 0; n < N; ++n) {
      c1[n] = -delta * K[n] / (n - N);
      c2[n] = K[n];
    }
    long double lead = c1[N];
    f.comp[0].of(-1) = shifted_to_z(c1, g, +1);
    f.comp[1].of(-1) = shifted_to_z(c2, g, +1);
    return f.scaled(1 / lead);
  }
  const int M = N + ell;
  auto K = k_values<long double>(M, -ell, g, delta);
  Vec c1(M, 0.0L), c2(M + 1, 0.0L);
  c2[M] = 2 * g * K[M - 1] / delta;
  for (int n = 0; n < M; ++n) {
    c1[n] = K[n];
    c2[n] = -delta * K[n] / (n - M);
  }
  long double lead = (M & 1) ? -c2[M] : c2[M];
  f.comp[0].of(+1) = shifted_to_z(c1, g, -1);
  f.comp[1].of(+1) = shifted_to_z(c2, g, -1);
  return f.scaled(1 / lead);
}

JuddianFunction build_juddian(int N, int ell, const BigRational& g, const BigRational& delta, Which which) {
  return build_juddian(N, ell, static_cast<long double>(g.get_d()), static_cast<long double>(delta.get_d()), which);
}

JuddianFunction bargmann_apply(const Mat2Weyl& op, const JuddianFunction& f) {
  JuddianFunction r = f;
  r.which = Which::Combined;
  for (auto& c : r.comp)
    for (auto& p : c.part) p.clear();
  std::map<std::string, long double> at{{"g", f.g}, {"Delta", f.delta}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (const auto& [k, coef] : op.at(i, j).terms()) {
        long double c = coef.eval_ld(at);
        if (c == 0) continue;
        for (int e = 0; e < 2; ++e) {
          Vec p = f.comp[j].part[e];
          if (p.empty()) continue;
          long double sg = e ? f.g : -f.g;
          for (int t = 0; t < k.n; ++t) p = diff_part(p, sg);
          p.insert(p.begin(), k.m, 0.0L);
          int target = e;
          if (k.e) {
            for (size_t q = 1; q < p.size(); q += 2) p[q] = -p[q];
            target = 1 - e;
          }
          add_into(r.comp[i].part[target], p, c);
        }
      }
  return r;
}

long double bargmann_inner(const JuddianFunction& f, const JuddianFunction& h, int nmax) {
  long double s = 0;
  for (int k = 0; k < 2; ++k) {
    Vec a = f.taylor(k, nmax), b = h.taylor(k, nmax);
    long double fact = 1;
    for (int n = 0; n <= nmax; ++n) {
      if (n > 0) fact *= n;
      s += fact * a[n] * b[n];
    }
  }
  return s;
}

ScalarFit fit_scalar(const JuddianFunction& y, const JuddianFunction& x) {
  int d = std::max(y.max_degree(), x.max_degree());
  Vec a = y.flat(d), b = x.flat(d);
  long double ab = 0, bb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    bb += b[i] * b[i];
  }
  ScalarFit fit;
  fit.c = bb == 0 ? 0 : ab / bb;
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - fit.c * b[i];
  long double na = norm(a);
  fit.residual = na == 0 ? norm(r) : norm(r) / na;
  return fit;
}

ActionConstants action_constants_with(const Mat2Weyl& j, int N, int ell, long double g, long double delta,
                                      long double fit_tol) {
  JuddianFunction psi = build_juddian(N, ell, g, delta, Which::Psi);
  JuddianFunction phi = build_juddian(N, ell, g, delta, Which::Phi);
  ScalarFit fb = fit_scalar(bargmann_apply(j, psi), phi);
  ScalarFit fa = fit_scalar(bargmann_apply(j, phi), psi);
  ActionConstants ac;
  ac.alpha = fa.c;
  ac.beta = fb.c;
  ac.residual_alpha = fa.residual;
  ac.residual_beta = fb.residual;
  if (fa.residual > fit_tol || fb.residual > fit_tol)
    throw NotProportional("action_constants: residual " +
                          std::to_string(static_cast<double>(std::max(fa.residual, fb.residual))));
  ac.p_value = p_eval(ell, N + ell / 2.0L - g * g, g, delta);
  ac.product_rel_error = std::fabs(ac.alpha * ac.beta - ac.p_value) / std::max(1.0L, std::fabs(ac.p_value));
  return ac;
}

ActionConstants action_constants(int N, int ell, long double g, long double delta, long double fit_tol) {
  return action_constants_with(build_J(ell), N, ell, g, delta, fit_tol);
}

ParitySolutions parity_solutions(int N, int ell, long double g, long double delta) {
  Mat2Weyl j = build_J(ell);
  ActionConstants ac = action_constants_with(j, N, ell, g, delta);
  JuddianFunction psi = build_juddian(N, ell, g, delta, Which::Psi);
  JuddianFunction phi = build_juddian(N, ell, g, delta, Which::Phi);
  ParitySolutions ps;
  ps.mu = std::sqrt(ac.p_value);
  ps.plus = phi.plus(psi, ps.mu / ac.beta);
  ps.minus = phi.plus(psi, -ps.mu / ac.beta);
  auto resid = [&](const JuddianFunction& pi, long double ev) {
    JuddianFunction d = bargmann_apply(j, pi).plus(pi, -ev);
    int dm = std::max(d.max_degree(), pi.max_degree());
    return norm(d.flat(dm)) / (std::fabs(ev) * norm(pi.flat(dm)));
  };
  ps.residual_plus = resid(ps.plus, ps.mu);
  ps.residual_minus = resid(ps.minus, -ps.mu);
  ps.inner = bargmann_inner(ps.plus, ps.minus) /
             std::sqrt(bargmann_inner(ps.plus, ps.plus) * bargmann_inner(ps.minus, ps.minus));
  return ps;
}

}  // namespace qrm
