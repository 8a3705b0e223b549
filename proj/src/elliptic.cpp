#include "qrm/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qrm/symmetry_poly.hpp"

namespace qrm {

namespace {
const std::vector<std::string> kGD{"g", "Delta"};
}

WeierstrassCurve reduce_ell3() {
  // p_3 = 64 g^6 x^3 + q2 x^2 + q1 x + q0; X = 4 g^2 x makes the leading term X^3
  MultiPoly p3 = p_poly(3).embed(xgd_vars());
  auto q = p3.coeff_list("x");
  MultiPoly g = MultiPoly::variable("g", kGD), d = MultiPoly::variable("Delta", kGD);
  MultiPoly g2 = g * g;
  WeierstrassCurve w;
  // q2 x^2 = (q2 / (16 g^4)) X^2, q1 x = (q1 / (4 g^2)) X
  auto [a2, r2] = poly_divmod(q[2].embed(kGD), g2 * g2 * rat(16), "g");
  auto [a4, r1] = poly_divmod(q[1].embed(kGD), g2 * rat(4), "g");
  w.a2 = a2.embed(kGD);
  w.a4 = a4.embed(kGD);
  w.a6 = q[0].embed(kGD);
  w.c4 = w.a2 * w.a2 * rat(16) - w.a4 * rat(48);
  w.c6 = w.a2.pow(3) * rat(-64) + w.a2 * w.a4 * rat(288) - w.a6 * rat(864);
  // short model x^3 + A' x + B' with A' = -27 c4, B' = -54 c6
  MultiPoly ap = w.c4 * rat(-27), bp = w.c6 * rat(-54);
  w.disc = (ap.pow(3) * rat(4) + bp.pow(2) * rat(27)) * rat(-16);
  w.A = g2 * rat(16);
  w.B = d * d * rat(192);
  BigRational k = BigRational(64) * BigRational(19683);
  bool ok = r2.is_zero() && r1.is_zero() && q[3].embed(kGD) == g2.pow(3) * rat(64);
  ok = ok && w.c4 == w.A * w.A * rat(3) - w.B;
  ok = ok && w.c6 == w.B * rat(-18);
  ok = ok && w.disc == (w.c4.pow(3) - w.c6.pow(2)) * k;
  w.consistent = ok;
  return w;
}

WeierstrassCurve reduce_ell3(const BigRational& g, const BigRational& delta) {
  WeierstrassCurve w = reduce_ell3();
  auto sp = [&](const MultiPoly& p) { return MultiPoly(p.specialize("g", g).specialize("Delta", delta).constant_term()); };
  for (MultiPoly* f : {&w.a2, &w.a4, &w.a6, &w.c4, &w.c6, &w.disc, &w.A, &w.B}) *f = sp(*f);
  return w;
}

std::vector<std::complex<long double>> durand_kerner(const std::vector<long double>& coeffs, double tol, int max_iter,
                                                     int* iterations) {
  using C = std::complex<long double>;
  std::vector<long double> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  const long double lead = c.back();
  for (auto& x : c) x /= lead;
  long double radius = 1;
  for (int k = 0; k < n; ++k) radius = std::max(radius, 1 + std::fabs(c[k]));
  auto eval = [&](C z) {
    C s = 0;
    for (int k = n; k >= 0; --k) s = s * z + c[k];
    return s;
  };
  std::vector<C> z(n);
  const C seed(0.4L, 0.9L);
  for (int k = 0; k < n; ++k) z[k] = std::pow(seed, k) * (radius / std::abs(std::pow(seed, k)));
  int it = 0;
  for (; it < max_iter; ++it) {
    long double move = 0;
    for (int k = 0; k < n; ++k) {
      C den = 1;
      for (int j = 0; j < n; ++j)
        if (j != k) den *= z[k] - z[j];
      C dz = eval(z[k]) / den;
      z[k] -= dz;
      move = std::max(move, std::abs(dz) / std::max<long double>(1, std::abs(z[k])));
    }
    if (move < tol * 1e-3) break;
  }
  if (iterations) *iterations = it;
  if (it == max_iter) {
    long double worst = 0;
    for (auto r : z) worst = std::max(worst, std::abs(eval(r)));
    throw RootFindingStall("durand_kerner: no convergence, max residual " + std::to_string(static_cast<double>(worst)));
  }
  return z;
}

FiberReport singular_fibers(double delta) {
  if (!(delta > 0)) throw std::invalid_argument("singular_fibers: Delta must be positive");
  FiberReport rep;
  rep.delta = delta;
  WeierstrassCurve w = reduce_ell3();
  BigRational d = from_double(delta);
  UPoly disc = w.disc.specialize("Delta", d).embed({"g"}).to_univariate("g");
  UPoly c4 = w.c4.specialize("Delta", d).embed({"g"}).to_univariate("g");
  UPoly ddisc = upoly_derivative(disc);
  BigRational lead = disc.back();
  std::vector<long double> coeffs;
  for (auto& x : disc) coeffs.push_back(static_cast<long double>(BigRational(x / lead).get_d()));
  auto roots = durand_kerner(coeffs, 1e-12, 5000, &rep.iterations);
  auto eval_c = [](const UPoly& p, std::complex<long double> z, const BigRational& scale) {
    std::complex<long double> s = 0;
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
      s = s * z + static_cast<long double>(BigRational(p[k] / scale).get_d());
    return s;
  };
  BigRational c4lead = c4.back();
  for (auto r : roots) {
    SingularFiber f;
    f.g = {static_cast<double>(r.real()), static_cast<double>(r.imag())};
    f.residual = static_cast<double>(std::abs(eval_c(disc, r, lead)));
    f.abs_ddisc = static_cast<double>(std::abs(eval_c(ddisc, r, lead)));
    f.abs_c4 = static_cast<double>(std::abs(eval_c(c4, r, c4lead == 0 ? BigRational(1) : c4lead)));
    bool simple = f.abs_ddisc > 1e-6;
    bool mult = f.abs_c4 > 1e-8;
    f.kodaira = simple && mult ? "I1" : "unclassified(" + std::string(simple ? "1" : ">1") + ", " + (mult ? "0" : ">0") + ")";
    rep.fibers.push_back(f);
  }
  std::sort(rep.fibers.begin(), rep.fibers.end(), [](const auto& a, const auto& b) {
    return a.g.real() < b.g.real() || (a.g.real() == b.g.real() && a.g.imag() < b.g.imag());
  });
  std::vector<std::complex<double>> gs, as;
  auto add_distinct = [](std::vector<std::complex<double>>& v, std::complex<double> z) {
    for (auto w2 : v)
      if (std::abs(w2 - z) < 1e-8 * std::max(1.0, std::abs(z))) return;
    v.push_back(z);
  };
  for (auto& f : rep.fibers) {
    add_distinct(gs, f.g);
    add_distinct(as, 16.0 * f.g * f.g);
  }
  rep.distinct_g = static_cast<int>(gs.size());
  rep.distinct_A = static_cast<int>(as.size());
  return rep;
}

ETCurve et_curve(const BigRational& T) {
  if (T == 12 || T == -6 || T == -24) throw SingularCurve("et_curve: T in {12, -6, -24}");
  ETCurve e;
  e.T = T;
  e.two_torsion = {-(7 * T * (T + 12) + 240), -(T * (7 * T + 100) + 48), -(T * (7 * T + 116) + 432)};
  const auto& r = e.two_torsion;
  e.cubic = {-(r[0] + r[1] + r[2]), r[0] * r[1] + r[0] * r[2] + r[1] * r[2], -(r[0] * r[1] * r[2])};
  const BigRational &b = e.cubic[0], &c = e.cubic[1], &d = e.cubic[2];
  e.disc = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
  BigRational f = (T - 12) * (T + 6) * (T + 24);
  e.disc_formula = BigRational(BigInt(1) << 26) * f * f;
  return e;
}

BigInt cubic_discriminant(const BigInt& b, const BigInt& c, const BigInt& d) {
  return b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
}

long count_points_mod_p(const IntCurve& cv, long p) {
  BigInt disc = cubic_discriminant(cv.a2, cv.a4, cv.a6);
  BigInt pm = p;
  if (p == 2 || disc % pm == 0) throw BadReduction("count_points_mod_p: bad reduction at p = " + std::to_string(p));
  auto md = [&](const BigInt& x) {
    BigInt r = x % pm;
    if (r < 0) r += pm;
    return r.get_si();
  };
  long a = md(cv.a2), b = md(cv.a4), c = md(cv.a6);
  std::vector<int> squares(p, 0);
  for (long y = 0; y < p; ++y) squares[(y * y) % p]++;
  long count = 1;  // point at infinity
  for (long x = 0; x < p; ++x) {
    long f = ((x * x % p * x) % p + a * x % p * x % p + b * x % p + c) % p;
    count += squares[f];
  }
  return count;
}

std::vector<TorsionEntry> torsion_check(long t_lo, long t_hi) {
  std::vector<TorsionEntry> out;
  const long primes[] = {3, 5, 7, 11, 13};
  for (long t = t_lo; t <= t_hi; ++t) {
    if (t == 12 || t == -6 || t == -24) continue;
    ETCurve e = et_curve(BigRational(t));
    IntCurve cv{e.cubic[0].get_num(), e.cubic[1].get_num(), e.cubic[2].get_num()};
    TorsionEntry te;
    te.T = t;
    long gcd = 0;
    bool exact4 = false;
    for (long p : primes) {
      try {
        long n = count_points_mod_p(cv, p);
        te.counts[p] = n;
        if (n % 4 != 0) te.divisible_by_4 = false;
        gcd = std::gcd(gcd, n);
        exact4 = exact4 || n == 4;
      } catch (const BadReduction&) {
        te.bad_primes.push_back(p);
      }
    }
    te.verdict = te.divisible_by_4 && (exact4 || gcd == 4) ? "consistent with Z2+Z2" : "inconclusive";
    out.push_back(te);
  }
  return out;
}

BigInt c_mn(const BigInt& M, const BigInt& N) {
  return 4 * M * M + 3 * M * N * (4 + M) + 9 * N * N * (4 + M);
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace qrm
