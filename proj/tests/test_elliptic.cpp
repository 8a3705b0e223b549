#include <cmath>

#include "doctest.h"
#include "qrm/elliptic.hpp"
#include "qrm/symmetry_poly.hpp"

using namespace qrm;

namespace {

const std::vector<std::string> kGD{"g", "Delta"};

MultiPoly var(const std::string& v) { return MultiPoly::variable(v, kGD); }

BigRational disc3(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& d) {
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

std::vector<BigRational> p3_coeffs(const BigRational& g, const BigRational& d) {
  return p_poly(3).specialize("g", g).specialize("Delta", d).drop_unused_vars().to_univariate("x");
}

long brute_count(long a2, long a4, long a6, long p) {
  long n = 1;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) {
      long r = ((x * x % p * x + a2 * x % p * x + a4 * x + a6 - y * y) % p + p) % p;
      n += r == 0;
    }
  return n;
}

std::complex<long double> horner(const std::vector<long double>& c, std::complex<long double> z) {
  std::complex<long double> s = 0;
  for (size_t k = c.size(); k-- > 0;) s = s * z + c[k];
  return s;
}

}  // namespace

TEST_CASE("Weierstrass data") {
  WeierstrassCurve w = reduce_ell3();
  CHECK(w.consistent);
  MultiPoly g = var("g"), d = var("Delta");
  MultiPoly g2 = g * g, g4 = g2 * g2, d2 = d * d;
  CHECK(w.c4 == (g4 * rat(4) - d2) * rat(192));
  CHECK(w.c4 == w.A * w.A * rat(3) - w.B);
  CHECK(w.c6 == d2 * rat(-3456));
  CHECK(w.a2 == (d2 + g2 * rat(2) * (g2 * rat(2) + MultiPoly(kGD, rat(1)))) * rat(3));
  CHECK(w.disc == (w.c4.pow(3) - w.c6.pow(2)) * rat(64 * 19683));
  MultiPoly c4a = w.A * w.A * rat(3) - w.B;
  CHECK(w.disc == (c4a.pow(3) - w.B.pow(2) * rat(324)) * rat(64 * 19683));
  CHECK(w.c6.specialize("Delta", rat(0)).is_zero());
}

TEST_CASE("discriminant against the cubic in x") {
  // roots scale by 4g^2 and the cubic has leading coefficient 64 g^6
  WeierstrassCurve w = reduce_ell3();
  BigRational six12 = BigRational(2176782336);
  for (auto [g, d] : {std::pair{rat(1, 2), rat(1, 4)}, std::pair{rat(1), rat(1)}, std::pair{rat(3, 7), rat(2, 5)},
                      std::pair{rat(5, 3), rat(1, 9)}}) {
    auto c = p3_coeffs(g, d);
    REQUIRE(c.size() == 4);
    BigRational dx = disc3(c[3], c[2], c[1], c[0]);
    BigRational g12 = g * g * g * g * g * g;
    g12 *= g12;
    BigRational want = six12 * 16 * dx / (BigRational(4096) * g12);
    CHECK(w.disc.eval({{"g", g}, {"Delta", d}}) == want);
    WeierstrassCurve s = reduce_ell3(g, d);
    CHECK(s.disc.constant_term() == want);
  }
}

TEST_CASE("nodal fiber") {
  auto c = p3_coeffs(rat(1, 2), rat(1, 4));
  // (x + 29/16)(x + 5/16)^2 expanded
  BigRational r = rat(29, 16), s = rat(5, 16);
  std::vector<BigRational> want{r * s * s, s * s + 2 * r * s, r + 2 * s, rat(1)};
  for (int k = 0; k < 4; ++k) CHECK(c[k] / c[3] == want[k]);
  CHECK(reduce_ell3(rat(1, 2), rat(1, 4)).disc.is_zero());
  CHECK_FALSE(reduce_ell3(rat(1, 2), rat(1, 3)).disc.is_zero());
  for (double x : {-29.0 / 16, -5.0 / 16}) CHECK(std::abs(p_eval(3, x, 0.5, 0.25)) < 1e-12);
}

TEST_CASE("singular fibers") {
  FiberReport fr = singular_fibers(0.25);
  CHECK(fr.distinct_g <= 12);
  CHECK(fr.distinct_A <= 6);
  CHECK(fr.fibers.size() == 12);
  auto dpoly = reduce_ell3().disc.specialize("Delta", rat(1, 4)).drop_unused_vars().to_univariate("g");
  std::vector<long double> dc;
  for (const auto& q : dpoly) dc.push_back(static_cast<long double>(q.get_d()));
  long double lead = std::abs(dc.back());
  bool half = false;
  for (const auto& f : fr.fibers) {
    CHECK(f.kodaira == "I1");
    CHECK(f.abs_c4 > 1e-8);
    std::complex<long double> z(f.g.real(), f.g.imag());
    CHECK(std::abs(horner(dc, z)) / lead < 1e-8);
    half = half || std::abs(f.g - std::complex<double>(0.5, 0)) < 1e-10;
  }
  CHECK(half);
  CHECK_THROWS_AS(singular_fibers(0.0), std::invalid_argument);
}

TEST_CASE("Durand-Kerner") {
  auto r = durand_kerner({-6, 11, -6, 1});
  std::vector<double> re;
  for (auto z : r) {
    CHECK(std::abs(z.imag()) < 1e-10);
    re.push_back(static_cast<double>(z.real()));
  }
  std::sort(re.begin(), re.end());
  for (int k = 0; k < 3; ++k) CHECK(std::abs(re[k] - (k + 1)) < 1e-10);
  auto u = durand_kerner({-1, 0, 0, 0, 0, 1});
  for (auto z : u) {
    CHECK(std::abs(std::abs(z) - 1.0L) < 1e-10);
    CHECK(std::abs(std::pow(z, 5) - 1.0L) < 1e-9);
  }
  auto i = durand_kerner({2, 0, 2});
  for (auto z : i) CHECK(std::abs(std::abs(z.imag()) - 1.0L) < 1e-10);
  CHECK_THROWS_AS(durand_kerner({1, 0, 1}, 1e-30, 3), RootFindingStall);
}

TEST_CASE("E(T) family") {
  ETCurve e0 = et_curve(rat(0));
  std::vector<BigRational> xs(e0.two_torsion.begin(), e0.two_torsion.end());
  std::sort(xs.begin(), xs.end());
  CHECK(xs == std::vector<BigRational>{rat(-432), rat(-240), rat(-48)});
  ETCurve e1 = et_curve(rat(1));
  CHECK(e1.disc == BigRational(67108864) * 121 * 49 * 625);
  for (long t = -100; t <= 100; ++t) {
    if (t == 12 || t == -6 || t == -24) {
      CHECK_THROWS_AS(et_curve(rat(t)), SingularCurve);
      continue;
    }
    ETCurve e = et_curve(rat(t));
    BigRational T = rat(t);
    std::array<BigRational, 3> x{-(7 * T * (T + 12) + 240), -(T * (7 * T + 100) + 48), -(T * (7 * T + 116) + 432)};
    BigRational v = (x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2]);
    CHECK(e.disc == v * v);
    CHECK(e.disc == e.disc_formula);
    CHECK(e.cubic[0] == -(x[0] + x[1] + x[2]));
    CHECK(e.cubic[1] == x[0] * x[1] + x[0] * x[2] + x[1] * x[2]);
    CHECK(e.cubic[2] == -(x[0] * x[1] * x[2]));
  }
  CHECK(et_curve(rat(1, 3)).disc == et_curve(rat(1, 3)).disc_formula);
}

TEST_CASE("point counts") {
  CHECK(count_points_mod_p({-0 + 0, -1, 0}, 3) == 4);
  CHECK(count_points_mod_p({0, 1, 0}, 5) == 4);
  CHECK(count_points_mod_p({-1, 3, 0}, 5) == 4);
  for (long p : {3L, 5L, 7L, 11L, 13L})
    for (long a2 = -2; a2 <= 2; ++a2)
      for (long a4 = -3; a4 <= 3; ++a4)
        for (long a6 : {0L, 1L, 5L}) {
          IntCurve c{a2, a4, a6};
          BigInt disc = cubic_discriminant(c.a2, c.a4, c.a6);
          BigInt r = disc % p;
          if (r == 0) {
            CHECK_THROWS_AS(count_points_mod_p(c, p), BadReduction);
            continue;
          }
          long n = count_points_mod_p(c, p);
          CHECK(n == brute_count(a2, a4, a6, p));
          CHECK(std::abs(n - p - 1) <= 2 * std::sqrt(static_cast<double>(p)));
        }
  CHECK_THROWS_AS(count_points_mod_p({0, -1, 0}, 2), BadReduction);
}

TEST_CASE("torsion consistency") {
  for (const auto& te : torsion_check(-30, 30)) {
    CHECK(te.divisible_by_4);
    for (auto [p, n] : te.counts) CHECK(n % 4 == 0);
    if (((te.T % 3) + 3) % 3 != 0) CHECK(te.verdict == "consistent with Z2+Z2");
  }
  auto one = torsion_check(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].counts.at(3) == 4);
}

TEST_CASE("C(M, N) squares") {
  for (long t = -50; t <= 50; ++t) {
    BigInt c = c_mn(BigInt(t), BigInt(4));
    CHECK(c == 16 * BigInt(t + 6) * BigInt(t + 6));
    CHECK(is_perfect_square(c));
  }
  CHECK_FALSE(is_perfect_square(BigInt(-4)));
  CHECK_FALSE(is_perfect_square(BigInt(2)));
}
