#include <random>
#include <set>

#include "doctest.h"
#include "qrm/constraint_poly.hpp"

using namespace qrm;

namespace {

const std::vector<std::string> UV{"u", "v"};

// P^{(N, eps)}_N(u, v) by the scalar three-term recurrence, independent of MultiPoly
BigRational p_scalar(int N, const BigRational& eps, const BigRational& u, const BigRational& v) {
  BigRational p0 = 1, p1 = u + v - 1 - eps;
  if (N == 0) return p0;
  for (int k = 2; k <= N; ++k) {
    BigRational p2 = (k * u + v - k * (k + eps)) * p1 - BigRational(k * (k - 1) * (N - k + 1)) * u * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

BigRational eval_uv(const MultiPoly& p, const BigRational& u, const BigRational& v) {
  return p.eval({{"u", u}, {"v", v}});
}

}  // namespace

TEST_CASE("stated constraint polynomials") {
  MultiPoly e = MultiPoly::variable("eps", {"u", "v", "eps"});
  MultiPoly u = MultiPoly::variable("u", {"u", "v", "eps"}), v = MultiPoly::variable("v", {"u", "v", "eps"});
  MultiPoly one({"u", "v", "eps"}, 1);
  CHECK(constraint_P_symbolic(3, 1) == u + v - one - e);
  MultiPoly p2 = u * u * rat(2) + u * v * rat(3) + v * v - (one * rat(2) + e) * u * rat(4) - (e * rat(3) + one * rat(5)) * v +
                 (e + one) * (e + one * rat(2)) * rat(2);
  CHECK(constraint_P_symbolic(2, 2) == p2);
  MultiPoly p4 = constraint_P(4, rat(-2), 4);
  CHECK(p4.coeff(Mono{{4, 0}}) == 24);
  CHECK(p4.coeff(Mono{{3, 1}}) == 50);
  CHECK(p4.total_degree() == 4);
}

TEST_CASE("scalar recurrence oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(1, 40), d(1, 7);
  for (int N = 0; N <= 8; ++N)
    for (int t = 0; t < 5; ++t) {
      BigRational eps = rat(c(rng) - 20, d(rng)), u = rat(c(rng), d(rng)), v = rat(c(rng), d(rng));
      CHECK(eval_uv(constraint_P(N, eps, N), u, v) == p_scalar(N, eps, u, v));
    }
}

TEST_CASE("degrees") {
  for (int k = 0; k <= 6; ++k) CHECK(constraint_P(6, rat(1), k).total_degree() == k);
  for (int l = 0; l <= 5; ++l) CHECK(quotient_A(3, l).poly.total_degree() == l);
}

TEST_CASE("K coefficients") {
  auto k = coeff_K(1, rat(1), rat(1, 2), rat(1));
  CHECK(k.values[1] == 0);
  CHECK_THROWS_AS(coeff_K(1, rat(1), rat(0), rat(1)), ZeroCoupling);

  // exact values vs binary64 re-implementation
  auto ex = coeff_K(2, rat(0), rat(1), rat(1));
  auto fl = k_values<double>(2, 0.0, 1.0, 1.0);
  for (int n = 0; n <= 2; ++n) {
    CHECK(sign(ex.values[n]) == (fl[n] > 0) - (fl[n] < 0));
    CHECK(ex.values[n].get_d() == doctest::Approx(fl[n]).epsilon(1e-14));
  }
}

TEST_CASE("K_N vanishes exactly with P_N") {
  // K_N is P_N((2g)^2, Delta^2) up to a nonzero factor, so their ratio is constant in Delta
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(1, 30), d(1, 6);
  for (int t = 0; t < 50; ++t) {
    int N = 1 + t % 5;
    BigRational eps = rat(t % 4), g = rat(c(rng), d(rng) * 4), delta = rat(c(rng), d(rng));
    BigRational k = coeff_K(N, eps, g, delta).values[N];
    BigRational p = p_scalar(N, eps, 4 * g * g, delta * delta);
    CHECK((k == 0) == (p == 0));
    if (p != 0) {
      BigRational ratio = k / p;
      BigRational k2 = coeff_K(N, eps, g, delta + 1).values[N];
      BigRational p2 = p_scalar(N, eps, 4 * g * g, (delta + 1) * (delta + 1));
      if (p2 != 0) CHECK(k2 / p2 == ratio);
    }
  }
  // at a constraint point both vanish
  CHECK(coeff_K(1, rat(1), rat(1, 2), rat(1)).values[1] == 0);
  CHECK(p_scalar(1, rat(1), rat(1), rat(1)) == 0);
}

TEST_CASE("quotient A closed forms") {
  MultiPoly u = MultiPoly::variable("u", UV), v = MultiPoly::variable("v", UV);
  for (int N = 0; N <= 6; ++N) {
    CHECK(quotient_A(N, 0).poly == MultiPoly(UV, 1));
    CHECK(quotient_A(N, 1).poly == u * rat(N + 1) + v);
    CHECK(quotient_A(N, 2).poly == u * u * rat((N + 1) * (N + 2)) + u * v * rat(2 * N + 3) + v * (MultiPoly(UV, 1) + v));
  }
}

TEST_CASE("exact divisibility") {
  auto r = verify_divisibility(2, 2);
  CHECK(r.remainder_zero);
  CHECK(r.quotient == quotient_A(2, 2).poly);
  CHECK(verify_divisibility(1, 0).quotient == MultiPoly(UV, 1));
  for (int l = 0; l <= 8; ++l)
    for (int N = 1; N <= 12; ++N) {
      auto d = verify_divisibility(N, l);
      CHECK_MESSAGE(d.ok(), "N=" << N << " l=" << l);
    }
  // independent check at rational points
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> c(1, 50);
  for (int t = 0; t < 30; ++t) {
    int N = 1 + t % 6, l = t % 5;
    BigRational u = rat(c(rng), 7), v = rat(c(rng), 3);
    CHECK(p_scalar(N + l, rat(-l), u, v) == eval_uv(quotient_A(N, l).poly, u, v) * p_scalar(N, rat(l), u, v));
  }
}

TEST_CASE("quotient A is positive and polynomial in N") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> r(1e-3, 100.0);
  for (int l = 0; l <= 5; ++l) {
    MultiPoly in_n = quotient_A_in_N(l);
    CHECK(in_n.degree("N") == l);
    for (int N = l + 1; N <= l + 4; ++N) CHECK(in_n.specialize("N", rat(N)).drop_unused_vars() == quotient_A(N, l).poly);
    for (int N = 0; N <= 4; ++N) {
      const MultiPoly& a = quotient_A(N, l).poly;
      for (int t = 0; t < 1000; ++t) {
        double val = a.eval_double({{"u", r(rng)}, {"v", r(rng)}});
        if (!(val > 0)) {
          CHECK(val > 0);
          break;
        }
      }
    }
  }
}

TEST_CASE("Juddian roots in g") {
  auto r = juddian_g_values(1, 1, rat(1));
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0] - 0.5) < 1e-13);
  CHECK(juddian_g_values(1, 1, rat(2)).empty());
  CHECK(juddian_g_values(3, 1, rat(1, 2)).size() == 3);
}

TEST_CASE("omega curves") {
  auto a = omega_curve_samples(1, 1, {0.5});
  REQUIRE(a.size() == 1);
  CHECK(a[0].delta == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(omega_curve_samples(1, 1, {0.8}).empty());

  // count per g vs Sturm sequence on P_2 as a polynomial in Delta
  std::vector<double> grid;
  for (int k = 0; k < 100; ++k) grid.push_back(0.01 + k * 0.012);
  auto pts = omega_curve_samples(2, 1, grid);
  MultiPoly base = constraint_in_g_delta(2, rat(1));
  std::set<int> seen;
  for (double g : grid) {
    int n = 0;
    for (auto& p : pts) n += p.g == g;
    UPoly up = base.specialize("g", from_decimal(g)).drop_unused_vars().embed({"Delta"}).to_univariate("Delta");
    SturmSequence s(squarefree_part(up));
    CHECK(n == s.count(rat(0), cauchy_bound(up)));
    CHECK(n <= 2);
    seen.insert(n);
  }
  CHECK(seen.size() >= 2);
}
