#include <cmath>

#include "doctest.h"
#include "qrm/constraint_poly.hpp"
#include "qrm/juddian.hpp"
#include "qrm/symmetry_poly.hpp"

using namespace qrm;

namespace {

void check_poly(const std::vector<long double>& got, std::vector<long double> want, long double tol = 1e-15L) {
  while (!want.empty() && want.back() == 0) want.pop_back();
  std::vector<long double> g = got;
  while (!g.empty() && std::fabs(g.back()) < tol) g.pop_back();
  REQUIRE(g.size() == want.size());
  for (size_t k = 0; k < want.size(); ++k) CHECK(std::fabs(g[k] - want[k]) < tol);
}

double fdist(const JuddianFunction& x, const JuddianFunction& y) {
  auto d = x.plus(y, -1).flat(std::max(x.max_degree(), y.max_degree()));
  long double s = 0;
  for (auto v : d) s += v * v;
  return static_cast<double>(std::sqrt(s));
}

}  // namespace

TEST_CASE("Psi and Phi at the first constraint point") {
  JuddianFunction psi = build_juddian(1, 1, rat(1, 2), rat(1), Which::Psi);
  check_poly(psi.comp[0].part[0], {1.5L, 1});
  check_poly(psi.comp[1].part[0], {1});
  CHECK(psi.comp[0].part[1].empty());
  JuddianFunction phi = build_juddian(1, 1, rat(1, 2), rat(1), Which::Phi);
  check_poly(phi.comp[0].part[1], {2.5L, -1});
  check_poly(phi.comp[1].part[1], {1.75L, -2, 1});
}

TEST_CASE("degrees") {
  for (int N = 1; N <= 3; ++N)
    for (double g : juddian_g_values(N, 2, rat(1))) {
      JuddianFunction psi = build_juddian(N, 2, g, 1.0L, Which::Psi);
      auto trimmed = [](std::vector<long double> v) {
        while (!v.empty() && std::fabs(v.back()) < 1e-14L) v.pop_back();
        return static_cast<int>(v.size()) - 1;
      };
      CHECK(trimmed(psi.comp[0].part[0]) == N);
      CHECK(trimmed(psi.comp[1].part[0]) == N - 1);
    }
}

TEST_CASE("constraint is enforced") {
  CHECK_THROWS_AS(build_juddian(1, 1, 0.6L, 1.0L, Which::Psi), ConstraintViolated);
  CHECK(juddian_constraint_residual(1, 1, 0.5L, 1.0L, Which::Psi) < 1e-15L);
}

TEST_CASE("parity in the Bargmann picture") {
  JuddianFunction f;
  f.g = 0.5L;
  f.comp[0].part[1] = {0, 1};  // e^{gz} z
  JuddianFunction r = bargmann_apply(mat_scalar(w_parity()), f);
  check_poly(r.comp[0].part[0], {0, -1});
  CHECK(r.comp[0].part[1].empty());
}

TEST_CASE("Juddian solutions are eigenfunctions of the Tilde Hamiltonian") {
  for (int l = 0; l <= 6; ++l)
    for (int N = 1; N <= 3; ++N)
      for (double g : juddian_g_values(N, l, rat(1))) {
        long double lambda = N + l / 2.0L - static_cast<long double>(g) * g;
        for (Which w : {Which::Psi, Which::Phi}) {
          JuddianFunction f = build_juddian(N, l, g, 1.0L, w);
          JuddianFunction hf = bargmann_apply(build_H(l, Picture::Tilde), f);
          double err = fdist(hf, f.scaled(lambda));
          CHECK_MESSAGE(err < 1e-9 * std::max(1.0, fdist(hf, f.scaled(0))), "l=" << l << " N=" << N << " g=" << g);
        }
      }
}

TEST_CASE("action of J_1 at (1/2, 1)") {
  const long double g = 0.5L, d = 1.0L;
  JuddianFunction psi = build_juddian(1, 1, g, d, Which::Psi), phi = build_juddian(1, 1, g, d, Which::Phi);
  Mat2Weyl j = build_J(1);
  CHECK(fdist(bargmann_apply(j, psi), phi.scaled(2 * g)) < 1e-15);
  CHECK(fdist(bargmann_apply(j, phi), psi.scaled((8 * g * g + d * d) / (2 * g))) < 1e-15);
  ActionConstants a = action_constants(1, 1, g, d);
  CHECK(std::fabs(a.alpha - 3) < 1e-15L);
  CHECK(std::fabs(a.beta - 1) < 1e-15L);
  // p_1(5/4; 1/2, 1) = 4 (1/4)(5/4) + 4/16 + 1/2 + 1
  BigRational p = p_from_table(1).poly.eval({{"x", rat(5, 4)}, {"g", rat(1, 2)}, {"Delta", rat(1)}});
  CHECK(p == 3);
  CHECK(std::fabs(a.alpha * a.beta - 3) < 1e-15L);
}

TEST_CASE("alpha beta = p at every Juddian point") {
  for (int l = 1; l <= 6; ++l)
    for (int N = 1; N <= 3; ++N)
      for (double g : juddian_g_values(N, l, rat(1))) {
        ActionConstants a = action_constants(N, l, g, 1.0L);
        CHECK_MESSAGE(a.product_rel_error < 1e-8L, "l=" << l << " N=" << N << " g=" << g);
        CHECK(a.residual_alpha < 1e-9L);
        CHECK(a.residual_beta < 1e-9L);
      }
  auto g2 = juddian_g_values(1, 2, rat(1));
  REQUIRE(!g2.empty());
  ActionConstants a = action_constants(1, 2, g2[0], 1.0L);
  long double p = p_eval(2, 1 + 1 - static_cast<long double>(g2[0]) * g2[0], g2[0], 1.0L);
  CHECK(std::fabs(a.alpha * a.beta - p) < 1e-8L);
}

TEST_CASE("parity-definite solutions") {
  ParitySolutions ps = parity_solutions(1, 1, 0.5L, 1.0L);
  CHECK(std::fabs(ps.mu - std::sqrt(3.0L)) < 1e-15L);
  CHECK(ps.residual_plus < 1e-12L);
  CHECK(ps.residual_minus < 1e-12L);
  CHECK(std::fabs(ps.inner) < 1e-6L);

  // P_{+-} = (1 +- J/mu)/2 on span{Psi, Phi}, where J Psi = beta Phi and J Phi = alpha Psi
  ActionConstants a = action_constants(1, 1, 0.5L, 1.0L);
  long double m[2][2] = {{0, a.alpha / ps.mu}, {a.beta / ps.mu, 0}};
  for (int s : {1, -1}) {
    long double p[2][2], p2[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) p[i][j] = 0.5L * ((i == j) + s * m[i][j]);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) p2[i][j] = p[i][0] * p[0][j] + p[i][1] * p[1][j];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(std::fabs(p2[i][j] - p[i][j]) < 1e-8L);
  }
}

TEST_CASE("Psi and Phi are not eigenvectors of J, their parity combinations are") {
  for (int l = 1; l <= 4; ++l)
    for (int N = 1; N <= 2; ++N)
      for (double g : juddian_g_values(N, l, rat(1))) {
        Mat2Weyl j = build_J(l);
        for (Which w : {Which::Psi, Which::Phi}) {
          JuddianFunction f = build_juddian(N, l, g, 1.0L, w);
          CHECK(fit_scalar(bargmann_apply(j, f), f).residual > 1e-2L);
        }
        ParitySolutions ps = parity_solutions(N, l, g, 1.0L);
        CHECK(ps.residual_plus < 1e-9L);
        CHECK(ps.residual_minus < 1e-9L);
        long double p = p_eval(l, N + l / 2.0L - static_cast<long double>(g) * g, g, 1.0L);
        CHECK(std::fabs(ps.mu * ps.mu - p) < 1e-8L * std::max(1.0L, p));
      }
}
