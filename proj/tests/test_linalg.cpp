#include <omp.h>

#include <random>

#include "doctest.h"
#include "qrm/linalg.hpp"

using namespace qrm;

namespace {

SymMatrix random_sym(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

double reconstruction_error(const SymMatrix& m, const EigenResult& e) {
  double worst = 0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      double s = 0;
      for (int k = 0; k < m.n; ++k) s += e.vectors(k, i) * e.values[k] * e.vectors(k, j);
      worst = std::max(worst, std::abs(s - m(i, j)));
    }
  return worst;
}

double orthonormality_error(const EigenResult& e) {
  const int n = e.vectors.n;
  double worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      worst = std::max(worst, std::abs(dot(&e.vectors.a[a * n], &e.vectors.a[b * n], n) - (a == b)));
  return worst;
}

}  // namespace

TEST_CASE("small cases") {
  SymMatrix x(2);
  x(0, 1) = x(1, 0) = 1;
  for (auto e : {sym_eig_serial(x), sym_eig(x)}) {
    CHECK(e.values[0] == doctest::Approx(-1));
    CHECK(e.values[1] == doctest::Approx(1));
  }
  SymMatrix d(3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  auto e = sym_eig(d);
  CHECK(e.values == std::vector<double>{1, 2, 3});
}

TEST_CASE("reconstruction of a random 50x50 matrix") {
  SymMatrix m = random_sym(50, 17);
  for (auto e : {sym_eig_serial(m), sym_eig(m)}) {
    CHECK(reconstruction_error(m, e) < 1e-9);
    CHECK(orthonormality_error(e) < 1e-12);
    for (size_t k = 1; k < e.values.size(); ++k) CHECK(e.values[k - 1] <= e.values[k]);
  }
}

TEST_CASE("parallel kernel agrees with the serial reference") {
  for (int n : {7, 32, 81}) {
    SymMatrix m = random_sym(n, 100 + n);
    auto s = sym_eig_serial(m), p = sym_eig(m);
    for (int k = 0; k < n; ++k) CHECK(std::abs(s.values[k] - p.values[k]) < 1e-11);
    // eigenvectors up to sign
    for (int k = 0; k < n; ++k) {
      double c = std::abs(dot(&s.vectors.a[k * n], &p.vectors.a[k * n], n));
      CHECK(std::abs(c - 1) < 1e-9);
    }
  }
}

TEST_CASE("thread count does not change the result") {
  SymMatrix m = random_sym(40, 3);
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  auto a = sym_eig(m);
  omp_set_num_threads(4);
  auto b = sym_eig(m);
  omp_set_num_threads(saved);
  CHECK(a.values == b.values);
}

TEST_CASE("trace and Frobenius norm are preserved") {
  SymMatrix m = random_sym(30, 5);
  auto e = sym_eig(m);
  double tr = 0, sum = 0, sq = 0;
  for (int i = 0; i < 30; ++i) tr += m(i, i);
  for (double v : e.values) {
    sum += v;
    sq += v * v;
  }
  CHECK(sum == doctest::Approx(tr).epsilon(1e-12));
  CHECK(std::sqrt(sq) == doctest::Approx(m.frobenius()).epsilon(1e-12));
}

TEST_CASE("no convergence is reported") {
  SymMatrix m = random_sym(30, 6);
  CHECK_THROWS_AS(sym_eig_serial(m, 1e-15, 1), NoConvergence);
  CHECK_THROWS_AS(sym_eig(m, 1e-15, 1), NoConvergence);
}
