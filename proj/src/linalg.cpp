#include "qrm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qrm {

double SymMatrix::frobenius() const {
  double s = 0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

double SymMatrix::asymmetry() const {
  double d = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d = std::max(d, std::fabs((*this)(i, j) - (*this)(j, i)));
  return d;
}

double dot(const double* x, const double* y, int n) {
  double s = 0;
  for (int i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

std::vector<double> mat_vec(const SymMatrix& m, const double* v) {
  std::vector<double> out(m.n);
  for (int i = 0; i < m.n; ++i) out[i] = dot(&m.a[static_cast<size_t>(i) * m.n], v, m.n);
  return out;
}

namespace {

double off_norm(const SymMatrix& a) {
  double s = 0;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

struct Rot {
  double c = 1, s = 0;
  bool active = false;
};

Rot rotation(const SymMatrix& a, int p, int q) {
  Rot r;
  double apq = a(p, q);
  if (apq == 0) return r;
  double theta = (a(q, q) - a(p, p)) / (2 * apq);
  double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
  r.c = 1 / std::sqrt(t * t + 1);
  r.s = t * r.c;
  r.active = true;
  return r;
}

// A <- J^T A J on columns p, q
void rotate_cols(SymMatrix& a, int p, int q, const Rot& r) {
  for (int k = 0; k < a.n; ++k) {
    double akp = a(k, p), akq = a(k, q);
    a(k, p) = r.c * akp - r.s * akq;
    a(k, q) = r.s * akp + r.c * akq;
  }
}
void rotate_rows(SymMatrix& a, int p, int q, const Rot& r) {
  double* rp = &a.a[static_cast<size_t>(p) * a.n];
  double* rq = &a.a[static_cast<size_t>(q) * a.n];
  for (int k = 0; k < a.n; ++k) {
    double x = rp[k], y = rq[k];
    rp[k] = r.c * x - r.s * y;
    rq[k] = r.s * x + r.c * y;
  }
}

EigenResult finish(SymMatrix& a, SymMatrix& vt, int sweeps) {
  const int n = a.n;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
  EigenResult r;
  r.sweeps = sweeps;
  r.vectors = SymMatrix(n);
  for (int k = 0; k < n; ++k) {
    r.values.push_back(a(order[k], order[k]));
    std::copy_n(&vt.a[static_cast<size_t>(order[k]) * n], n, &r.vectors.a[static_cast<size_t>(k) * n]);
  }
  return r;
}

SymMatrix identity(int n) {
  SymMatrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1;
  return v;
}

}  // namespace

EigenResult sym_eig_serial(const SymMatrix& m, double rel_tol, int max_sweeps) {
  SymMatrix a = m;
  const int n = a.n;
  SymMatrix vt = identity(n);  // rows are eigenvectors
  const double target = rel_tol * std::max(m.frobenius(), 1e-300);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_norm(a) < target) return finish(a, vt, sweep);
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        Rot r = rotation(a, p, q);
        if (!r.active) continue;
        rotate_cols(a, p, q, r);
        rotate_rows(a, p, q, r);
        rotate_rows(vt, p, q, r);
      }
  }
  if (off_norm(a) < target) return finish(a, vt, max_sweeps);
  throw NoConvergence("sym_eig: no convergence after " + std::to_string(max_sweeps) + " sweeps");
}

EigenResult sym_eig(const SymMatrix& m, double rel_tol, int max_sweeps) {
  SymMatrix a = m;
  const int n = a.n;
  SymMatrix vt = identity(n);
  const double target = rel_tol * std::max(m.frobenius(), 1e-300);
  // round-robin tournament over an even number of players; index n is a bye when n is odd
  const int players = n + (n & 1);
  std::vector<int> ring(players);
  std::iota(ring.begin(), ring.end(), 0);
  std::vector<std::pair<int, int>> pairs(players / 2);
  std::vector<Rot> rots(players / 2);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_norm(a) < target) return finish(a, vt, sweep);
    for (int round = 0; round < players - 1; ++round) {
      for (int k = 0; k < players / 2; ++k) {
        int p = ring[k], q = ring[players - 1 - k];
        pairs[k] = {std::min(p, q), std::max(p, q)};
      }
      const int np = players / 2;
#pragma omp parallel
      {
#pragma omp for schedule(static)
        for (int k = 0; k < np; ++k) {
          auto [p, q] = pairs[k];
          rots[k] = q < n ? rotation(a, p, q) : Rot{};
        }
        // disjoint pairs: row updates touch distinct rows
#pragma omp for schedule(static)
        for (int k = 0; k < np; ++k)
          if (rots[k].active) {
            rotate_rows(a, pairs[k].first, pairs[k].second, rots[k]);
            rotate_rows(vt, pairs[k].first, pairs[k].second, rots[k]);
          }
        // then columns, each thread owning a band of rows
#pragma omp for schedule(static)
        for (int row = 0; row < n; ++row) {
          double* r = &a.a[static_cast<size_t>(row) * n];
          for (int k = 0; k < np; ++k) {
            if (!rots[k].active) continue;
            auto [p, q] = pairs[k];
            double x = r[p], y = r[q];
            r[p] = rots[k].c * x - rots[k].s * y;
            r[q] = rots[k].s * x + rots[k].c * y;
          }
        }
      }
      // rotate the ring keeping position 0 fixed
      std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
    }
  }
  if (off_norm(a) < target) return finish(a, vt, max_sweeps);
  throw NoConvergence("sym_eig: no convergence after " + std::to_string(max_sweeps) + " sweeps");
}

}  // namespace qrm
