#pragma once

#include <stdexcept>
#include <vector>

namespace qrm {

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dense row-major square matrix
struct SymMatrix {
  int n = 0;
  std::vector<double> a;
  SymMatrix() = default;
  explicit SymMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  double frobenius() const;
  double asymmetry() const;  // max |a_ij - a_ji|
};

struct EigenResult {
  std::vector<double> values;  // ascending
  SymMatrix vectors;           // row k is the eigenvector for values[k]
  int sweeps = 0;
};

// cyclic-by-row Jacobi, single thread; the reference implementation
EigenResult sym_eig_serial(const SymMatrix& m, double rel_tol = 1e-12, int max_sweeps = 100);
// round-robin parallel ordering: n/2 disjoint rotations per step applied concurrently
EigenResult sym_eig(const SymMatrix& m, double rel_tol = 1e-12, int max_sweeps = 100);

std::vector<double> mat_vec(const SymMatrix& m, const double* v);
double dot(const double* x, const double* y, int n);

}  // namespace qrm
