#pragma once

#include "qrm/weyl.hpp"

#include <cstdint>
#include <stdexcept>

namespace qrm {

struct NullspaceDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DerivedJ {
  int ell = 0;
  uint64_t seed = 0;
  Mat2Weyl j;  // Tilde picture, beta has leading term (-2g)^l a^l
  int sample_points = 0;
  int unknowns = 0;
  bool commutes = false;
  bool squares = false;  // J^2 = p_l(H) with p_l from the determinant
  std::string diagnosis;
};

// exact nullspace of a rational matrix (rows x cols), one basis vector per free column
std::vector<std::vector<BigRational>> rational_nullspace(std::vector<std::vector<BigRational>> m, size_t cols);

// solve [H, P Q] = 0 with deg Q <= l at sample points and interpolate in (g, Delta)
DerivedJ derive_J(int ell, uint64_t seed = 0);

}  // namespace qrm
