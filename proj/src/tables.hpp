#pragma once

#include <array>

namespace qrm::tables {

// polynomial strings over x, g, D
const char* p_table(int ell);
// alpha, beta, delta strings over g, D, a, ad
std::array<const char*, 3> j_table(int ell);

}  // namespace qrm::tables
