#include "qrm/derive_j.hpp"

#include <random>
#include <set>

#include "qrm/symmetry_poly.hpp"

namespace qrm {

std::vector<std::vector<BigRational>> rational_nullspace(std::vector<std::vector<BigRational>> m, size_t cols) {
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    BigRational inv = 1 / m[r][c];
    for (size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      BigRational f = m[i][c];
      for (size_t k = c; k < cols; ++k)
        if (m[r][k] != 0) m[i][k] -= f * m[r][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::set<int> piv(pivot_col.begin(), pivot_col.end());
  std::vector<std::vector<BigRational>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (piv.count(static_cast<int>(f))) continue;
    std::vector<BigRational> v(cols, BigRational(0));
    v[f] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

struct Ansatz {
  std::vector<std::pair<int, WKey>> cols;  // (entry, P ad^m a^n)
  std::vector<std::pair<int, WKey>> rows;
  std::vector<std::vector<std::pair<size_t, MultiPoly>>> col_entries;  // row index -> coefficient
  size_t beta_lead = 0;
};

Ansatz build_ansatz(int ell) {
  Ansatz a;
  Mat2Weyl h = build_H(ell, Picture::Tilde);
  std::map<std::pair<int, WKey>, size_t> row_index;
  std::vector<Mat2Weyl> comms;
  for (int entry = 0; entry < 4; ++entry)
    for (int d = 0; d <= ell; ++d)
      for (int m = d; m >= 0; --m) {
        WKey k{1, static_cast<uint16_t>(m), static_cast<uint16_t>(d - m)};
        if (entry == 1 && m == 0 && d == ell) a.beta_lead = a.cols.size();
        a.cols.push_back({entry, k});
        Mat2Weyl e;
        e.e[entry] = WeylElement::monomial(k, MultiPoly(gd_vars(), 1));
        comms.push_back(commutator(h, e));
      }
  for (auto& c : comms) {
    std::vector<std::pair<size_t, MultiPoly>> col;
    for (int entry = 0; entry < 4; ++entry)
      for (const auto& [k, coef] : c.e[entry].terms()) {
        auto key = std::make_pair(entry, k);
        auto it = row_index.find(key);
        if (it == row_index.end()) {
          it = row_index.emplace(key, a.rows.size()).first;
          a.rows.push_back(key);
        }
        col.emplace_back(it->second, coef);
      }
    a.col_entries.push_back(std::move(col));
  }
  return a;
}

std::vector<BigRational> solve_at(const Ansatz& a, int ell, const BigRational& g, const BigRational& delta) {
  std::map<std::string, BigRational> at{{"g", g}, {"Delta", delta}};
  std::vector<std::vector<BigRational>> m(a.rows.size(), std::vector<BigRational>(a.cols.size(), BigRational(0)));
  for (size_t c = 0; c < a.cols.size(); ++c)
    for (const auto& [r, coef] : a.col_entries[c]) m[r][c] = coef.eval(at);
  auto ns = rational_nullspace(std::move(m), a.cols.size());
  if (ns.size() != 1)
    throw NullspaceDimension("derive_J: nullspace dimension " + std::to_string(ns.size()) + " at g=" +
                             to_string(g) + ", Delta=" + to_string(delta));
  auto& v = ns[0];
  if (v[a.beta_lead] == 0) throw NullspaceDimension("derive_J: leading beta coefficient vanishes");
  BigRational s = pow(BigRational(-2 * g), static_cast<unsigned>(ell)) / v[a.beta_lead];
  for (auto& x : v) x *= s;
  return v;
}

// distinct nonzero rationals p/q with small height
std::vector<BigRational> sample_values(std::mt19937_64& rng, size_t count, std::set<BigRational>& used) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 5);
  std::vector<BigRational> out;
  while (out.size() < count) {
    BigRational x = rat(num(rng), den(rng));
    if (used.insert(x).second) out.push_back(x);
  }
  return out;
}

}  // namespace

DerivedJ derive_J(int ell, uint64_t seed) {
  if (ell < 0) throw Unsupported("derive_J: l must be nonnegative");
  DerivedJ out;
  out.ell = ell;
  out.seed = seed;
  Ansatz a = build_ansatz(ell);
  out.unknowns = static_cast<int>(a.cols.size());

  std::mt19937_64 rng(seed);
  std::set<BigRational> used_g, used_d;
  // coefficient degrees are at most 2l in g and l in Delta; one spare node each
  auto gs = sample_values(rng, 2 * ell + 2, used_g);
  auto ds = sample_values(rng, ell + 2, used_d);
  const size_t ng = gs.size(), nd = ds.size(), nu = a.cols.size();

  std::vector<std::vector<BigRational>> sol(ng * nd);
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(ng * nd); ++idx) sol[idx] = solve_at(a, ell, gs[idx / nd], ds[idx % nd]);
  out.sample_points = static_cast<int>(ng * nd);

  std::vector<MultiPoly> coef(nu);
#pragma omp parallel for schedule(dynamic)
  for (long u = 0; u < static_cast<long>(nu); ++u) {
    std::vector<std::pair<BigRational, MultiPoly>> over_g;
    for (size_t i = 0; i < ng; ++i) {
      std::vector<std::pair<BigRational, MultiPoly>> over_d;
      for (size_t j = 0; j < nd; ++j) over_d.emplace_back(ds[j], MultiPoly(sol[i * nd + j][u]));
      over_g.emplace_back(gs[i], interpolate_univar(over_d, "Delta"));
    }
    coef[u] = interpolate_univar(over_g, "g").embed(gd_vars());
  }

  for (size_t u = 0; u < nu; ++u) {
    auto [entry, k] = a.cols[u];
    out.j.e[entry].add(k, coef[u]);
  }

  // fresh point not on the grid
  auto gx = sample_values(rng, 1, used_g)[0], dx = sample_values(rng, 1, used_d)[0];
  auto check = solve_at(a, ell, gx, dx);
  for (size_t u = 0; u < nu; ++u)
    if (coef[u].eval({{"g", gx}, {"Delta", dx}}) != check[u]) {
      out.diagnosis = "interpolant disagrees with the solve at a fresh point";
      return out;
    }

  auto c = verify_commutation_of(out.j, ell);
  out.commutes = c.ok;
  auto s = verify_square_of(out.j, ell, p_from_determinant(ell).poly);
  out.squares = s.ok;
  out.diagnosis = !c.ok ? "commutator: " + c.first_nonzero : (!s.ok ? "square: " + s.first_nonzero : "");
  return out;
}

}  // namespace qrm
