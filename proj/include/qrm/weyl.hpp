#pragma once

#include "qrm/exact_algebra.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qrm {

// P^e (a^dag)^m a^n, parity factor leftmost
struct WKey {
  uint8_t e = 0;
  uint16_t m = 0;
  uint16_t n = 0;
  int degree() const { return m + n; }
  auto tie() const { return std::tuple(e, m + n, m, n); }
  bool operator<(const WKey& o) const { return tie() < o.tie(); }
  bool operator==(const WKey& o) const = default;
};

// coefficient ring traits
inline bool coeff_zero(const MultiPoly& c) { return c.is_zero(); }
inline bool coeff_zero(const BigRational& c) { return c == 0; }
inline bool coeff_zero(double c) { return c == 0.0; }

const std::vector<std::string>& gd_vars();

// normal-ordered parity-extended Weyl algebra element with coefficients in C
template <class C>
class WeylT {
 public:
  using Terms = std::map<WKey, C>;

  WeylT() = default;
  static WeylT scalar(const C& c) {
    WeylT w;
    w.add(WKey{}, c);
    return w;
  }
  static WeylT monomial(const WKey& k, const C& c) {
    WeylT w;
    w.add(k, c);
    return w;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
    return d;
  }
  C coeff(const WKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add(const WKey& k, const C& c) {
    if (coeff_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (coeff_zero(it->second)) terms_.erase(it);
  }

  WeylT& operator+=(const WeylT& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  WeylT& operator-=(const WeylT& o) {
    for (const auto& [k, c] : o.terms_) add(k, C(-c));
    return *this;
  }
  friend WeylT operator+(WeylT a, const WeylT& b) { return a += b; }
  friend WeylT operator-(WeylT a, const WeylT& b) { return a -= b; }
  WeylT operator-() const {
    WeylT r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, C(-c));
    return r;
  }
  WeylT scaled(const C& s) const {
    WeylT r;
    for (const auto& [k, c] : terms_) r.add(k, C(c * s));
    return r;
  }

  friend WeylT operator*(const WeylT& x, const WeylT& y) {
    WeylT r;
    for (const auto& [k1, c1] : x.terms_)
      for (const auto& [k2, c2] : y.terms_) {
        C c12 = c1 * c2;
        // move P^{e2} left past (a^dag)^{m1} a^{n1}
        bool neg = k2.e && ((k1.m + k1.n) & 1);
        uint8_t e = k1.e ^ k2.e;
        // a^{n1} (a^dag)^{m2} = sum_k C(n1,k) C(m2,k) k! (a^dag)^{m2-k} a^{n1-k}
        int kmax = std::min(k1.n, k2.m);
        long comb = 1;  // C(n1,k) C(m2,k) k!
        for (int k = 0; k <= kmax; ++k) {
          if (k > 0) comb = comb * (k1.n - k + 1) * (k2.m - k + 1) / k;
          WKey key{e, static_cast<uint16_t>(k1.m + k2.m - k), static_cast<uint16_t>(k1.n + k2.n - k)};
          C t = c12 * C(neg ? -comb : comb);
          r.add(key, t);
        }
      }
    return r;
  }

  friend bool operator==(const WeylT& a, const WeylT& b) { return (a - b).is_zero(); }

 private:
  Terms terms_;
};

using WeylElement = WeylT<MultiPoly>;  // coefficients in Q[g, Delta]
using WeylQ = WeylT<BigRational>;
using WeylD = WeylT<double>;

template <class C>
struct Mat2T {
  std::array<WeylT<C>, 4> e;  // row-major: 00, 01, 10, 11
  WeylT<C>& at(int i, int j) { return e[2 * i + j]; }
  const WeylT<C>& at(int i, int j) const { return e[2 * i + j]; }

  friend Mat2T operator+(const Mat2T& a, const Mat2T& b) {
    Mat2T r;
    for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
  }
  friend Mat2T operator-(const Mat2T& a, const Mat2T& b) {
    Mat2T r;
    for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
  }
  friend Mat2T operator*(const Mat2T& a, const Mat2T& b) {
    Mat2T r;
#pragma omp parallel for schedule(dynamic) if (a.degree() + b.degree() > 6)
    for (int k = 0; k < 4; ++k) {
      int i = k / 2, j = k % 2;
      r.e[k] = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
    }
    return r;
  }
  Mat2T scaled(const C& s) const {
    Mat2T r;
    for (int k = 0; k < 4; ++k) r.e[k] = e[k].scaled(s);
    return r;
  }
  bool is_zero() const {
    for (const auto& x : e)
      if (!x.is_zero()) return false;
    return true;
  }
  int degree() const {
    int d = -1;
    for (const auto& x : e) d = std::max(d, x.degree());
    return d;
  }
  friend bool operator==(const Mat2T& a, const Mat2T& b) { return (a - b).is_zero(); }
};

using Mat2Weyl = Mat2T<MultiPoly>;
using Mat2Q = Mat2T<BigRational>;
using Mat2D = Mat2T<double>;

template <class C>
Mat2T<C> commutator(const Mat2T<C>& a, const Mat2T<C>& b) {
  return a * b - b * a;
}

// generators with coefficients in Q[g, Delta]
WeylElement w_const(const BigRational& c);
WeylElement w_poly(const MultiPoly& c);
WeylElement w_a();
WeylElement w_ad();
WeylElement w_parity();
WeylElement w_g();
WeylElement w_delta();
Mat2Weyl mat_scalar(const WeylElement& w);  // w * identity
Mat2Weyl mat_from(const WeylElement& e00, const WeylElement& e01, const WeylElement& e10, const WeylElement& e11);
Mat2Weyl left_mul(const WeylElement& w, const Mat2Weyl& m);

// parse an expression over a, ad, P, g, D with products taken in the written order
WeylElement parse_weyl(const std::string& text);

// adjoint followed by a -> -a, a^dag -> -a^dag
WeylElement reflect_adjoint(const WeylElement& w);
// substitution a -> -a, a^dag -> -a^dag only
WeylElement reflect(const WeylElement& w);

enum class Picture { Tilde, Original };
Mat2Weyl build_H(int ell, Picture picture);
// C M C with C = (1/sqrt 2)[[1,1],[1,-1]]
Mat2Weyl cayley_conjugate(const Mat2Weyl& m);

struct Unsupported : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// tabulated J_l, l <= 6, in the Tilde picture
Mat2Weyl build_J(int ell);
Mat2Weyl build_J_from_text(const std::string& alpha, const std::string& beta, const std::string& delta);
// sign s_l such that s_l J_l has nonnegative g = 0 eigenvalue on the upper spin state
int j_sign_normalization(const Mat2Weyl& j, int ell);

struct VerifyResult {
  bool ok = false;
  std::string first_nonzero;  // diagnosis when !ok
};
VerifyResult verify_commutation(int ell);
VerifyResult verify_commutation_of(const Mat2Weyl& j, int ell);
VerifyResult verify_square(int ell);
VerifyResult verify_square_of(const Mat2Weyl& j, int ell, const MultiPoly& p);

// p(H) for p in (x, g, Delta)
Mat2Weyl poly_of_operator(const MultiPoly& p, const Mat2Weyl& h);

// specialization of coefficients
WeylQ specialize(const WeylElement& w, const BigRational& g, const BigRational& delta);
Mat2Q specialize(const Mat2Weyl& m, const BigRational& g, const BigRational& delta);
WeylD specialize_d(const WeylElement& w, double g, double delta);
Mat2D specialize_d(const Mat2Weyl& m, double g, double delta);

// c with a = c * b for a rational constant c, if one exists
std::optional<BigRational> scalar_ratio(const Mat2Weyl& a, const Mat2Weyl& b);

std::string describe(const WKey& k);
std::string first_term_string(const Mat2Weyl& m);

}  // namespace qrm
