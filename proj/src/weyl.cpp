#include "qrm/weyl.hpp"

#include <cmath>
#include <sstream>

#include "qrm/symmetry_poly.hpp"
#include "tables.hpp"

namespace qrm {

const std::vector<std::string>& gd_vars() {
  static const std::vector<std::string> v{"g", "Delta"};
  return v;
}

WeylElement w_const(const BigRational& c) { return WeylElement::scalar(MultiPoly(gd_vars(), c)); }
WeylElement w_poly(const MultiPoly& c) { return WeylElement::scalar(c.embed(gd_vars())); }
WeylElement w_a() { return WeylElement::monomial({0, 0, 1}, MultiPoly(gd_vars(), 1)); }
WeylElement w_ad() { return WeylElement::monomial({0, 1, 0}, MultiPoly(gd_vars(), 1)); }
WeylElement w_parity() { return WeylElement::monomial({1, 0, 0}, MultiPoly(gd_vars(), 1)); }
WeylElement w_g() { return w_poly(MultiPoly::variable("g", gd_vars())); }
WeylElement w_delta() { return w_poly(MultiPoly::variable("Delta", gd_vars())); }

Mat2Weyl mat_scalar(const WeylElement& w) { return mat_from(w, {}, {}, w); }

Mat2Weyl mat_from(const WeylElement& e00, const WeylElement& e01, const WeylElement& e10, const WeylElement& e11) {
  Mat2Weyl m;
  m.e = {e00, e01, e10, e11};
  return m;
}

Mat2Weyl left_mul(const WeylElement& w, const Mat2Weyl& m) {
  Mat2Weyl r;
  for (int k = 0; k < 4; ++k) r.e[k] = w * m.e[k];
  return r;
}

WeylElement parse_weyl(const std::string& text) {
  ExprParser<WeylElement> p(
      [](const std::string& s) -> WeylElement {
        if (s == "a") return w_a();
        if (s == "ad") return w_ad();
        if (s == "P") return w_parity();
        if (s == "g") return w_g();
        if (s == "D" || s == "Delta") return w_delta();
        throw std::invalid_argument("parse_weyl: unknown symbol " + s);
      },
      [](const BigRational& c) { return w_const(c); });
  return p.parse(text);
}

WeylElement reflect_adjoint(const WeylElement& w) {
  // (P^e ad^m a^n)^dag = ad^n a^m P^e = (-1)^{e(m+n)} P^e ad^n a^m, then a -> -a
  WeylElement r;
  for (const auto& [k, c] : w.terms()) {
    int s = ((1 + k.e) * (k.m + k.n)) & 1;
    r.add({k.e, k.n, k.m}, s ? -c : c);
  }
  return r;
}

WeylElement reflect(const WeylElement& w) {
  WeylElement r;
  for (const auto& [k, c] : w.terms()) r.add(k, ((k.m + k.n) & 1) ? -c : c);
  return r;
}

Mat2Weyl build_H(int ell, Picture picture) {
  WeylElement num = w_ad() * w_a();
  WeylElement x = w_g() * (w_a() + w_ad());
  WeylElement half = w_const(rat(ell, 2));
  WeylElement d = w_delta();
  if (picture == Picture::Tilde) return mat_from(num + x + half, d, d, num - x - half);
  return mat_from(num + d, x + half, x + half, num - d);
}

Mat2Weyl cayley_conjugate(const Mat2Weyl& m) {
  const MultiPoly h(gd_vars(), rat(1, 2));
  const auto &a = m.e[0], &b = m.e[1], &c = m.e[2], &d = m.e[3];
  Mat2Weyl r;
  r.e[0] = (a + b + c + d).scaled(h);
  r.e[1] = (a - b + c - d).scaled(h);
  r.e[2] = (a + b - c - d).scaled(h);
  r.e[3] = (a - b - c + d).scaled(h);
  return r;
}

Mat2Weyl build_J_from_text(const std::string& alpha, const std::string& beta, const std::string& delta) {
  WeylElement al = parse_weyl(alpha), be = parse_weyl(beta), de = parse_weyl(delta);
  return left_mul(w_parity(), mat_from(al, be, reflect_adjoint(be), de));
}

Mat2Weyl build_J(int ell) {
  if (ell < 0) throw Unsupported("build_J: l must be nonnegative");
  if (ell > 6) throw Unsupported("build_J: only l <= 6 is tabulated; use derive_J");
  auto t = tables::j_table(ell);
  return build_J_from_text(t[0], t[1], t[2]);
}

int j_sign_normalization(const Mat2Weyl& j, int ell) {
  // at g = 0 only the P-constant part survives; it acts as a 2x2 matrix S on the spin
  double s[4];
  for (int k = 0; k < 4; ++k) s[k] = j.e[k].coeff({1, 0, 0}).eval_double({{"g", 0.0}, {"Delta", 1.0}});
  double r = std::sqrt(ell * ell / 4.0 + 1.0);
  double v0 = ell / 2.0 + r, v1 = 1.0;
  double w0 = s[0] * v0 + s[1] * v1, w1 = s[2] * v0 + s[3] * v1;
  double mu = (w0 * v0 + w1 * v1) / (v0 * v0 + v1 * v1);
  return mu < 0 ? -1 : 1;
}

std::optional<BigRational> scalar_ratio(const Mat2Weyl& a, const Mat2Weyl& b) {
  for (int i = 0; i < 4; ++i)
    for (const auto& [k, c] : b.e[i].terms()) {
      if (!c.is_constant()) {
        // use any numeric term of this coefficient
        const auto& [mono, q] = *c.terms().begin();
        const MultiPoly& ca = a.e[i].coeff(k);
        BigRational r = ca.embed(c.vars()).coeff(mono) / q;
        if (a == b.scaled(MultiPoly(r))) return r;
        return std::nullopt;
      }
      BigRational r = a.e[i].coeff(k).constant_term() / c.constant_term();
      if (a == b.scaled(MultiPoly(r))) return r;
      return std::nullopt;
    }
  if (a.is_zero()) return BigRational(1);
  return std::nullopt;
}

std::string describe(const WKey& k) {
  std::ostringstream os;
  bool any = false;
  if (k.e) {
    os << "P";
    any = true;
  }
  auto put = [&](const char* name, int p) {
    if (!p) return;
    if (any) os << "*";
    os << name;
    if (p > 1) os << "^" << p;
    any = true;
  };
  put("ad", k.m);
  put("a", k.n);
  if (!any) os << "1";
  return os.str();
}

std::string first_term_string(const Mat2Weyl& m) {
  for (int i = 0; i < 4; ++i) {
    if (m.e[i].is_zero()) continue;
    const auto& [k, c] = *m.e[i].terms().rbegin();
    std::ostringstream os;
    os << "(" << i / 2 << "," << i % 2 << ") [" << c.str() << "] " << describe(k);
    return os.str();
  }
  return "";
}

VerifyResult verify_commutation_of(const Mat2Weyl& j, int ell) {
  Mat2Weyl c = commutator(build_H(ell, Picture::Tilde), j);
  return {c.is_zero(), first_term_string(c)};
}

VerifyResult verify_commutation(int ell) { return verify_commutation_of(build_J(ell), ell); }

Mat2Weyl poly_of_operator(const MultiPoly& p, const Mat2Weyl& h) {
  auto cs = p.embed(union_vars({"x"}, gd_vars())).coeff_list("x");
  Mat2Weyl r;
  for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k) {
    r = r * h;
    r = r + mat_scalar(w_poly(cs[k]));
  }
  return r;
}

VerifyResult verify_square_of(const Mat2Weyl& j, int ell, const MultiPoly& p) {
  Mat2Weyl d = j * j - poly_of_operator(p, build_H(ell, Picture::Tilde));
  return {d.is_zero(), first_term_string(d)};
}

VerifyResult verify_square(int ell) { return verify_square_of(build_J(ell), ell, p_from_table(ell).poly); }

WeylQ specialize(const WeylElement& w, const BigRational& g, const BigRational& delta) {
  WeylQ r;
  std::map<std::string, BigRational> at{{"g", g}, {"Delta", delta}};
  for (const auto& [k, c] : w.terms()) r.add(k, c.eval(at));
  return r;
}

Mat2Q specialize(const Mat2Weyl& m, const BigRational& g, const BigRational& delta) {
  Mat2Q r;
  for (int k = 0; k < 4; ++k) r.e[k] = specialize(m.e[k], g, delta);
  return r;
}

WeylD specialize_d(const WeylElement& w, double g, double delta) {
  WeylD r;
  std::map<std::string, long double> at{{"g", g}, {"Delta", delta}};
  for (const auto& [k, c] : w.terms()) r.add(k, static_cast<double>(c.eval_ld(at)));
  return r;
}

Mat2D specialize_d(const Mat2Weyl& m, double g, double delta) {
  Mat2D r;
  for (int k = 0; k < 4; ++k) r.e[k] = specialize_d(m.e[k], g, delta);
  return r;
}

}  // namespace qrm
