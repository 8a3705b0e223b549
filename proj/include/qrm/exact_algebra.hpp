#pragma once

#include "qrm/multipoly.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrm {

struct DivisionUndefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DuplicateAbscissa : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivModResult {
  MultiPoly quotient;
  MultiPoly remainder;
};

// Long division in main_var; the divisor's leading coefficient in main_var must be a rational constant.
DivModResult poly_divmod(const MultiPoly& dividend, const MultiPoly& divisor, const std::string& main_var);

// Continuant recurrence D_i = a_i D_{i-1} - b_{i-1} c_{i-1} D_{i-2}.
template <class R>
R tridiag_det(const std::vector<R>& diag, const std::vector<R>& upper, const std::vector<R>& lower) {
  if (diag.empty()) throw std::invalid_argument("tridiag_det: empty matrix");
  if (upper.size() + 1 != diag.size() || lower.size() + 1 != diag.size())
    throw std::invalid_argument("tridiag_det: size mismatch");
  R prev2 = diag[0];  // placeholder, only read from i = 2
  R prev = diag[0];
  for (size_t i = 1; i < diag.size(); ++i) {
    R cur = diag[i] * prev - upper[i - 1] * lower[i - 1] * (i == 1 ? R(1) : prev2);
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

struct RootInterval {
  BigRational low;
  BigRational high;
  int multiplicity_hint = 1;
  double midpoint() const { return to_double((low + high) / 2); }
};

// dense univariate helpers (index = power)
using UPoly = std::vector<BigRational>;
void trim(UPoly& p);
BigRational eval_upoly(const UPoly& p, const BigRational& x);
UPoly upoly_derivative(const UPoly& p);
UPoly upoly_rem(const UPoly& a, const UPoly& b);
UPoly upoly_quo(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(UPoly a, UPoly b);  // monic
UPoly squarefree_part(const UPoly& p);
BigRational cauchy_bound(const UPoly& p);  // all real roots lie in (-B, B)

class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& squarefree);
  int sign_changes(const BigRational& x) const;
  int count(const BigRational& lo, const BigRational& hi) const;  // roots in (lo, hi]
  const UPoly& base() const { return seq_.front(); }

 private:
  std::vector<UPoly> seq_;
};

// Isolating intervals for all real roots in the open interval (lo, hi).
std::vector<RootInterval> isolate_real_roots(const MultiPoly& poly, const BigRational& lo, const BigRational& hi);
std::vector<RootInterval> isolate_real_roots(const UPoly& poly, const BigRational& lo, const BigRational& hi);
// Positive roots, upper end from the Cauchy bound.
std::vector<RootInterval> isolate_positive_roots(const UPoly& poly);

// Bisection on the squarefree part until high - low < width.
RootInterval refine_root(const UPoly& poly, RootInterval iv, const BigRational& width);
std::vector<double> refined_roots(const UPoly& poly, const BigRational& lo, const BigRational& hi,
                                  const BigRational& width = rat(1, 100000000000000L));

// Lagrange interpolant in var through (x_i, y_i).
MultiPoly interpolate_univar(const std::vector<std::pair<BigRational, MultiPoly>>& points,
                             const std::string& var = "N");

// Small recursive-descent parser for + - * ^ ( ) and integer literals over any ring R.
template <class R>
class ExprParser {
 public:
  ExprParser(std::function<R(const std::string&)> symbol, std::function<R(const BigRational&)> constant)
      : symbol_(std::move(symbol)), constant_(std::move(constant)) {}

  R parse(const std::string& text) {
    s_ = text;
    i_ = 0;
    R r = expr();
    skip();
    if (i_ != s_.size()) throw std::invalid_argument("parse error at '" + s_.substr(i_) + "'");
    return r;
  }

 private:
  std::function<R(const std::string&)> symbol_;
  std::function<R(const BigRational&)> constant_;
  std::string s_;
  size_t i_ = 0;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  R expr() {
    skip();
    bool neg = eat('-');
    if (!neg) eat('+');
    R r = term();
    if (neg) r = constant_(BigRational(-1)) * r;
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }
  R term() {
    R r = power();
    while (eat('*')) r = r * power();
    return r;
  }
  R power() {
    R b = atom();
    if (eat('^')) {
      skip();
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      unsigned e = static_cast<unsigned>(std::stoul(s_.substr(st, i_ - st)));
      R r = constant_(BigRational(1));
      for (unsigned k = 0; k < e; ++k) r = r * b;
      return r;
    }
    return b;
  }
  R atom() {
    skip();
    if (eat('(')) {
      R r = expr();
      if (!eat(')')) throw std::invalid_argument("missing ')'");
      return r;
    }
    if (i_ < s_.size() && s_[i_] == '-') {
      ++i_;
      return constant_(BigRational(-1)) * atom();
    }
    size_t st = i_;
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return constant_(BigRational(BigInt(s_.substr(st, i_ - st), 10)));
    }
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (st == i_) throw std::invalid_argument("unexpected token at '" + s_.substr(st) + "'");
    return symbol_(s_.substr(st, i_ - st));
  }
};

// Parse a commutative polynomial; symbol names are mapped through rename (e.g. "D" -> "Delta").
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     const std::map<std::string, std::string>& rename = {});

}  // namespace qrm
