#pragma once

#include "qrm/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qrm {

constexpr int kMaxVars = 8;

struct Mono {
  std::array<uint16_t, kMaxVars> e{};
  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool operator==(const Mono&) const = default;
};

// graded lexicographic: total degree first, then lex with variable 0 most significant
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

using TermMap = std::map<Mono, BigRational, GrlexLess>;

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(std::vector<std::string> vars, const BigRational& c);
  MultiPoly(const BigRational& c) : MultiPoly(std::vector<std::string>{}, c) {}
  MultiPoly(long c) : MultiPoly(rat(c)) {}

  static MultiPoly variable(const std::string& name, std::vector<std::string> vars = {});

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  int var_index(const std::string& name) const;  // -1 if absent

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_term() const;
  BigRational coeff(const Mono& m) const;
  int total_degree() const;  // -1 for zero
  int degree(const std::string& var) const;

  void add_term(const Mono& m, const BigRational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const BigRational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
  friend MultiPoly operator*(const BigRational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  MultiPoly pow(unsigned e) const;

  // equality after embedding both into the union of their variable lists
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly embed(const std::vector<std::string>& vars) const;
  MultiPoly drop_unused_vars() const;

  MultiPoly subs(const std::string& var, const MultiPoly& value) const;
  MultiPoly specialize(const std::string& var, const BigRational& value) const;
  BigRational eval(const std::map<std::string, BigRational>& at) const;
  double eval_double(const std::map<std::string, double>& at) const;
  long double eval_ld(const std::map<std::string, long double>& at) const;

  // coefficients of var^0, var^1, ... as polynomials in the remaining variables
  std::vector<MultiPoly> coeff_list(const std::string& var) const;
  MultiPoly derivative(const std::string& var) const;
  // dense coefficients (index = power) of a polynomial in var only
  std::vector<BigRational> to_univariate(const std::string& var) const;
  static MultiPoly from_univariate(const std::vector<BigRational>& c, const std::string& var);

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace qrm
