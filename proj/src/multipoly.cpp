#include "qrm/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qrm {

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> u = a;
  for (const auto& v : b)
    if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
  if (u.size() > kMaxVars) throw std::length_error("MultiPoly: too many variables");
  return u;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) throw std::length_error("MultiPoly: too many variables");
}

MultiPoly::MultiPoly(std::vector<std::string> vars, const BigRational& c) : MultiPoly(std::move(vars)) {
  if (c != 0) terms_.emplace(Mono{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> vars) {
  if (vars.empty()) vars.push_back(name);
  MultiPoly p(vars);
  int i = p.var_index(name);
  if (i < 0) throw std::invalid_argument("variable not in list: " + name);
  Mono m;
  m.e[i] = 1;
  p.terms_.emplace(m, BigRational(1));
  return p;
}

int MultiPoly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

BigRational MultiPoly::constant_term() const { return coeff(Mono{}); }

BigRational MultiPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

int MultiPoly::degree(const std::string& var) const {
  int i = var_index(var);
  if (terms_.empty()) return -1;
  if (i < 0) return 0;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m.e[i]);
  return d;
}

void MultiPoly::add_term(const Mono& m, const BigRational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::embed(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    pos[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
  }
  MultiPoly r(vars);
  for (const auto& [m, c] : terms_) {
    Mono n;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (pos[i] < 0) throw std::invalid_argument("embed: variable in use would be dropped: " + vars_[i]);
      n.e[pos[i]] = m.e[i];
    }
    r.terms_.emplace(n, c);
  }
  return r;
}

MultiPoly MultiPoly::drop_unused_vars() const {
  std::vector<std::string> keep;
  for (size_t i = 0; i < vars_.size(); ++i) {
    bool used = false;
    for (const auto& [m, c] : terms_)
      if (m.e[i]) {
        used = true;
        break;
      }
    if (used) keep.push_back(vars_[i]);
  }
  return embed(keep);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    auto u = union_vars(vars_, o.vars_);
    *this = embed(u);
    return *this += o.embed(u);
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    auto u = union_vars(vars_, o.vars_);
    *this = embed(u);
    return *this -= o.embed(u);
  }
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto u = union_vars(a.vars_, b.vars_);
    return a.embed(u) * b.embed(u);
  }
  MultiPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  BigRational t;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Mono m;
      for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<uint16_t>(ma.e[i] + mb.e[i]);
      t = ca * cb;
      r.add_term(m, t);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, x] : r.terms_) x = -x;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(vars_, 1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto u = union_vars(a.vars_, b.vars_);
  return a.embed(u).terms_ == b.embed(u).terms_;
}

MultiPoly MultiPoly::subs(const std::string& var, const MultiPoly& value) const {
  int i = var_index(var);
  if (i < 0) return *this;
  std::vector<std::string> rest;
  for (const auto& v : vars_)
    if (v != var) rest.push_back(v);
  auto out_vars = union_vars(rest, value.vars());
  MultiPoly val = value.embed(out_vars);
  std::vector<MultiPoly> powers{MultiPoly(out_vars, 1)};
  MultiPoly r(out_vars);
  std::map<unsigned, MultiPoly> grouped;
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    unsigned k = n.e[i];
    n.e[i] = 0;
    MultiPoly t(vars_);
    t.terms_.emplace(n, c);
    auto it = grouped.find(k);
    if (it == grouped.end())
      grouped.emplace(k, t);
    else
      it->second += t;
  }
  for (auto& [k, poly] : grouped) {
    while (powers.size() <= k) powers.push_back(powers.back() * val);
    r += poly.embed(out_vars) * powers[k];
  }
  return r;
}

MultiPoly MultiPoly::specialize(const std::string& var, const BigRational& value) const {
  return subs(var, MultiPoly(std::vector<std::string>{}, value));
}

BigRational MultiPoly::eval(const std::map<std::string, BigRational>& at) const {
  std::vector<std::vector<BigRational>> pw(vars_.size());
  std::vector<const BigRational*> val(vars_.size(), nullptr);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = at.find(vars_[i]);
    if (it != at.end()) val[i] = &it->second;
  }
  BigRational s = 0, t;
  for (const auto& [m, c] : terms_) {
    t = c;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (!m.e[i]) continue;
      if (!val[i]) throw std::invalid_argument("eval: missing value for " + vars_[i]);
      auto& p = pw[i];
      if (p.empty()) p.push_back(BigRational(1));
      while (p.size() <= m.e[i]) p.push_back(p.back() * *val[i]);
      t *= p[m.e[i]];
    }
    s += t;
  }
  return s;
}

long double MultiPoly::eval_ld(const std::map<std::string, long double>& at) const {
  std::vector<long double> val(vars_.size(), 0.0L);
  std::vector<bool> have(vars_.size(), false);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = at.find(vars_[i]);
    if (it != at.end()) {
      val[i] = it->second;
      have[i] = true;
    }
  }
  long double s = 0;
  for (const auto& [m, c] : terms_) {
    long double t = c.get_d();
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (!m.e[i]) continue;
      if (!have[i]) throw std::invalid_argument("eval: missing value for " + vars_[i]);
      t *= std::pow(val[i], static_cast<long double>(m.e[i]));
    }
    s += t;
  }
  return s;
}

double MultiPoly::eval_double(const std::map<std::string, double>& at) const {
  std::map<std::string, long double> l;
  for (const auto& [k, v] : at) l[k] = v;
  return static_cast<double>(eval_ld(l));
}

std::vector<MultiPoly> MultiPoly::coeff_list(const std::string& var) const {
  int i = var_index(var);
  std::vector<std::string> rest;
  for (const auto& v : vars_)
    if (v != var) rest.push_back(v);
  if (i < 0) return {*this};
  int d = std::max(degree(var), 0);
  std::vector<MultiPoly> out(d + 1, MultiPoly(rest));
  for (const auto& [m, c] : terms_) {
    Mono n;
    int k = 0;
    for (size_t j = 0; j < vars_.size(); ++j) {
      if (static_cast<int>(j) == i) continue;
      n.e[k++] = m.e[j];
    }
    out[m.e[i]].terms_.emplace(n, c);
  }
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  int i = var_index(var);
  MultiPoly r(vars_);
  if (i < 0) return r;
  for (const auto& [m, c] : terms_) {
    if (!m.e[i]) continue;
    Mono n = m;
    n.e[i]--;
    r.add_term(n, c * m.e[i]);
  }
  return r;
}

std::vector<BigRational> MultiPoly::to_univariate(const std::string& var) const {
  int i = var_index(var);
  for (const auto& [m, c] : terms_)
    for (size_t j = 0; j < vars_.size(); ++j)
      if (static_cast<int>(j) != i && m.e[j])
        throw std::invalid_argument("to_univariate: polynomial depends on " + vars_[j]);
  std::vector<BigRational> out(std::max(degree(var), 0) + 1, BigRational(0));
  for (const auto& [m, c] : terms_) out[i < 0 ? 0 : m.e[i]] = c;
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

MultiPoly MultiPoly::from_univariate(const std::vector<BigRational>& c, const std::string& var) {
  MultiPoly r(std::vector<std::string>{var});
  for (size_t k = 0; k < c.size(); ++k) {
    Mono m;
    m.e[0] = static_cast<uint16_t>(k);
    r.add_term(m, c[k]);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigRational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool mono_empty = m.degree() == 0;
    bool wrote = false;
    if (a != 1 || mono_empty) {
      os << a.get_str();
      wrote = true;
    }
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (!m.e[i]) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (m.e[i] > 1) os << "^" << m.e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace qrm
