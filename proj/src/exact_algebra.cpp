#include "qrm/exact_algebra.hpp"

#include <algorithm>
#include <set>

namespace qrm {

DivModResult poly_divmod(const MultiPoly& dividend, const MultiPoly& divisor, const std::string& main_var) {
  if (divisor.is_zero()) throw DivisionUndefined("poly_divmod: zero divisor");
  auto vars = union_vars(union_vars(dividend.vars(), divisor.vars()), {main_var});
  MultiPoly d = divisor.embed(vars);
  MultiPoly r = dividend.embed(vars);
  int mi = d.var_index(main_var);
  int dd = d.degree(main_var);
  auto dcoeffs = d.coeff_list(main_var);
  if (!dcoeffs.back().is_constant())
    throw DivisionUndefined("poly_divmod: leading coefficient of divisor in " + main_var + " is not a constant");
  BigRational lc = dcoeffs.back().constant_term();
  MultiPoly q(vars);
  while (!r.is_zero()) {
    int k = r.degree(main_var);
    if (k < dd) break;
    MultiPoly t(vars);
    for (const auto& [m, c] : r.terms())
      if (m.e[mi] == k) {
        Mono n = m;
        n.e[mi] = static_cast<uint16_t>(k - dd);
        t.add_term(n, c / lc);
      }
    q += t;
    r -= t * d;
  }
  return {q, r};
}

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigRational eval_upoly(const UPoly& p, const BigRational& x) {
  BigRational s = 0;
  for (size_t i = p.size(); i-- > 0;) {
    s *= x;
    s += p[i];
  }
  return s;
}

UPoly upoly_derivative(const UPoly& p) {
  UPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

static void divmod_u(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  UPoly bb = b;
  trim(bb);
  if (bb.empty()) throw DivisionUndefined("upoly division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0, BigRational(0));
  const BigRational& lc = bb.back();
  while (!r.empty() && r.size() >= bb.size()) {
    size_t shift = r.size() - bb.size();
    BigRational f = r.back() / lc;
    q[shift] = f;
    for (size_t i = 0; i < bb.size(); ++i) r[shift + i] -= f * bb[i];
    r.pop_back();
    trim(r);
  }
}

UPoly upoly_rem(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod_u(a, b, q, r);
  return r;
}

UPoly upoly_quo(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod_u(a, b, q, r);
  return q;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    BigRational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

UPoly squarefree_part(const UPoly& p) {
  UPoly q = p;
  trim(q);
  if (q.size() <= 2) return q;
  UPoly g = upoly_gcd(q, upoly_derivative(q));
  if (g.size() <= 1) return q;
  return upoly_quo(q, g);
}

BigRational cauchy_bound(const UPoly& p0) {
  UPoly p = p0;
  trim(p);
  if (p.size() <= 1) return BigRational(1);
  BigRational m = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, BigRational(abs(p[i] / p.back())));
  return m + 1;
}

SturmSequence::SturmSequence(const UPoly& sqf) {
  UPoly p = sqf;
  trim(p);
  seq_.push_back(p);
  if (p.size() <= 1) return;
  seq_.push_back(upoly_derivative(p));
  while (seq_.back().size() > 1) {
    UPoly r = upoly_rem(seq_[seq_.size() - 2], seq_.back());
    if (r.empty()) break;
    BigRational s = abs(r.back());
    for (auto& c : r) c = -c / s;
    seq_.push_back(std::move(r));
  }
}

int SturmSequence::sign_changes(const BigRational& x) const {
  int changes = 0, last = 0;
  for (const auto& p : seq_) {
    int s = sgn(eval_upoly(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const BigRational& lo, const BigRational& hi) const {
  return sign_changes(lo) - sign_changes(hi);
}

static BigRational nonroot_split(const UPoly& p, const BigRational& a, const BigRational& b) {
  BigRational m = (a + b) / 2;
  BigRational lo = a;
  while (eval_upoly(p, m) == 0) m = (lo + m) / 2;
  return m;
}

static int open_count(const SturmSequence& s, const BigRational& a, const BigRational& b) {
  int c = s.count(a, b);
  if (eval_upoly(s.base(), b) == 0) --c;
  return c;
}

static int multiplicity_in(const UPoly& p, const RootInterval& iv) {
  UPoly f = p;
  trim(f);
  int mult = 0;
  while (f.size() > 1) {
    SturmSequence s(squarefree_part(f));
    if (open_count(s, iv.low, iv.high) == 0) break;
    ++mult;
    f = upoly_gcd(f, upoly_derivative(f));
  }
  return std::max(mult, 1);
}

std::vector<RootInterval> isolate_real_roots(const UPoly& poly, const BigRational& lo, const BigRational& hi) {
  std::vector<RootInterval> out;
  UPoly p = poly;
  trim(p);
  if (p.size() <= 1 || !(lo < hi)) return out;
  UPoly sqf = squarefree_part(p);
  SturmSequence sturm(sqf);
  std::vector<std::pair<BigRational, BigRational>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int c = open_count(sturm, a, b);
    if (c == 0) continue;
    if (c == 1) {
      out.push_back({a, b, 1});
      continue;
    }
    BigRational m = nonroot_split(sqf, a, b);
    stack.push_back({m, b});
    stack.push_back({a, m});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.low < y.low; });
  for (auto& iv : out) iv.multiplicity_hint = multiplicity_in(p, iv);
  return out;
}

std::vector<RootInterval> isolate_real_roots(const MultiPoly& poly, const BigRational& lo, const BigRational& hi) {
  auto q = poly.drop_unused_vars();
  if (q.vars().size() > 1) throw std::invalid_argument("isolate_real_roots: polynomial is not univariate");
  std::string v = q.vars().empty() ? "x" : q.vars()[0];
  return isolate_real_roots(q.to_univariate(v), lo, hi);
}

std::vector<RootInterval> isolate_positive_roots(const UPoly& poly) {
  return isolate_real_roots(poly, BigRational(0), cauchy_bound(poly));
}

RootInterval refine_root(const UPoly& poly, RootInterval iv, const BigRational& width) {
  UPoly sqf = squarefree_part(poly);
  int slo = sgn(eval_upoly(sqf, iv.low)), shi = sgn(eval_upoly(sqf, iv.high));
  if (slo * shi < 0) {
    while (iv.high - iv.low >= width) {
      BigRational m = (iv.low + iv.high) / 2;
      int sm = sgn(eval_upoly(sqf, m));
      if (sm == 0) {
        BigRational w = width / 4;
        SturmSequence s(sqf);
        while (open_count(s, m - w, m + w) != 1 || eval_upoly(sqf, m - w) == 0 || eval_upoly(sqf, m + w) == 0) w /= 2;
        iv.low = m - w;
        iv.high = m + w;
        return iv;
      }
      if (sm == slo)
        iv.low = m;
      else
        iv.high = m;
    }
    return iv;
  }
  // endpoint is a root of the polynomial itself (domain boundary); fall back to Sturm counting
  SturmSequence s(sqf);
  while (iv.high - iv.low >= width) {
    BigRational m = nonroot_split(sqf, iv.low, iv.high);
    if (open_count(s, iv.low, m) >= 1)
      iv.high = m;
    else
      iv.low = m;
  }
  return iv;
}

std::vector<double> refined_roots(const UPoly& poly, const BigRational& lo, const BigRational& hi,
                                  const BigRational& width) {
  std::vector<double> out;
  for (auto& iv : isolate_real_roots(poly, lo, hi)) out.push_back(refine_root(poly, iv, width).midpoint());
  return out;
}

MultiPoly interpolate_univar(const std::vector<std::pair<BigRational, MultiPoly>>& points, const std::string& var) {
  std::set<BigRational> seen;
  for (const auto& [x, y] : points)
    if (!seen.insert(x).second) throw DuplicateAbscissa("interpolate_univar: duplicate abscissa " + to_string(x));
  std::vector<std::string> vars;
  for (const auto& [x, y] : points) vars = union_vars(vars, y.vars());
  if (std::find(vars.begin(), vars.end(), var) != vars.end())
    throw std::invalid_argument("interpolate_univar: values already depend on " + var);
  vars = union_vars(vars, {var});
  MultiPoly t = MultiPoly::variable(var, vars);
  MultiPoly result(vars);
  for (size_t i = 0; i < points.size(); ++i) {
    MultiPoly basis(vars, 1);
    BigRational denom = 1;
    for (size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis *= t - MultiPoly(vars, points[j].first);
      denom *= points[i].first - points[j].first;
    }
    result += points[i].second * basis * (BigRational(1) / denom);
  }
  return result;
}

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     const std::map<std::string, std::string>& rename) {
  ExprParser<MultiPoly> p(
      [&](const std::string& name) {
        auto it = rename.find(name);
        return MultiPoly::variable(it == rename.end() ? name : it->second, vars);
      },
      [&](const BigRational& c) { return MultiPoly(vars, c); });
  return p.parse(text);
}

}  // namespace qrm
