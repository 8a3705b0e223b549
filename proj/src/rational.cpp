#include "qrm/rational.hpp"

#include <stdexcept>

namespace qrm {

BigRational rat(long n, long d) {
  if (d == 0) throw std::domain_error("rat: zero denominator");
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

BigRational rat(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::domain_error("rat: zero denominator");
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

BigRational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    BigInt num(ip + fp, 10), den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    BigRational r = rat(num, den);
    return neg ? BigRational(-r) : r;
  }
  BigRational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

BigRational from_decimal(double x, int digits) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, digits);
  BigRational q(from_double(x) * den);
  BigInt num = q.get_num() / q.get_den();
  if (abs(q - num) * 2 >= 1) num += sign(q);
  return rat(num, den);
}

BigRational from_double(double x) {
  BigRational r(x);
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigRational pow(const BigRational& x, unsigned e) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), e);
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& x) { return x.get_str(10); }

int sign(const BigRational& x) { return sgn(x); }

}  // namespace qrm
