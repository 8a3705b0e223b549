#pragma once

#include <gmpxx.h>

#include <string>

namespace qrm {

using BigInt = mpz_class;
using BigRational = mpq_class;

// n/d in lowest terms
BigRational rat(long n, long d = 1);
BigRational rat(const BigInt& n, const BigInt& d);
BigRational parse_rational(const std::string& s);  // "3", "-1/2", "0.25"
BigRational from_double(double x);                 // exact binary value
BigRational from_decimal(double x, int digits = 12);  // nearest k / 10^digits

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigRational pow(const BigRational& x, unsigned e);

std::string to_string(const BigRational& x);
inline double to_double(const BigRational& x) { return x.get_d(); }
int sign(const BigRational& x);

}  // namespace qrm
