#include "apollon/core.hpp"

namespace apollon {

namespace {

// true iff p/q >= 10^e  (p, q > 0)
bool at_least_pow10(const Int& p, const Int& q, long e) {
  if (e >= 0) return p >= q * int_pow10(static_cast<unsigned>(e));
  return p * int_pow10(static_cast<unsigned>(-e)) >= q;
}

}  // namespace

std::string decimal_string(const Rat& value, unsigned sig) {
  if (value == 0) return "0";
  Int p = value.get_num();
  const Int& q = value.get_den();
  bool neg = p < 0;
  if (neg) p = -p;

  // exp10 with 10^exp10 <= p/q < 10^(exp10+1)
  long exp10 = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
               static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
  while (at_least_pow10(p, q, exp10 + 1)) ++exp10;
  while (!at_least_pow10(p, q, exp10)) --exp10;

  // digits = round_half_even(p/q * 10^(sig-1-exp10)): `sig` significant digits.
  long shift = static_cast<long>(sig) - 1 - exp10;
  Int num = p, den = q;
  if (shift >= 0)
    num *= int_pow10(static_cast<unsigned>(shift));
  else
    den *= int_pow10(static_cast<unsigned>(-shift));
  Int digits, rem;
  mpz_fdiv_qr(digits.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Int twice = rem * 2;
  if (twice > den || (twice == den && mpz_odd_p(digits.get_mpz_t())))
    digits += 1;

  std::string ds = digits.get_str();
  if (ds.size() > sig) {  // carry rolled over to one more digit (all-nines case)
    ++exp10;
    ds.pop_back();
  }

  std::string out;
  if (exp10 >= 0) {
    if (static_cast<size_t>(exp10) + 1 >= ds.size())
      out = ds + std::string(static_cast<size_t>(exp10) + 1 - ds.size(), '0');
    else
      out = ds.substr(0, exp10 + 1) + "." + ds.substr(exp10 + 1);
  } else {
    out = "0." + std::string(static_cast<size_t>(-exp10) - 1, '0') + ds;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

}  // namespace apollon
