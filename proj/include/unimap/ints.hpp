#pragma once

#include <gmpxx.h>

#include <string>

#include "unimap/errors.hpp"

namespace unimap {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
  if (n < 0) return 0;
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// n!! with the convention (-1)!! = 0!! = 1.
inline Int double_factorial(long n) {
  if (n <= 0) return 1;
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// 0 when k < 0 or k > n.
inline Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Int catalan(long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

inline Int pow2(long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

// Quotient a/b, throwing when the division is not exact.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw NonIntegralError("exact_div: division by zero");
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw NonIntegralError("exact_div: " + a.get_str() + " not divisible by " +
                           b.get_str());
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_str(const Rat& q) {
  Rat c(q);
  c.canonicalize();
  return c.get_str();
}

}  // namespace unimap
