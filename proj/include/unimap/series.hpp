#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unimap/errors.hpp"
#include "unimap/ints.hpp"
#include "unimap/poly.hpp"

namespace unimap {

// Truncated formal power series over the rationals with an explicit order N
// (coefficients 0..N). Mixed-order arithmetic is refused rather than silently
// truncated.
class TruncSeries {
 public:
  explicit TruncSeries(long order) : c_(order + 1, Rat(0)) {
    if (order < 0) throw InvalidInputError("series order must be >= 0");
  }

  static TruncSeries constant(const Rat& v, long order) {
    TruncSeries s(order);
    s.c_[0] = v;
    return s;
  }

  static TruncSeries from_poly(const ExactPoly& p, long order) {
    TruncSeries s(order);
    for (long k = 0; k <= order && k <= p.degree(); ++k) s.c_[k] = p.coeff(k);
    return s;
  }

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const Rat& coeff(long k) const { return c_[k]; }
  void set_coeff(long k, const Rat& v) { c_[k] = v; }

  TruncSeries operator+(const TruncSeries& o) const {
    check_order(o);
    TruncSeries r(order());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }

  TruncSeries operator-(const TruncSeries& o) const {
    check_order(o);
    TruncSeries r(order());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }

  TruncSeries operator*(const TruncSeries& o) const {
    check_order(o);
    TruncSeries r(order());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; i + j < c_.size(); ++j) {
        if (o.c_[j] == 0) continue;
        r.c_[i + j] += c_[i] * o.c_[j];
      }
    }
    return r;
  }

  TruncSeries operator*(const Rat& s) const {
    TruncSeries r(order());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
  }

  // Multiply by z^k (coefficients beyond the order fall off).
  TruncSeries shifted_up(long k) const {
    TruncSeries r(order());
    for (long i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

  // 1/this; needs a nonzero constant term.
  TruncSeries reciprocal() const {
    if (c_[0] == 0)
      throw InvalidInputError("reciprocal needs a unit constant term");
    TruncSeries r(order());
    r.c_[0] = Rat(1) / c_[0];
    for (long k = 1; k <= order(); ++k) {
      Rat acc(0);
      for (long j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc / c_[0];
    }
    return r;
  }

  // this(inner); inner must have zero constant term.
  TruncSeries compose(const TruncSeries& inner) const {
    check_order(inner);
    if (inner.c_[0] != 0)
      throw InvalidInputError("composition needs a zero constant term");
    TruncSeries acc = constant(c_[order()], order());
    for (long k = order() - 1; k >= 0; --k) {
      acc = acc * inner;
      acc.c_[0] += c_[k];
    }
    return acc;
  }

  // exp(this); needs a zero constant term.
  TruncSeries exp() const {
    if (c_[0] != 0) throw InvalidInputError("exp needs a zero constant term");
    TruncSeries acc = constant(Rat(1), order());
    TruncSeries term = constant(Rat(1), order());
    for (long j = 1; j <= order(); ++j) {
      term = term * *this * Rat(1, static_cast<unsigned long>(j));
      acc = acc + term;
    }
    return acc;
  }

  // log(this); needs constant term 1.
  TruncSeries log() const {
    if (c_[0] != 1) throw InvalidInputError("log needs constant term 1");
    TruncSeries u = *this - constant(Rat(1), order());
    TruncSeries acc(order());
    TruncSeries term = constant(Rat(1), order());
    for (long j = 1; j <= order(); ++j) {
      term = term * u;
      Rat s(1, static_cast<unsigned long>(j));
      if (j % 2 == 0) s = -s;
      acc = acc + term * s;
    }
    return acc;
  }

  TruncSeries pow(long e) const {
    TruncSeries acc = constant(Rat(1), order());
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

  // --- stock series -------------------------------------------------------

  // Sum of Cat(k) z^k.
  static TruncSeries catalan_series(long order) {
    TruncSeries s(order);
    for (long k = 0; k <= order; ++k) s.c_[k] = Rat(catalan(k));
    return s;
  }

  // (1-4z)^{-1/2} = sum of C(2k,k) z^k.
  static TruncSeries inv_sqrt_one_minus_4z(long order) {
    TruncSeries s(order);
    for (long k = 0; k <= order; ++k) s.c_[k] = Rat(binomial(2 * k, k));
    return s;
  }

  // (1-4z)^{-m} = sum of C(k+m-1, m-1) 4^k z^k for m >= 0.
  static TruncSeries neg_pow_one_minus_4z(long m, long order) {
    TruncSeries s(order);
    if (m == 0) {
      s.c_[0] = 1;
      return s;
    }
    Int four(1);
    for (long k = 0; k <= order; ++k) {
      s.c_[k] = Rat(binomial(k + m - 1, m - 1) * four);
      four *= 4;
    }
    return s;
  }

  static TruncSeries z(long order) {
    TruncSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
  }

 private:
  void check_order(const TruncSeries& o) const {
    if (order() != o.order())
      throw OrderMismatchError("series orders differ: " +
                               std::to_string(order()) + " vs " +
                               std::to_string(o.order()));
  }

  std::vector<Rat> c_;
};

// Evaluate a polynomial at a series argument (Horner).
inline TruncSeries compose_poly(const ExactPoly& p, const TruncSeries& inner) {
  TruncSeries acc = TruncSeries::constant(p.is_zero() ? Rat(0) : p.coeff(p.degree()),
                                          inner.order());
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = acc * inner;
    acc.set_coeff(0, acc.coeff(0) + p.coeff(k));
  }
  return acc;
}

// Bivariate truncated series: order N in y, each y^m coefficient an exact
// polynomial in x.
class BivarSeries {
 public:
  explicit BivarSeries(long order) : c_(order + 1) {
    if (order < 0) throw InvalidInputError("series order must be >= 0");
  }

  static BivarSeries from_univar(const TruncSeries& s) {
    BivarSeries b(s.order());
    for (long m = 0; m <= s.order(); ++m)
      b.c_[m] = ExactPoly::constant(s.coeff(m));
    return b;
  }

  // p(x) * y^m.
  static BivarSeries monomial(const ExactPoly& p, long m, long order) {
    BivarSeries b(order);
    if (m <= order) b.c_[m] = p;
    return b;
  }

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const ExactPoly& coeff(long m) const { return c_[m]; }

  BivarSeries operator+(const BivarSeries& o) const {
    check_order(o);
    BivarSeries r(order());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }

  BivarSeries operator-(const BivarSeries& o) const {
    check_order(o);
    BivarSeries r(order());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }

  BivarSeries operator*(const BivarSeries& o) const {
    check_order(o);
    BivarSeries r(order());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; i + j < c_.size(); ++j) {
        if (o.c_[j].is_zero()) continue;
        r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
      }
    }
    return r;
  }

  BivarSeries operator*(const Rat& s) const {
    BivarSeries r(order());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
  }

  // exp; the y-constant coefficient must be the zero polynomial.
  BivarSeries exp() const {
    if (!c_[0].is_zero())
      throw InvalidInputError("exp needs a zero constant term");
    BivarSeries acc(order());
    acc.c_[0] = ExactPoly::constant(Rat(1));
    BivarSeries term = acc;
    for (long j = 1; j <= order(); ++j) {
      term = term * *this * Rat(1, static_cast<unsigned long>(j));
      acc = acc + term;
    }
    return acc;
  }

  // log; the y-constant coefficient must be the constant polynomial 1.
  BivarSeries log() const {
    if (!(c_[0] == ExactPoly::constant(Rat(1))))
      throw InvalidInputError("log needs constant term 1");
    BivarSeries u = *this;
    u.c_[0] = ExactPoly();
    BivarSeries acc(order());
    BivarSeries term(order());
    term.c_[0] = ExactPoly::constant(Rat(1));
    for (long j = 1; j <= order(); ++j) {
      term = term * u;
      Rat s(1, static_cast<unsigned long>(j));
      if (j % 2 == 0) s = -s;
      acc = acc + term * s;
    }
    return acc;
  }

  bool operator==(const BivarSeries& o) const { return c_ == o.c_; }

 private:
  void check_order(const BivarSeries& o) const {
    if (order() != o.order())
      throw OrderMismatchError("series orders differ");
  }

  std::vector<ExactPoly> c_;
};

}  // namespace unimap
