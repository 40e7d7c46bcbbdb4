#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "unimap/errors.hpp"
#include "unimap/ints.hpp"

namespace unimap {

// Dense univariate polynomial over the rationals, coefficients ascending.
// The coefficient vector never carries trailing zeros.
class ExactPoly {
 public:
  ExactPoly() = default;

  explicit ExactPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ExactPoly from_ints(const std::vector<Int>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const auto& v : coeffs) c.emplace_back(v);
    return ExactPoly(std::move(c));
  }

  static ExactPoly constant(const Rat& v) { return ExactPoly({v}); }

  static ExactPoly monomial(const Rat& v, int k) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = v;
    return ExactPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Rat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
  }

  const std::vector<Rat>& coeffs() const { return c_; }

  ExactPoly operator+(const ExactPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return ExactPoly(std::move(c));
  }

  ExactPoly operator-(const ExactPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return ExactPoly(std::move(c));
  }

  ExactPoly operator*(const ExactPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return ExactPoly(std::move(c));
  }

  ExactPoly operator*(const Rat& s) const {
    if (s == 0) return {};
    std::vector<Rat> c(c_);
    for (auto& v : c) v *= s;
    return ExactPoly(std::move(c));
  }

  ExactPoly operator-() const { return *this * Rat(-1); }

  ExactPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return ExactPoly(std::move(c));
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Multiply by x^k.
  ExactPoly shifted_up(int k) const {
    if (is_zero()) return {};
    std::vector<Rat> c(c_.size() + k, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return ExactPoly(std::move(c));
  }

  // Multiplicity of the root 0 (0 for the zero polynomial).
  int root_zero_multiplicity() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return 0;
  }

  // Divide by x^k; requires the k lowest coefficients to vanish.
  ExactPoly shifted_down(int k) const {
    if (is_zero()) return {};
    for (int i = 0; i < k; ++i)
      if (coeff(i) != 0) throw NonIntegralError("shifted_down: x^k does not divide");
    std::vector<Rat> c(c_.begin() + k, c_.end());
    return ExactPoly(std::move(c));
  }

  bool integer_coeffs() const {
    for (const auto& v : c_)
      if (!is_integer(v)) return false;
    return true;
  }

  bool operator==(const ExactPoly& o) const { return c_ == o.c_; }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (coeff(k) == 0) continue;
      if (!out.empty()) out += " + ";
      out += rat_str(coeff(k));
      if (k > 0) out += "*" + var + "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

inline ExactPoly operator*(const Rat& s, const ExactPoly& p) { return p * s; }

// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<ExactPoly, ExactPoly> poly_divmod(const ExactPoly& a,
                                                   const ExactPoly& b) {
  if (b.is_zero()) throw ZeroPolynomialError("division by the zero polynomial");
  std::vector<Rat> r(a.coeffs());
  const int db = b.degree();
  const Rat lead = b.coeff(db);
  if (static_cast<int>(r.size()) - 1 < db) return {ExactPoly(), a};
  std::vector<Rat> q(r.size() - db, Rat(0));
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (r[k] == 0) continue;
    Rat f = r[k] / lead;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeff(j);
  }
  return {ExactPoly(std::move(q)), ExactPoly(std::move(r))};
}

// Scale by a positive rational so coefficients become coprime integers.
inline ExactPoly primitive_part(const ExactPoly& p) {
  if (p.is_zero()) return p;
  Int lcm_den(1);
  for (const auto& c : p.coeffs()) {
    Int l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    lcm_den = l;
  }
  Int gcd_num(0);
  for (const auto& c : p.coeffs()) {
    Int scaled = c.get_num() * exact_div(lcm_den, Int(c.get_den()));
    Int g;
    mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    gcd_num = g;
  }
  Rat scale(lcm_den, gcd_num);
  scale.canonicalize();
  return p * scale;
}

// Primitive gcd with positive leading coefficient.
inline ExactPoly poly_gcd(ExactPoly a, ExactPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  if (!a.is_zero() && a.coeff(a.degree()) < 0) a = -a;
  return a;
}

// p / gcd(p, p'): same roots, all simple.
inline ExactPoly square_free_part(const ExactPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("square-free part of zero");
  if (p.degree() == 0) return ExactPoly::constant(Rat(1));
  ExactPoly g = poly_gcd(p, p.derivative());
  auto [q, r] = poly_divmod(p, g);
  if (!r.is_zero()) throw Error("square_free_part: gcd does not divide");
  return primitive_part(q);
}

}  // namespace unimap
