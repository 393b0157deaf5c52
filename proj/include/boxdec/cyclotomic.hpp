// cyclotomic.hpp - exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Elements are stored as vectors of rationals in the power basis of a fixed
// primitive n-th root of unity, modulo the n-th cyclotomic polynomial.
// Working modulo the cyclotomic polynomial (rather than x^n - 1) makes
// zero-testing a plain coefficient test.

#ifndef BOXDEC_CYCLOTOMIC_HPP
#define BOXDEC_CYCLOTOMIC_HPP

#include "boxdec/rational.hpp"

namespace boxdec {

// Integer coefficients of the n-th cyclotomic polynomial, low to high,
// monic. Cached; safe to call from multiple threads.
const std::vector<Integer>& cyclotomic_polynomial(long n);

long euler_phi(long n);

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  explicit Cyclotomic(const Rational& r);
  explicit Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

  // zeta_order ^ exponent as an element of Q(zeta_order).
  static Cyclotomic root_of_unity(long order, long exponent);

  // coeffs must have length deg(Phi_order).
  static Cyclotomic from_coeffs(long order, QVec coeffs);

  long order() const { return order_; }
  const QVec& coeffs() const { return c_; }

  bool is_zero() const;
  // True when the element lies in the rational subfield.
  bool is_rational() const;
  Rational rational_part() const;  // requires is_rational()

  // Image under the embedding Q(zeta_order) -> Q(zeta_target), zeta_order
  // mapping to zeta_target^(target/order). order must divide target.
  Cyclotomic promoted(long target_order) const;

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;  // throws std::domain_error on zero

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  bool operator==(const Cyclotomic& b) const;
  bool operator!=(const Cyclotomic& b) const { return !(*this == b); }

  std::string str() const;

 private:
  long order_;
  QVec c_;  // length deg(Phi_order), power basis of zeta_order
};

// Image of e^{2 pi i exponent / root_order} in Q(zeta_target_order).
// root_order must divide target_order.
Cyclotomic cyclotomic_embed(long root_order, long exponent, long target_order);

}  // namespace boxdec

#endif
