// series.hpp - one-variable power series truncated at a fixed order, with
// exact coefficients. Used for the Todd-type operator factors.

#ifndef BOXDEC_SERIES_HPP
#define BOXDEC_SERIES_HPP

#include <stdexcept>

#include "boxdec/scalar.hpp"

namespace boxdec {

template <class T>
struct TruncatedSeries {
  int truncation_order = 0;
  std::vector<T> coeffs;  // indexed 0..truncation_order

  static TruncatedSeries zero(int K) {
    return {K, std::vector<T>(K + 1, scalar_zero<T>())};
  }
  static TruncatedSeries one(int K) {
    TruncatedSeries s = zero(K);
    s.coeffs[0] = scalar_one<T>();
    return s;
  }

  const T& operator[](int k) const { return coeffs[k]; }
  T& operator[](int k) { return coeffs[k]; }

  TruncatedSeries operator+(const TruncatedSeries& b) const {
    require_same_order(b);
    TruncatedSeries r = *this;
    for (int k = 0; k <= truncation_order; ++k) r.coeffs[k] += b.coeffs[k];
    return r;
  }

  TruncatedSeries operator*(const TruncatedSeries& b) const {
    require_same_order(b);
    TruncatedSeries r = zero(truncation_order);
    for (int i = 0; i <= truncation_order; ++i) {
      if (scalar_is_zero(coeffs[i])) continue;
      for (int j = 0; i + j <= truncation_order; ++j)
        r.coeffs[i + j] += coeffs[i] * b.coeffs[j];
    }
    return r;
  }

  // Multiplicative inverse; coefficient 0 must be invertible.
  TruncatedSeries inverse() const {
    if (scalar_is_zero(coeffs[0]))
      throw std::domain_error("series has no inverse: constant term is zero");
    TruncatedSeries r = zero(truncation_order);
    T a0inv = scalar_inverse(coeffs[0]);
    r.coeffs[0] = a0inv;
    for (int k = 1; k <= truncation_order; ++k) {
      T acc = scalar_zero<T>();
      for (int j = 1; j <= k; ++j) acc += coeffs[j] * r.coeffs[k - j];
      r.coeffs[k] = -(a0inv * acc);
    }
    return r;
  }

  template <class U>
  TruncatedSeries<U> convert() const {
    TruncatedSeries<U> r = TruncatedSeries<U>::zero(truncation_order);
    for (int k = 0; k <= truncation_order; ++k)
      r.coeffs[k] = U(coeffs[k]);
    return r;
  }

 private:
  void require_same_order(const TruncatedSeries& b) const {
    if (b.truncation_order != truncation_order)
      throw std::invalid_argument("series truncation order mismatch");
  }
};

}  // namespace boxdec

#endif
