// scalar.hpp - uniform access to the two coefficient rings (Q and Q(zeta_n)).

#ifndef BOXDEC_SCALAR_HPP
#define BOXDEC_SCALAR_HPP

#include "boxdec/cyclotomic.hpp"
#include "boxdec/rational.hpp"

namespace boxdec {

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const Cyclotomic& x) { return x.is_zero(); }

inline Rational scalar_inverse(const Rational& x) { return 1 / x; }
inline Cyclotomic scalar_inverse(const Cyclotomic& x) { return x.inverse(); }

template <class T>
T scalar_from_rational(const Rational& r);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& r) {
  return r;
}
template <>
inline Cyclotomic scalar_from_rational<Cyclotomic>(const Rational& r) {
  return Cyclotomic(r);
}

template <class T>
inline T scalar_zero() {
  return scalar_from_rational<T>(Rational(0));
}
template <class T>
inline T scalar_one() {
  return scalar_from_rational<T>(Rational(1));
}

}  // namespace boxdec

#endif
