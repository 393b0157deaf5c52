// rational.hpp - exact rational scalars and small dense linear algebra.
//
// All arithmetic in this project is exact; the scalar type is GMP's
// mpq_class (always canonical, denominator > 0).

#ifndef BOXDEC_RATIONAL_HPP
#define BOXDEC_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace boxdec {

using Rational = mpq_class;
using Integer = mpz_class;

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using IVec = std::vector<long>;
using IMat = std::vector<IVec>;

// num/den in lowest terms. The two-argument mpq_class constructor does not
// canonicalize on its own, which breaks comparisons; always go through here.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q" with q > 0 after normalization.
Rational parse_rational(const std::string& s);

// Canonical form "p" or "p/q" with q > 1.
std::string format_rational(const Rational& r);

bool is_integer(const Rational& r);

// floor(r) as an exact integer.
Integer floor_rational(const Rational& r);

// r mod 1, in [0,1).
Rational frac_part(const Rational& r);

Rational dot(const QVec& a, const QVec& b);
Rational dot_iq(const IVec& a, const QVec& b);
long dot_ii(const IVec& a, const IVec& b);

QVec to_qvec(const IVec& v);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Rational& c, const QVec& v);

// Rank of a rational matrix (rows may be fewer or more than columns).
int rank(QMat m);

// Solves the square system a * x = b exactly. Empty optional when singular.
std::optional<QVec> solve_square(QMat a, QVec b);

// Basis of the right nullspace of a rational matrix (rows x cols).
QMat nullspace(QMat m);

// Divides an integer vector by the gcd of its entries and flips the sign so
// the first nonzero entry is positive. Zero vectors are returned unchanged.
IVec primitive_normalize(IVec v);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace boxdec

#endif
