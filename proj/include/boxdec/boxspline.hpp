// boxspline.hpp - exact evaluation of centered box splines, recovery of
// their alcove-local polynomial pieces by interpolation, the twisted
// expansion attached to a torus vertex, and the forward convolution of a
// discrete multiplicity function.

#ifndef BOXDEC_BOXSPLINE_HPP
#define BOXDEC_BOXSPLINE_HPP

#include <mutex>

#include "boxdec/arrangement.hpp"
#include "boxdec/multipoly.hpp"
#include "boxdec/torus.hpp"

namespace boxdec {

// Density of the centered box spline B_c(Phi) at a generic rational point,
// by the knock-one-out recurrence. Throws NonGenericPoint when the
// recursion hits a support boundary exactly.
Rational eval_box(const WeightList& phi, const QVec& x);

template <class T>
struct PolynomialGerm {
  AlcoveGerm germ;
  MultiPoly<T> poly;
  int degree_bound;
};

// The polynomial of degree <= N - d agreeing with eval_box on the germ's
// alcove, by exact interpolation at sampled interior points, with a
// held-out verification pass. A held-out mismatch is a logic error and
// aborts; a singular system is retried with fresh samples.
PolynomialGerm<Rational> local_piece(const WeightList& phi,
                                     const AlcoveGerm& germ, uint64_t seed);

// Cache of local pieces of one box spline, keyed by alcove signature.
// Lookups from multiple threads are safe; a piece may be computed twice
// under contention but the results are identical.
class PieceTable {
 public:
  explicit PieceTable(WeightList phi);

  const WeightList& phi() const { return phi_; }
  const std::vector<AffineWallFamily>& families() const { return families_; }

  // Local piece on the alcove of base + 0+ * eps.
  MultiPoly<Rational> piece_at(const QVec& base, const QVec& eps,
                               uint64_t seed);

 private:
  WeightList phi_;
  std::vector<AffineWallFamily> families_;
  QVec radius_;
  std::map<std::vector<long>, MultiPoly<Rational>> pieces_;
  std::mutex mu_;
};

// One summand of Eq-style twisted expansion: coefficient times the
// translate of B_c(Phi_s) by the shift.
struct TwistedTerm {
  Cyclotomic coeff;
  QVec shift;  // a +-1/2 combination of Phi minus Phi_s
};

struct TwistedBoxExpansion {
  WeightList sublist;        // Phi_s
  std::vector<TwistedTerm> terms;  // merged by shift
  long field_order;          // cyclotomic order housing the coefficients
};

// Expands prod_{alpha not in Phi_s} (delta_{a/2} - s^{-a} delta_{-a/2}) /
// (1 - s^{-a}) applied to B_c(Phi_s). Requires s in the vertex set.
TwistedBoxExpansion twisted_expansion(const TorusPoint& s,
                                      const WeightList& phi);

// Finitely supported exact function on a shifted lattice: support points
// are shift + integer offsets.
class MultiplicityFunction {
 public:
  explicit MultiplicityFunction(int dim, QVec shift = {});

  int dim() const { return dim_; }
  const QVec& shift() const { return shift_; }
  const std::map<IVec, Rational>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

  void set(const IVec& offset, const Rational& value);
  void add(const IVec& offset, const Rational& value);
  Rational at_offset(const IVec& offset) const;  // 0 off support
  Rational at_point(const QVec& point) const;    // 0 off the shifted lattice

  QVec point_of(const IVec& offset) const;  // shift + offset

  // Coordinatewise bounding box [lo, hi] of the support offsets.
  std::pair<IVec, IVec> support_box() const;  // requires non-empty

 private:
  int dim_;
  QVec shift_;
  std::map<IVec, Rational> values_;
};

// Local polynomial of b(s, m, Phi) = (sum_nu (s-hat m)(nu) delta_nu) *
// B_c(s, Phi) on the alcove of base + 0+ * eps. The piece cache for
// B_c(Phi_s) is supplied by the caller and reused across queries.
MultiPoly<Cyclotomic> forward_piece(const MultiplicityFunction& m,
                                    const TorusPoint& s, const WeightList& phi,
                                    const QVec& base, const QVec& eps,
                                    PieceTable& table, uint64_t seed);

// Rational specialization for the identity vertex: the local polynomial of
// b(m) = (sum m(nu) delta_nu) * B_c(Phi).
MultiPoly<Rational> forward_piece_identity(const MultiplicityFunction& m,
                                           const WeightList& phi,
                                           const QVec& base, const QVec& eps,
                                           PieceTable& table, uint64_t seed);

}  // namespace boxdec

#endif
