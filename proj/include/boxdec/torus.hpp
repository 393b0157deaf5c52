// torus.hpp - rational points of the torus dual to the lattice, and the
// vertex set of a weight list.

#ifndef BOXDEC_TORUS_HPP
#define BOXDEC_TORUS_HPP

#include "boxdec/cyclotomic.hpp"
#include "boxdec/weights.hpp"

namespace boxdec {

class TorusPoint {
 public:
  // Coordinates are reduced mod 1 into [0,1)^d.
  explicit TorusPoint(QVec coords);

  const QVec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }

  // Smallest n with n * coords integral.
  long order() const { return order_; }

  bool is_identity() const { return order_ == 1; }

  // s^lambda = e^{2 pi i <coords, lambda>} for a rational point lambda,
  // as an exact root of unity.
  Cyclotomic character(const QVec& lambda) const;
  Cyclotomic character(const IVec& lambda) const;

  // Inverse point -s (coordinatewise negation mod 1).
  TorusPoint inverted() const;

  // Sublist [alpha in Phi : s^alpha = 1].
  std::vector<int> fixed_indices(const WeightList& phi) const;

  bool operator==(const TorusPoint& o) const { return coords_ == o.coords_; }
  bool operator<(const TorusPoint& o) const { return coords_ < o.coords_; }

 private:
  QVec coords_;
  long order_;
};

// All s in T with [alpha : s^alpha = 1] still spanning, enumerated from the
// basis subsets of Phi via Smith normal form. Sorted lexicographically by
// coordinates; always contains the identity and is closed under inversion.
std::vector<TorusPoint> vertex_set(const WeightList& phi);

}  // namespace boxdec

#endif
