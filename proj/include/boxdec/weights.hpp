// weights.hpp - a finite multiset of nonzero integer lattice vectors.

#ifndef BOXDEC_WEIGHTS_HPP
#define BOXDEC_WEIGHTS_HPP

#include "boxdec/rational.hpp"

namespace boxdec {

class WeightList {
 public:
  WeightList(int dim, IMat vectors);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  const IMat& vectors() const { return vectors_; }
  const IVec& operator[](int i) const { return vectors_[i]; }

  // rho = (1/2) sum of the vectors.
  QVec rho() const;

  bool spans() const { return spans_; }

  // Every basis contained in the list has determinant +-1.
  bool unimodular() const;

  // Sublist selected by index set.
  WeightList sublist(const std::vector<int>& indices) const;

  // Degree bound N - d for the local polynomial pieces of the box spline.
  int piece_degree_bound() const { return size() - dim_; }

  // Coordinatewise half-sums of absolute values: the box spline support is
  // contained in the product of [-radius_i, radius_i].
  QVec zonotope_radius() const;

  bool operator==(const WeightList& o) const {
    return dim_ == o.dim_ && vectors_ == o.vectors_;
  }
  bool operator<(const WeightList& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    return vectors_ < o.vectors_;
  }

 private:
  int dim_;
  IMat vectors_;
  bool spans_;
};

// Determinant of a square integer matrix (rows), exact.
Integer int_det(const IMat& rows);

}  // namespace boxdec

#endif
