// rootdatum.hpp - compact-group combinatorics in fundamental-weight
// coordinates: root systems, Weyl groups, Freudenthal weight
// multiplicities and the Weyl dimension formula.
//
// Weights live in Z^rank with the fundamental weights as the standard
// basis; simple root j is then column j of the Cartan matrix. Torus
// factors contribute coordinates with no roots.

#ifndef BOXDEC_ROOTDATUM_HPP
#define BOXDEC_ROOTDATUM_HPP

#include "boxdec/boxspline.hpp"

namespace boxdec {

class RootDatum {
 public:
  // Supported simple types: A1, A2, B2 (= C2), G2.
  static RootDatum simple(char family, int rank);
  static RootDatum torus(int rank);
  static RootDatum product(const RootDatum& a, const RootDatum& b);
  // Parses labels like "A2", "T1", and products "A1xT1".
  static RootDatum parse(const std::string& label);

  int rank() const { return rank_; }
  int num_simple() const { return static_cast<int>(simple_roots_.size()); }
  const IMat& simple_roots() const { return simple_roots_; }
  const IMat& positive_roots() const { return positive_roots_; }

  // Half-sum of positive roots: 1 on each semisimple coordinate.
  IVec rho() const;

  // W-invariant inner product (torus coordinates carry the standard form).
  Rational inner(const QVec& a, const QVec& b) const;

  bool is_dominant(const IVec& w) const;
  bool is_strictly_dominant(const IVec& w) const;

  // s_i applied to a weight.
  IVec reflect(int i, const IVec& w) const;

  // The unique dominant element of the Weyl orbit; sign (when requested)
  // is the determinant of the group element used, meaningless if the
  // weight lies on a wall.
  IVec dominant_conjugate(IVec w, int* sign = nullptr) const;
  // The unique antidominant element (= w0 * dominant conjugate).
  IVec antidominant_conjugate(IVec w) const;

  // All Weyl group elements as matrices on weight coordinates, with signs
  // det(w). Deterministic order (lexicographic by matrix). Throws when the
  // group order exceeds the cap.
  struct WeylElement {
    IMat matrix;  // acts by matrix * weight
    int sign;
  };
  std::vector<WeylElement> weyl_group(size_t cap = 1024) const;

  IVec apply(const IMat& w, const IVec& v) const;

  // Root-basis coordinates of a weight-coordinate vector (rational in
  // general); only the semisimple block is inverted.
  QVec to_root_basis(const QVec& w) const;

  std::string label() const { return label_; }

 private:
  RootDatum() = default;
  void finish();  // derives positive roots

  int rank_ = 0;
  IMat simple_roots_;          // full rank_-dim coordinate vectors
  std::vector<int> simple_coord_;  // coordinate index of each simple root
  QVec symmetrizer_;           // d_i per simple root (half squared norms)
  IMat positive_roots_;
  std::string label_;
};

// Exact weight multiplicities of the irreducible representation with the
// given dominant highest weight, by the Freudenthal recursion.
MultiplicityFunction weight_multiplicities(const RootDatum& g,
                                           const IVec& highest);

// Weyl dimension formula.
Integer weyl_dimension(const RootDatum& g, const IVec& highest);

}  // namespace boxdec

#endif
