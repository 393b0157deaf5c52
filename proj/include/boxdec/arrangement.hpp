// arrangement.hpp - the affine wall arrangement of a weight list and
// symbolic-perturbation point location in its alcoves.
//
// Walls are the hyperplanes rho + lambda + U with lambda in Z^d and U a
// hyperplane spanned by elements of Phi. Alcoves are never enumerated
// globally; every query is germ-local at a point with a generic
// perturbation direction.

#ifndef BOXDEC_ARRANGEMENT_HPP
#define BOXDEC_ARRANGEMENT_HPP

#include <cstdint>

#include "boxdec/weights.hpp"

namespace boxdec {

struct NonGenericPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One parallel family of walls: a primitive sign-normalized integer normal u
// and the offset progression { <u, rho + lambda> : lambda in Z^d }. Since u
// is primitive, <u, Z^d> = Z and the progression is phase + Z.
struct AffineWallFamily {
  IVec normal;
  Rational phase;  // in [0,1)
};

// All distinct wall directions of Phi, deduplicated by primitive normal.
// Requires Phi to span.
std::vector<AffineWallFamily> wall_families(const WeightList& phi);

// True iff <u, eps> != 0 for every wall family normal u.
bool is_generic(const QVec& eps, const WeightList& phi);
bool is_generic(const QVec& eps, const std::vector<AffineWallFamily>& families);

// Identifies the alcove containing base + t*eps for small t > 0: per family
// the integer k with phase + k < <u, x> < phase + k + 1 on the germ side.
struct AlcoveGerm {
  QVec base;
  QVec eps;
  std::vector<long> signature;

  bool operator<(const AlcoveGerm&) const = delete;
};

AlcoveGerm alcove_of(const QVec& v, const QVec& eps,
                     const std::vector<AffineWallFamily>& families);

// True iff p lies strictly inside the alcove identified by the germ.
bool in_alcove_interior(const QVec& p, const AlcoveGerm& germ,
                        const std::vector<AffineWallFamily>& families);

// count distinct rational points strictly inside the germ's alcove,
// deterministic for a fixed seed. Throws after a bounded retry budget.
std::vector<QVec> sample_alcove_points(const AlcoveGerm& germ,
                                       const std::vector<AffineWallFamily>& families,
                                       int count, uint64_t seed,
                                       int retry_budget = 20000);

// A generic direction for Phi, chosen deterministically from the seed.
QVec default_generic_direction(const WeightList& phi, uint64_t seed = 0);

}  // namespace boxdec

#endif
