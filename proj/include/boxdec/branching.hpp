// branching.hpp - branching of compact-group representations along an
// embedding, the weight list extracted from the embedding, the
// anti-invariant extension of the multiplicities, and the end-to-end
// recovery pipeline that checks the deconvolution output against the
// character-theoretic oracle.

#ifndef BOXDEC_BRANCHING_HPP
#define BOXDEC_BRANCHING_HPP

#include "boxdec/deconvolve.hpp"
#include "boxdec/rootdatum.hpp"

namespace boxdec {

struct EmbeddingSpec {
  RootDatum ambient;
  RootDatum subgroup;
  // Maps ambient weight coordinates to subgroup weight coordinates
  // (subgroup.rank x ambient.rank).
  IMat restriction;
};

IVec restrict_weight(const EmbeddingSpec& spec, const IVec& w);

// Branching multiplicities of the ambient irreducible with the given
// highest weight, in the rho-shifted parametrization: support points are
// mu + rho_H for each subgroup type mu, strictly dominant.
MultiplicityFunction branch(const EmbeddingSpec& spec, const IVec& highest);

// Extends a function supported on the open chamber of P_h+ to the
// W-anti-invariant function m on P_h: m(w nu) = sign(w) mult(nu).
MultiplicityFunction antiinvariant_extend(const MultiplicityFunction& mult,
                                          const RootDatum& h);

// Half of the nonzero weights of the complexified quotient of the ambient
// algebra by the subalgebra, one per +- pair, selected by first nonzero
// coordinate (bit i of flip_mask flips the sign choice of element i).
// Throws when the result does not span.
WeightList phi_from_embedding(const EmbeddingSpec& spec,
                              uint64_t flip_mask = 0);

struct BranchingReport {
  WeightList phi;
  std::vector<TorusPoint> vertices;
  MultiplicityFunction oracle;  // anti-invariant extension of the branch
  struct Entry {
    QVec nu;
    Rational expected;
    Rational recovered;
    Rational quantization;  // r(nu), identity-vertex genus value
  };
  std::vector<Entry> entries;
  int mismatches = 0;
  bool passed() const { return mismatches == 0; }
};

// Oracle branch -> anti-invariant extension -> forward pieces for every
// vertex -> deconvolution at every point of the inflated support window,
// compared exactly. Empty eps requests a deterministic generic draw.
BranchingReport verify_branching(const EmbeddingSpec& spec, const IVec& highest,
                                 QVec eps, uint64_t seed,
                                 uint64_t flip_mask = 0, bool parallel = true,
                                 const Rational& window_margin = Rational(1));

}  // namespace boxdec

#endif
