// deconvolve.hpp - the deconvolution formulas: vertex operators applied to
// forward pieces, germ limits, and summation over the vertex set.

#ifndef BOXDEC_DECONVOLVE_HPP
#define BOXDEC_DECONVOLVE_HPP

#include <functional>
#include <memory>

#include "boxdec/boxspline.hpp"
#include "boxdec/operators.hpp"

namespace boxdec {

// Yields, for a vertex s, the local polynomial of b(s, m, Phi) on the
// alcove of base + 0+ * eps.
using PieceProvider = std::function<MultiPoly<Cyclotomic>(
    const TorusPoint& s, const QVec& base, const QVec& eps)>;

// Identity-vertex variant with rational coefficients.
using RationalPieceProvider =
    std::function<MultiPoly<Rational>(const QVec& base, const QVec& eps)>;

// lim_eps of a germ-local polynomial family at the germ's base point: plain
// polynomial evaluation, since the piece extends continuously to the
// closure of its alcove.
template <class T>
T limit_value(const PolynomialGerm<T>& piece, const QVec& lambda) {
  if (piece.germ.base != lambda)
    throw std::invalid_argument("limit requested away from the germ base");
  return piece.poly.evaluate(lambda);
}

struct VertexContribution {
  TorusPoint vertex;
  Cyclotomic value;  // s^{-lambda} * (A-hat(s,Phi) piece)(lambda)
};

struct DeconvolutionResult {
  Rational value;
  std::vector<VertexContribution> contributions;
};

// Sum over the vertex set of s^{-lambda} lim_eps A-hat(s,Phi)(b(s,m)).
// The cyclotomic total must come out exactly rational; anything else is a
// hard failure.
DeconvolutionResult deconvolve_at_detailed(const PieceProvider& provider,
                                           const WeightList& phi,
                                           const QVec& lambda, const QVec& eps);
Rational deconvolve_at(const PieceProvider& provider, const WeightList& phi,
                       const QVec& lambda, const QVec& eps);

// Single-vertex specialization valid for unimodular Phi:
// lim_eps(A-hat(Phi) b(m)) at lambda.
Rational deconvolve_unimodular(const RationalPieceProvider& provider,
                               const WeightList& phi, const QVec& lambda,
                               const QVec& eps);

// lim_eps A-hat(Phi) applied to the identity-vertex forward piece at nu;
// for unimodular Phi and integer m this is the integer quantization number
// of the reduced space at nu.
Rational reduced_quantization(const RationalPieceProvider& provider,
                              const WeightList& phi, const QVec& nu,
                              const QVec& eps);

// Binds a multiplicity function to a weight list: owns the per-sublist
// piece caches and precomputed vertex operators, and runs the recovery at
// single points or over whole windows (serially or with OpenMP).
class DeconvolutionEngine {
 public:
  DeconvolutionEngine(MultiplicityFunction m, WeightList phi, uint64_t seed);

  const WeightList& phi() const { return phi_; }
  const MultiplicityFunction& multiplicity() const { return m_; }
  const std::vector<TorusPoint>& vertices() const { return vertices_; }

  DeconvolutionResult recover_at(const QVec& lambda, const QVec& eps);
  Rational recover_value(const QVec& lambda, const QVec& eps);
  Rational recover_unimodular(const QVec& lambda, const QVec& eps);
  Rational reduced_quantization_at(const QVec& nu, const QVec& eps);

  // Values at many points in input order. The parallel path and the serial
  // reference compute identical results.
  std::vector<Rational> recover_many(const std::vector<QVec>& points,
                                     const QVec& eps, bool parallel);

  // All points of the shifted support lattice inside the support box
  // inflated by the zonotope radius plus margin. Lexicographic order.
  std::vector<QVec> support_window(const Rational& margin = Rational(1)) const;

 private:
  MultiplicityFunction m_;
  WeightList phi_;
  uint64_t seed_;
  std::vector<TorusPoint> vertices_;
  std::vector<VertexOperator> operators_;
  std::vector<AffineWallFamily> families_;
  std::map<WeightList, std::unique_ptr<PieceTable>> tables_;

  PieceTable& table_for(const WeightList& sub);
};

}  // namespace boxdec

#endif
