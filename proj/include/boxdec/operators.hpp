// operators.hpp - the Todd-type factor series and their action on
// polynomials as products of series in directional derivatives.

#ifndef BOXDEC_OPERATORS_HPP
#define BOXDEC_OPERATORS_HPP

#include "boxdec/multipoly.hpp"
#include "boxdec/series.hpp"
#include "boxdec/torus.hpp"

namespace boxdec {

// Coefficients through order K of x / (e^{x/2} - e^{-x/2}). Even series,
// constant term 1, second coefficient -1/24.
TruncatedSeries<Rational> ahat_factor_series(int K);

// Coefficients through order K of (1 - c) / (e^{-x/2} - c e^{x/2}),
// requires c != 1. Constant term 1, linear coefficient (1+c)/(2(1-c)).
TruncatedSeries<Cyclotomic> e_factor_series(const Cyclotomic& c, int K);

// A series paired with the lattice direction whose directional derivative
// replaces the series variable.
template <class T>
struct OperatorFactor {
  TruncatedSeries<T> series;
  IVec direction;
};

// Applies the commuting product of the factors to p. Each factor's
// truncation order must cover the total degree of p.
template <class T>
MultiPoly<T> apply_operator_product(const std::vector<OperatorFactor<T>>& factors,
                                    const MultiPoly<T>& p) {
  MultiPoly<T> cur = p;
  for (const auto& f : factors) {
    if (f.series.truncation_order < cur.total_degree())
      throw std::invalid_argument("operator series truncated below polynomial degree");
    MultiPoly<T> out(cur.dim());
    MultiPoly<T> deriv = cur;  // k-th directional derivative, k = 0, 1, ...
    QVec dir = to_qvec(f.direction);
    for (int k = 0; k <= f.series.truncation_order; ++k) {
      if (deriv.is_zero()) break;
      if (!scalar_is_zero(f.series[k]))
        out = out + deriv.scaled(f.series[k]);
      deriv = deriv.directional(dir);
    }
    cur = std::move(out);
  }
  return cur;
}

// The operator attached to a vertex s: one ahat factor per element of
// Phi_s and one e-factor (with c = s^{-alpha}) per element of Phi minus
// Phi_s, all truncated at the given order. For the identity this is the
// plain product of ahat factors over Phi.
struct VertexOperator {
  TorusPoint vertex;
  std::vector<OperatorFactor<Cyclotomic>> factors;
};

VertexOperator build_vertex_operator(const TorusPoint& s, const WeightList& phi,
                                     int truncation_order = -1);

// Rational factors of the identity-vertex operator over the full list.
std::vector<OperatorFactor<Rational>> ahat_operator(const WeightList& phi,
                                                    int truncation_order = -1);

}  // namespace boxdec

#endif
