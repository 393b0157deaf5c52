#include "boxdec/operators.hpp"

#include <stdexcept>

namespace boxdec {

TruncatedSeries<Rational> ahat_factor_series(int K) {
  if (K < 0) throw std::invalid_argument("negative truncation order");
  // denominator: 2 sinh(x/2) / x = sum_k x^{2k} / (4^k (2k+1)!)
  TruncatedSeries<Rational> den = TruncatedSeries<Rational>::zero(K);
  Rational fourk = 1;
  Rational fact = 1;  // (2k+1)!
  for (int k = 0; 2 * k <= K; ++k) {
    if (k > 0) {
      fourk *= 4;
      fact *= Rational(2 * k) * Rational(2 * k + 1);
    }
    den[2 * k] = 1 / (fourk * fact);
  }
  return den.inverse();
}

TruncatedSeries<Cyclotomic> e_factor_series(const Cyclotomic& c, int K) {
  if (K < 0) throw std::invalid_argument("negative truncation order");
  Cyclotomic one(Rational(1));
  Cyclotomic denom0 = one - c;
  if (denom0.is_zero())
    throw std::domain_error("e-factor requires s^{-alpha} != 1");
  // (e^{-x/2} - c e^{x/2}) / (1 - c), coefficient k:
  // ((-1/2)^k - c (1/2)^k) / k! / (1 - c)
  TruncatedSeries<Cyclotomic> den = TruncatedSeries<Cyclotomic>::zero(K);
  Rational half_pow = 1;  // (1/2)^k
  Rational fact = 1;
  Cyclotomic inv0 = denom0.inverse();
  for (int k = 0; k <= K; ++k) {
    if (k > 0) {
      half_pow /= 2;
      fact *= k;
    }
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    Cyclotomic num = Cyclotomic(sign * half_pow) - c * Cyclotomic(half_pow);
    den[k] = num * Cyclotomic(1 / fact) * inv0;
  }
  return den.inverse();
}

namespace {
int default_truncation(const WeightList& phi, int requested) {
  if (requested >= 0) return requested;
  return std::max(0, phi.piece_degree_bound());
}
}  // namespace

VertexOperator build_vertex_operator(const TorusPoint& s, const WeightList& phi,
                                     int truncation_order) {
  const int K = default_truncation(phi, truncation_order);
  std::vector<int> fixed = s.fixed_indices(phi);
  if (fixed.empty() || !phi.sublist(fixed).spans())
    throw std::invalid_argument("torus point is not a vertex of the list");
  std::vector<bool> in_sub(phi.size(), false);
  for (int i : fixed) in_sub[i] = true;

  VertexOperator op{s, {}};
  TruncatedSeries<Cyclotomic> ahat =
      ahat_factor_series(K).convert<Cyclotomic>();
  for (int i = 0; i < phi.size(); ++i) {
    if (in_sub[i]) {
      op.factors.push_back({ahat, phi[i]});
    } else {
      IVec neg = phi[i];
      for (long& x : neg) x = -x;
      Cyclotomic c = s.character(neg);
      op.factors.push_back({e_factor_series(c, K), phi[i]});
    }
  }
  return op;
}

std::vector<OperatorFactor<Rational>> ahat_operator(const WeightList& phi,
                                                    int truncation_order) {
  const int K = default_truncation(phi, truncation_order);
  TruncatedSeries<Rational> ahat = ahat_factor_series(K);
  std::vector<OperatorFactor<Rational>> factors;
  for (int i = 0; i < phi.size(); ++i) factors.push_back({ahat, phi[i]});
  return factors;
}

}  // namespace boxdec
