#include "boxdec/deconvolve.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace boxdec {

namespace {

QVec negated(const QVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

}  // namespace

DeconvolutionResult deconvolve_at_detailed(const PieceProvider& provider,
                                           const WeightList& phi,
                                           const QVec& lambda,
                                           const QVec& eps) {
  if (!is_generic(eps, phi))
    throw std::invalid_argument("perturbation direction is not generic");
  DeconvolutionResult result{Rational(0), {}};
  Cyclotomic total;
  for (const TorusPoint& s : vertex_set(phi)) {
    MultiPoly<Cyclotomic> piece = provider(s, lambda, eps);
    VertexOperator op = build_vertex_operator(
        s, phi, std::max(phi.piece_degree_bound(), piece.total_degree()));
    MultiPoly<Cyclotomic> applied = apply_operator_product(op.factors, piece);
    Cyclotomic contrib = s.character(negated(lambda)) * applied.evaluate(lambda);
    total += contrib;
    result.contributions.push_back({s, std::move(contrib)});
  }
  if (!total.is_rational())
    throw std::logic_error(
        "deconvolution sum has a non-rational residue: cyclotomic "
        "cancellation failed");
  result.value = total.rational_part();
  return result;
}

Rational deconvolve_at(const PieceProvider& provider, const WeightList& phi,
                       const QVec& lambda, const QVec& eps) {
  return deconvolve_at_detailed(provider, phi, lambda, eps).value;
}

Rational deconvolve_unimodular(const RationalPieceProvider& provider,
                               const WeightList& phi, const QVec& lambda,
                               const QVec& eps) {
  if (!phi.unimodular())
    throw std::invalid_argument("deconvolve_unimodular requires a unimodular list");
  if (!is_generic(eps, phi))
    throw std::invalid_argument("perturbation direction is not generic");
  MultiPoly<Rational> piece = provider(lambda, eps);
  auto factors = ahat_operator(
      phi, std::max(phi.piece_degree_bound(), piece.total_degree()));
  return apply_operator_product(factors, piece).evaluate(lambda);
}

Rational reduced_quantization(const RationalPieceProvider& provider,
                              const WeightList& phi, const QVec& nu,
                              const QVec& eps) {
  if (!is_generic(eps, phi))
    throw std::invalid_argument("perturbation direction is not generic");
  MultiPoly<Rational> piece = provider(nu, eps);
  auto factors = ahat_operator(
      phi, std::max(phi.piece_degree_bound(), piece.total_degree()));
  return apply_operator_product(factors, piece).evaluate(nu);
}

DeconvolutionEngine::DeconvolutionEngine(MultiplicityFunction m, WeightList phi,
                                         uint64_t seed)
    : m_(std::move(m)),
      phi_(std::move(phi)),
      seed_(seed),
      vertices_(vertex_set(phi_)),
      families_(wall_families(phi_)) {
  const int K = std::max(0, phi_.piece_degree_bound());
  for (const TorusPoint& s : vertices_) {
    operators_.push_back(build_vertex_operator(s, phi_, K));
    WeightList sub = phi_.sublist(s.fixed_indices(phi_));
    if (!tables_.count(sub))
      tables_.emplace(sub, std::make_unique<PieceTable>(sub));
  }
  if (!tables_.count(phi_))
    tables_.emplace(phi_, std::make_unique<PieceTable>(phi_));
}

PieceTable& DeconvolutionEngine::table_for(const WeightList& sub) {
  auto it = tables_.find(sub);
  if (it == tables_.end())
    throw std::logic_error("piece table missing for sublist");
  return *it->second;
}

DeconvolutionResult DeconvolutionEngine::recover_at(const QVec& lambda,
                                                    const QVec& eps) {
  if (!is_generic(eps, families_))
    throw std::invalid_argument("perturbation direction is not generic");
  DeconvolutionResult result{Rational(0), {}};
  Cyclotomic total;
  for (size_t vi = 0; vi < vertices_.size(); ++vi) {
    const TorusPoint& s = vertices_[vi];
    WeightList sub = phi_.sublist(s.fixed_indices(phi_));
    MultiPoly<Cyclotomic> piece =
        forward_piece(m_, s, phi_, lambda, eps, table_for(sub), seed_);
    MultiPoly<Cyclotomic> applied =
        apply_operator_product(operators_[vi].factors, piece);
    Cyclotomic contrib = s.character(negated(lambda)) * applied.evaluate(lambda);
    total += contrib;
    result.contributions.push_back({s, std::move(contrib)});
  }
  if (!total.is_rational())
    throw std::logic_error(
        "deconvolution sum has a non-rational residue: cyclotomic "
        "cancellation failed");
  result.value = total.rational_part();
  return result;
}

Rational DeconvolutionEngine::recover_value(const QVec& lambda,
                                            const QVec& eps) {
  return recover_at(lambda, eps).value;
}

Rational DeconvolutionEngine::recover_unimodular(const QVec& lambda,
                                                 const QVec& eps) {
  return deconvolve_unimodular(
      [this](const QVec& base, const QVec& e) {
        return forward_piece_identity(m_, phi_, base, e, table_for(phi_), seed_);
      },
      phi_, lambda, eps);
}

Rational DeconvolutionEngine::reduced_quantization_at(const QVec& nu,
                                                      const QVec& eps) {
  return reduced_quantization(
      [this](const QVec& base, const QVec& e) {
        return forward_piece_identity(m_, phi_, base, e, table_for(phi_), seed_);
      },
      phi_, nu, eps);
}

std::vector<Rational> DeconvolutionEngine::recover_many(
    const std::vector<QVec>& points, const QVec& eps, bool parallel) {
  std::vector<Rational> out(points.size());
  const long n = static_cast<long>(points.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) out[i] = recover_value(points[i], eps);
  } else {
    for (long i = 0; i < n; ++i) out[i] = recover_value(points[i], eps);
  }
  return out;
}

std::vector<QVec> DeconvolutionEngine::support_window(
    const Rational& margin) const {
  if (m_.empty()) return {};
  auto [lo, hi] = m_.support_box();
  QVec radius = phi_.zonotope_radius();
  const int d = phi_.dim();
  IVec wlo(d), whi(d);
  for (int i = 0; i < d; ++i) {
    Rational r = radius[i] + margin;
    wlo[i] = lo[i] - static_cast<long>(floor_rational(r).get_si()) - 1;
    whi[i] = hi[i] + static_cast<long>(floor_rational(r).get_si()) + 1;
  }
  std::vector<QVec> points;
  IVec off = wlo;
  for (;;) {
    points.push_back(m_.point_of(off));
    int i = d - 1;
    for (; i >= 0; --i) {
      if (++off[i] <= whi[i]) break;
      off[i] = wlo[i];
    }
    if (i < 0) break;
  }
  return points;
}

}  // namespace boxdec
