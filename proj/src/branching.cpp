#include "boxdec/branching.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace boxdec {

IVec restrict_weight(const EmbeddingSpec& spec, const IVec& w) {
  const int rh = spec.subgroup.rank();
  const int rg = spec.ambient.rank();
  if (static_cast<int>(spec.restriction.size()) != rh)
    throw std::invalid_argument("restriction matrix has wrong row count");
  IVec out(rh, 0);
  for (int i = 0; i < rh; ++i) {
    if (static_cast<int>(spec.restriction[i].size()) != rg)
      throw std::invalid_argument("restriction matrix has wrong column count");
    for (int j = 0; j < rg; ++j) out[i] += spec.restriction[i][j] * w[j];
  }
  return out;
}

MultiplicityFunction branch(const EmbeddingSpec& spec, const IVec& highest) {
  const RootDatum& h = spec.subgroup;
  MultiplicityFunction gw = weight_multiplicities(spec.ambient, highest);

  // restricted formal character
  std::map<IVec, Rational> restricted;
  for (const auto& [w, mu] : gw.values()) {
    IVec r = restrict_weight(spec, w);
    restricted[r] += mu;
  }

  // convolve with the alternating sum over W rho_H: the result is the
  // anti-invariant function whose strictly dominant values are the
  // branching multiplicities
  const IVec rho = h.rho();
  std::map<IVec, Rational> alt;
  for (const auto& we : h.weyl_group()) {
    IVec wr = h.apply(we.matrix, rho);
    for (const auto& [lam, c] : restricted) {
      IVec key = lam;
      for (int i = 0; i < h.rank(); ++i) key[i] += wr[i];
      alt[key] += Rational(we.sign) * c;
    }
  }

  MultiplicityFunction out(h.rank());
  for (const auto& [nu, c] : alt) {
    if (c == 0) continue;
    if (!h.is_strictly_dominant(nu)) continue;
    out.set(nu, c);
  }
  return out;
}

MultiplicityFunction antiinvariant_extend(const MultiplicityFunction& mult,
                                          const RootDatum& h) {
  MultiplicityFunction out(mult.dim(), mult.shift());
  auto weyl = h.weyl_group();
  for (const auto& [off, c] : mult.values()) {
    // support must lie strictly inside the chamber
    QVec pt = mult.point_of(off);
    IVec nu(mult.dim());
    for (int i = 0; i < mult.dim(); ++i) {
      if (!is_integer(pt[i]))
        throw std::invalid_argument("anti-invariant extension needs integral support");
      nu[i] = static_cast<long>(pt[i].get_num().get_si());
    }
    if (!h.is_strictly_dominant(nu))
      throw std::invalid_argument("support touches a chamber wall");
    for (const auto& we : weyl) {
      IVec wnu = h.apply(we.matrix, nu);
      out.add(wnu, Rational(we.sign) * c);
    }
  }
  return out;
}

WeightList phi_from_embedding(const EmbeddingSpec& spec, uint64_t flip_mask) {
  // T_H-weights of the complexified ambient algebra minus those of the
  // subalgebra; zero weights cancel against the Cartan directions
  std::map<IVec, long> bag;
  for (const IVec& r : spec.ambient.positive_roots()) {
    IVec v = restrict_weight(spec, r);
    bag[v] += 1;
    for (long& x : v) x = -x;
    bag[v] += 1;
  }
  for (const IVec& r : spec.subgroup.positive_roots()) {
    IVec v = r;
    if (--bag[v] < 0)
      throw std::invalid_argument("subgroup roots not found among restricted weights");
    for (long& x : v) x = -x;
    if (--bag[v] < 0)
      throw std::invalid_argument("subgroup roots not found among restricted weights");
  }

  IMat phi;
  int index = 0;
  for (;;) {
    // take any remaining nonzero weight and pair it with its negative
    auto it = std::find_if(bag.begin(), bag.end(), [](const auto& kv) {
      bool zero = true;
      for (long x : kv.first) zero = zero && x == 0;
      return !zero && kv.second > 0;
    });
    if (it == bag.end()) break;
    IVec v = it->first;
    IVec neg = v;
    for (long& x : neg) x = -x;
    if (bag[neg] <= 0)
      throw std::invalid_argument("quotient weights do not come in +- pairs");
    bag[v] -= 1;
    bag[neg] -= 1;
    // orient by first nonzero coordinate, then apply the requested flip
    IVec chosen = v;
    for (long x : v) {
      if (x > 0) break;
      if (x < 0) { chosen = neg; break; }
    }
    if (flip_mask & (uint64_t(1) << index))
      for (long& x : chosen) x = -x;
    phi.push_back(std::move(chosen));
    ++index;
  }
  std::sort(phi.begin(), phi.end());
  WeightList out(spec.subgroup.rank(), std::move(phi));
  if (!out.spans())
    throw std::invalid_argument("embedding weight list does not span");
  return out;
}

BranchingReport verify_branching(const EmbeddingSpec& spec, const IVec& highest,
                                 QVec eps, uint64_t seed, uint64_t flip_mask,
                                 bool parallel, const Rational& window_margin) {
  MultiplicityFunction mult = branch(spec, highest);
  MultiplicityFunction m = antiinvariant_extend(mult, spec.subgroup);
  WeightList phi = phi_from_embedding(spec, flip_mask);
  if (eps.empty()) eps = default_generic_direction(phi, seed);

  DeconvolutionEngine engine(m, phi, seed);
  BranchingReport report{phi, engine.vertices(), m, {}, 0};

  std::vector<QVec> points = engine.support_window(window_margin);
  std::vector<Rational> recovered = engine.recover_many(points, eps, parallel);

  report.entries.resize(points.size());
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) {
    BranchingReport::Entry e;
    e.nu = points[i];
    e.expected = m.at_point(points[i]);
    e.recovered = recovered[i];
    e.quantization = engine.reduced_quantization_at(points[i], eps);
    report.entries[i] = std::move(e);
  }
  for (const auto& e : report.entries)
    if (e.expected != e.recovered) ++report.mismatches;
  return report;
}

}  // namespace boxdec
