#include "boxdec/arrangement.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace boxdec {

namespace {

// Integer normal of the hyperplane spanned by the given rows (rank d-1),
// primitive and sign-normalized. Empty when the rows do not have rank d-1.
IVec hyperplane_normal(const IMat& rows, int dim) {
  QMat m;
  for (const IVec& r : rows) m.push_back(to_qvec(r));
  if (m.empty()) m.push_back(QVec(dim, Rational(0)));
  if (rank(m) != dim - 1) return {};
  QMat ker = nullspace(m);
  if (ker.size() != 1) return {};
  // clear denominators
  Integer den = 1;
  for (const Rational& x : ker[0])
    den = den / gcd(den, Integer(x.get_den())) * Integer(x.get_den());
  IVec n(dim);
  for (int i = 0; i < dim; ++i) {
    Rational v = ker[0][i] * Rational(den);
    if (!is_integer(v)) throw std::logic_error("normal clearing failed");
    n[i] = static_cast<long>(v.get_num().get_si());
  }
  return primitive_normalize(n);
}

}  // namespace

std::vector<AffineWallFamily> wall_families(const WeightList& phi) {
  if (!phi.spans())
    throw std::invalid_argument("wall_families requires a spanning list");
  const int d = phi.dim();
  const int n = phi.size();
  const QVec rho = phi.rho();

  std::set<IVec> normals;
  std::vector<int> idx(d - 1);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == d - 1) {
      IMat rows;
      for (int i : idx) rows.push_back(phi[i]);
      IVec u = hyperplane_normal(rows, d);
      if (!u.empty()) normals.insert(u);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);

  std::vector<AffineWallFamily> out;
  for (const IVec& u : normals)
    out.push_back({u, frac_part(dot_iq(u, rho))});
  return out;
}

bool is_generic(const QVec& eps, const std::vector<AffineWallFamily>& families) {
  for (const auto& f : families)
    if (dot_iq(f.normal, eps) == 0) return false;
  return true;
}

bool is_generic(const QVec& eps, const WeightList& phi) {
  return is_generic(eps, wall_families(phi));
}

AlcoveGerm alcove_of(const QVec& v, const QVec& eps,
                     const std::vector<AffineWallFamily>& families) {
  if (!is_generic(eps, families))
    throw std::invalid_argument("perturbation direction is not generic");
  AlcoveGerm g{v, eps, {}};
  g.signature.reserve(families.size());
  for (const auto& f : families) {
    Rational t = dot_iq(f.normal, v) - f.phase;
    Integer k = floor_rational(t);
    if (t == Rational(k)) {
      // exactly on a wall: tie broken by the perturbation side
      if (dot_iq(f.normal, eps) < 0) k -= 1;
    }
    g.signature.push_back(static_cast<long>(k.get_si()));
  }
  return g;
}

bool in_alcove_interior(const QVec& p, const AlcoveGerm& germ,
                        const std::vector<AffineWallFamily>& families) {
  for (size_t i = 0; i < families.size(); ++i) {
    Rational t = dot_iq(families[i].normal, p) - families[i].phase;
    Rational lo(germ.signature[i]);
    if (!(t > lo && t < lo + 1)) return false;
  }
  return true;
}

std::vector<QVec> sample_alcove_points(const AlcoveGerm& germ,
                                       const std::vector<AffineWallFamily>& families,
                                       int count, uint64_t seed,
                                       int retry_budget) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> num_dist(-64, 64);
  std::uniform_int_distribution<long> den_dist(65, 257);

  const int d = static_cast<int>(germ.base.size());
  std::set<QVec> seen;
  std::vector<QVec> out;
  Rational step(1, 8);
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > retry_budget)
      throw std::runtime_error("alcove sampling retry budget exhausted");
    // shrink the probe scale as attempts accumulate
    Rational scale = step / Rational(1 + attempts / 16);
    QVec p(d);
    for (int i = 0; i < d; ++i) {
      Rational jitter = make_rational(num_dist(rng), den_dist(rng));
      p[i] = germ.base[i] + scale * germ.eps[i] + scale * jitter / 4;
    }
    if (!in_alcove_interior(p, germ, families)) continue;
    if (!seen.insert(p).second) continue;
    out.push_back(std::move(p));
  }
  return out;
}

QVec default_generic_direction(const WeightList& phi, uint64_t seed) {
  auto families = wall_families(phi);
  const int d = phi.dim();
  std::mt19937_64 rng(seed * 0x2545F4914F6CDD1DULL + 0x853c49e68u);
  std::uniform_int_distribution<long> dist(1, 997);
  for (int tries = 0; tries < 1000; ++tries) {
    QVec eps(d);
    for (int i = 0; i < d; ++i) eps[i] = make_rational(dist(rng), 1 + i + dist(rng));
    if (is_generic(eps, families)) return eps;
  }
  throw std::runtime_error("failed to draw a generic direction");
}

}  // namespace boxdec
