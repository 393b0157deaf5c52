#include "boxdec/boxspline.hpp"

#include <functional>
#include <stdexcept>

namespace boxdec {

namespace {

// Shared state of one top-level evaluation. The knock-one-out recursion
// revisits the same (sublist, point) pairs heavily, so results are memoized
// per call.
struct BoxEvaluator {
  const WeightList& phi;
  int d;
  std::map<std::pair<uint64_t, QVec>, Rational> memo;

  explicit BoxEvaluator(const WeightList& p) : phi(p), d(p.dim()) {}

  // Value of the *uncentered* box spline of the sublist selected by mask.
  Rational eval(uint64_t mask, const QVec& y) {
    auto key = std::make_pair(mask, y);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rational v = compute(mask, y);
    memo.emplace(std::move(key), v);
    return v;
  }

  Rational compute(uint64_t mask, const QVec& y) {
    std::vector<int> idx;
    for (int i = 0; i < phi.size(); ++i)
      if (mask & (uint64_t(1) << i)) idx.push_back(i);
    const int k = static_cast<int>(idx.size());

    QMat rows;
    for (int i : idx) rows.push_back(to_qvec(phi[i]));
    const int r = rank(rows);

    if (r < d) {
      // supported on a lower-dimensional set: zero off its span,
      // non-generic on it
      QMat with_y = rows;
      with_y.push_back(y);
      if (rank(with_y) == r)
        throw NonGenericPoint("point lies on a degenerate sub-spline support");
      return 0;
    }

    if (k == d) {
      // normalized indicator of the parallelepiped of a basis
      QMat a(d, QVec(d));
      for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) a[i][j] = Rational(phi[idx[j]][i]);
      auto t = solve_square(a, y);
      if (!t) throw std::logic_error("basis system unsolvable despite full rank");
      bool inside = true;
      for (const Rational& ti : *t) {
        if (ti == 0 || ti == 1)
          throw NonGenericPoint("point on a parallelepiped facet");
        if (ti < 0 || ti > 1) inside = false;
      }
      if (!inside) return 0;
      IMat b;
      for (int i : idx) b.push_back(phi[i]);
      Integer det = int_det(b);
      return Rational(1) / Rational(abs(det));
    }

    // knock-one-out recurrence with the minimal-norm solution of
    // sum t_i alpha_i = y
    QMat gram(d, QVec(d, Rational(0)));
    for (int i : idx)
      for (int a2 = 0; a2 < d; ++a2)
        for (int b2 = 0; b2 < d; ++b2)
          gram[a2][b2] += Rational(phi[i][a2]) * Rational(phi[i][b2]);
    auto w = solve_square(gram, y);
    if (!w) throw std::logic_error("gram system singular despite spanning");
    Rational total = 0;
    for (int pos = 0; pos < k; ++pos) {
      const int i = idx[pos];
      Rational ti = dot_iq(phi[i], *w);
      uint64_t sub = mask & ~(uint64_t(1) << i);
      if (ti != 0) total += ti * eval(sub, y);
      if (ti != 1) {
        QVec shifted = sub_point(y, phi[i]);
        total += (1 - ti) * eval(sub, shifted);
      }
    }
    return total / Rational(k - d);
  }

  static QVec sub_point(const QVec& y, const IVec& a) {
    QVec r(y.size());
    for (size_t i = 0; i < y.size(); ++i) r[i] = y[i] - Rational(a[i]);
    return r;
  }
};

std::vector<std::vector<int>> monomials_up_to(int dim, int max_degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(dim, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == dim) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[pos] = k;
      rec(pos + 1, remaining - k);
    }
    e[pos] = 0;
  };
  rec(0, max_degree);
  return out;
}

MultiPoly<Rational> interpolate_piece(const WeightList& phi,
                                      const std::vector<AffineWallFamily>& families,
                                      const AlcoveGerm& germ, uint64_t seed) {
  const int d = phi.dim();
  const int deg = phi.piece_degree_bound();
  const auto mons = monomials_up_to(d, deg);
  const int m = static_cast<int>(mons.size());
  const int holdout = 3;

  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<QVec> pts;
    std::vector<Rational> vals;
    try {
      pts = sample_alcove_points(germ, families, m + holdout,
                                 seed + 0x51ed270bu * (attempt + 1));
      vals.reserve(pts.size());
      for (const QVec& p : pts) vals.push_back(eval_box(phi, p));
    } catch (const NonGenericPoint&) {
      continue;  // resample the whole batch
    } catch (const std::runtime_error&) {
      continue;
    }

    QMat a(m, QVec(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Rational v = 1;
        for (int c = 0; c < d; ++c)
          for (int k = 0; k < mons[j][c]; ++k) v *= pts[i][c];
        a[i][j] = v;
      }
    auto coeffs = solve_square(a, QVec(vals.begin(), vals.begin() + m));
    if (!coeffs) continue;  // degenerate sample configuration

    MultiPoly<Rational> poly(d);
    for (int j = 0; j < m; ++j) poly.add_term(mons[j], (*coeffs)[j]);

    for (int i = m; i < m + holdout; ++i) {
      if (poly.evaluate(pts[i]) != vals[i])
        throw std::logic_error(
            "held-out verification failed: interpolated piece disagrees with "
            "direct evaluation");
    }
    return poly;
  }
  throw std::runtime_error("piece interpolation retry budget exhausted");
}

}  // namespace

Rational eval_box(const WeightList& phi, const QVec& x) {
  if (!phi.spans())
    throw std::invalid_argument("eval_box requires a spanning list");
  if (phi.size() > 62)
    throw std::invalid_argument("weight list too long for mask recursion");
  // reject wall points up front: the recurrence can pass through them
  // silently when every offending branch carries coefficient zero
  for (const auto& f : wall_families(phi))
    if (frac_part(dot_iq(f.normal, x) - f.phase) == 0)
      throw NonGenericPoint("point lies on an arrangement wall");
  BoxEvaluator ev(phi);
  QVec y = add(x, phi.rho());
  uint64_t full = (uint64_t(1) << phi.size()) - 1;
  return ev.eval(full, y);
}

PolynomialGerm<Rational> local_piece(const WeightList& phi,
                                     const AlcoveGerm& germ, uint64_t seed) {
  auto families = wall_families(phi);
  MultiPoly<Rational> poly = interpolate_piece(phi, families, germ, seed);
  return {germ, std::move(poly), phi.piece_degree_bound()};
}

PieceTable::PieceTable(WeightList phi)
    : phi_(std::move(phi)),
      families_(wall_families(phi_)),
      radius_(phi_.zonotope_radius()) {}

MultiPoly<Rational> PieceTable::piece_at(const QVec& base, const QVec& eps,
                                         uint64_t seed) {
  // outside the support box the piece is identically zero
  for (int i = 0; i < phi_.dim(); ++i) {
    if (abs(base[i]) > radius_[i]) return MultiPoly<Rational>(phi_.dim());
  }
  AlcoveGerm germ = alcove_of(base, eps, families_);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = pieces_.find(germ.signature);
    if (it != pieces_.end()) return it->second;
  }
  MultiPoly<Rational> poly = interpolate_piece(phi_, families_, germ, seed);
  std::lock_guard<std::mutex> lk(mu_);
  auto [it, inserted] = pieces_.emplace(germ.signature, std::move(poly));
  return it->second;
}

TwistedBoxExpansion twisted_expansion(const TorusPoint& s,
                                      const WeightList& phi) {
  std::vector<int> fixed = s.fixed_indices(phi);
  WeightList sub = fixed.empty() ? phi : phi.sublist(fixed);
  if (fixed.empty() || !sub.spans())
    throw std::invalid_argument("torus point is not a vertex of the list");

  std::vector<bool> in_sub(phi.size(), false);
  for (int i : fixed) in_sub[i] = true;

  std::map<QVec, Cyclotomic> terms;
  terms.emplace(QVec(phi.dim(), Rational(0)), Cyclotomic(Rational(1)));
  long order = 1;
  for (int i = 0; i < phi.size(); ++i) {
    if (in_sub[i]) continue;
    IVec neg = phi[i];
    for (long& x : neg) x = -x;
    Cyclotomic c = s.character(neg);  // s^{-alpha}, != 1 off Phi_s
    order = lcm_long(order, c.order());
    Cyclotomic inv = (Cyclotomic(Rational(1)) - c).inverse();
    QVec half = scale(Rational(1, 2), to_qvec(phi[i]));
    std::map<QVec, Cyclotomic> next;
    for (const auto& [shift, coef] : terms) {
      QVec plus = add(shift, half);
      QVec minus = boxdec::sub(shift, half);
      Cyclotomic a = coef * inv;
      Cyclotomic b = -(coef * (c * inv));
      auto acc = [&](QVec key, Cyclotomic val) {
        auto [it, fresh] = next.emplace(std::move(key), val);
        if (!fresh) it->second += val;
      };
      acc(std::move(plus), std::move(a));
      acc(std::move(minus), std::move(b));
    }
    terms = std::move(next);
  }

  TwistedBoxExpansion out{std::move(sub), {}, order};
  for (auto& [shift, coef] : terms) {
    if (coef.is_zero()) continue;
    out.terms.push_back({coef, shift});
  }
  return out;
}

MultiplicityFunction::MultiplicityFunction(int dim, QVec shift)
    : dim_(dim), shift_(std::move(shift)) {
  if (shift_.empty()) shift_.assign(dim_, Rational(0));
  if (static_cast<int>(shift_.size()) != dim_)
    throw std::invalid_argument("multiplicity shift dimension mismatch");
}

void MultiplicityFunction::set(const IVec& offset, const Rational& value) {
  if (value == 0)
    values_.erase(offset);
  else
    values_[offset] = value;
}

void MultiplicityFunction::add(const IVec& offset, const Rational& value) {
  Rational v = at_offset(offset) + value;
  set(offset, v);
}

Rational MultiplicityFunction::at_offset(const IVec& offset) const {
  auto it = values_.find(offset);
  return it == values_.end() ? Rational(0) : it->second;
}

Rational MultiplicityFunction::at_point(const QVec& point) const {
  IVec offset(dim_);
  for (int i = 0; i < dim_; ++i) {
    Rational t = point[i] - shift_[i];
    if (!is_integer(t)) return 0;
    offset[i] = static_cast<long>(t.get_num().get_si());
  }
  return at_offset(offset);
}

QVec MultiplicityFunction::point_of(const IVec& offset) const {
  QVec p(dim_);
  for (int i = 0; i < dim_; ++i) p[i] = shift_[i] + Rational(offset[i]);
  return p;
}

std::pair<IVec, IVec> MultiplicityFunction::support_box() const {
  if (values_.empty())
    throw std::logic_error("support_box of empty multiplicity function");
  IVec lo = values_.begin()->first, hi = lo;
  for (const auto& [off, v] : values_)
    for (int i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], off[i]);
      hi[i] = std::max(hi[i], off[i]);
    }
  return {lo, hi};
}

MultiPoly<Cyclotomic> forward_piece(const MultiplicityFunction& m,
                                    const TorusPoint& s, const WeightList& phi,
                                    const QVec& base, const QVec& eps,
                                    PieceTable& table, uint64_t seed) {
  TwistedBoxExpansion exp = twisted_expansion(s, phi);
  if (!(table.phi() == exp.sublist))
    throw std::invalid_argument("piece table does not match Phi_s");
  MultiPoly<Cyclotomic> acc(phi.dim());
  for (const auto& [offset, value] : m.values()) {
    QVec nu = m.point_of(offset);
    Cyclotomic weight = s.character(nu) * Cyclotomic(value);
    for (const TwistedTerm& term : exp.terms) {
      QVec c = add(nu, term.shift);
      MultiPoly<Rational> piece = table.piece_at(sub(base, c), eps, seed);
      if (piece.is_zero()) continue;
      acc = acc + piece.translated(c).convert<Cyclotomic>().scaled(
                      weight * term.coeff);
    }
  }
  return acc;
}

MultiPoly<Rational> forward_piece_identity(const MultiplicityFunction& m,
                                           const WeightList& phi,
                                           const QVec& base, const QVec& eps,
                                           PieceTable& table, uint64_t seed) {
  MultiPoly<Rational> acc(phi.dim());
  for (const auto& [offset, value] : m.values()) {
    QVec nu = m.point_of(offset);
    MultiPoly<Rational> piece = table.piece_at(sub(base, nu), eps, seed);
    if (piece.is_zero()) continue;
    acc = acc + piece.translated(nu).scaled(value);
  }
  return acc;
}

}  // namespace boxdec
