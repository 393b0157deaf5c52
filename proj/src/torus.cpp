#include "boxdec/torus.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "boxdec/smith.hpp"

namespace boxdec {

TorusPoint::TorusPoint(QVec coords) : coords_(std::move(coords)) {
  Integer ord = 1;
  for (Rational& c : coords_) {
    c = frac_part(c);
    Integer den = c.get_den();
    ord = ord / gcd(ord, den) * den;
  }
  order_ = static_cast<long>(ord.get_si());
}

Cyclotomic TorusPoint::character(const QVec& lambda) const {
  Rational e = frac_part(dot(coords_, lambda));
  long q = static_cast<long>(e.get_den().get_si());
  long k = static_cast<long>(e.get_num().get_si());
  return Cyclotomic::root_of_unity(q, k);
}

Cyclotomic TorusPoint::character(const IVec& lambda) const {
  return character(to_qvec(lambda));
}

TorusPoint TorusPoint::inverted() const {
  QVec neg(coords_.size());
  for (size_t i = 0; i < coords_.size(); ++i) neg[i] = -coords_[i];
  return TorusPoint(std::move(neg));
}

std::vector<int> TorusPoint::fixed_indices(const WeightList& phi) const {
  std::vector<int> out;
  for (int i = 0; i < phi.size(); ++i)
    if (is_integer(dot_iq(phi[i], coords_))) out.push_back(i);
  return out;
}

std::vector<TorusPoint> vertex_set(const WeightList& phi) {
  if (!phi.spans())
    throw std::invalid_argument("vertex_set requires a spanning list");
  const int d = phi.dim();
  const int n = phi.size();

  std::set<QVec> candidates;
  std::vector<int> idx(d);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == d) {
      IMat rows;
      for (int i : idx) rows.push_back(phi[i]);
      if (int_det(rows) == 0) return;
      // solutions of <s, alpha> in Z for alpha in the basis subset:
      // with U A V = D, s = V y, y_i = k_i / D_ii
      SmithResult snf = smith_normal_form(zmat_from_rows(rows));
      std::vector<long> dd(d);
      for (int i = 0; i < d; ++i) dd[i] = static_cast<long>(snf.d[i][i].get_si());
      std::vector<long> k(d, 0);
      std::function<void(int)> enumerate = [&](int i) {
        if (i == d) {
          QVec s(d, Rational(0));
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
              s[a] += Rational(snf.v[a][b]) * make_rational(k[b], dd[b]);
          for (Rational& c : s) c = frac_part(c);
          candidates.insert(std::move(s));
          return;
        }
        for (k[i] = 0; k[i] < dd[i]; ++k[i]) enumerate(i + 1);
        k[i] = 0;
      };
      enumerate(0);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);

  std::vector<TorusPoint> out;
  for (const QVec& c : candidates) {
    TorusPoint s(c);
    std::vector<int> fixed = s.fixed_indices(phi);
    if (fixed.size() < static_cast<size_t>(d)) continue;
    if (phi.sublist(fixed).spans()) out.push_back(std::move(s));
  }
  return out;  // set iteration is already lexicographic
}

}  // namespace boxdec
