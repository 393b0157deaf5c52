#include "boxdec/weights.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace boxdec {

WeightList::WeightList(int dim, IMat vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ < 1) throw std::invalid_argument("weight list dimension < 1");
  QMat rows;
  for (const IVec& v : vectors_) {
    if (static_cast<int>(v.size()) != dim_)
      throw std::invalid_argument("weight vector has wrong dimension");
    bool all_zero = true;
    for (long x : v) all_zero = all_zero && x == 0;
    if (all_zero) throw std::invalid_argument("weight list contains zero vector");
    rows.push_back(to_qvec(v));
  }
  spans_ = rank(rows) == dim_;
}

QVec WeightList::rho() const {
  QVec r(dim_, Rational(0));
  for (const IVec& v : vectors_)
    for (int i = 0; i < dim_; ++i) r[i] += make_rational(v[i], 2);
  return r;
}

Integer int_det(const IMat& rows) {
  const int n = static_cast<int>(rows.size());
  QMat m;
  for (const IVec& r : rows) m.push_back(to_qvec(r));
  // fraction-full Gaussian elimination; result is integral for integer input
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rational inv = 1 / m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] * inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  if (!is_integer(det)) throw std::logic_error("integer determinant not integral");
  return det.get_num();
}

bool WeightList::unimodular() const {
  const int n = size();
  std::vector<int> idx(dim_);
  // enumerate all d-subsets
  std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
    if (pos == dim_) {
      IMat rows;
      for (int i : idx) rows.push_back(vectors_[i]);
      Integer d = int_det(rows);
      return d == 0 || d == 1 || d == -1;
    }
    for (int i = start; i < n; ++i) {
      idx[pos] = i;
      if (!rec(pos + 1, i + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

WeightList WeightList::sublist(const std::vector<int>& indices) const {
  IMat v;
  for (int i : indices) v.push_back(vectors_[i]);
  return WeightList(dim_, std::move(v));
}

QVec WeightList::zonotope_radius() const {
  QVec r(dim_, Rational(0));
  for (const IVec& v : vectors_)
    for (int i = 0; i < dim_; ++i) r[i] += make_rational(std::abs(v[i]), 2);
  return r;
}

}  // namespace boxdec
