#include "boxdec/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace boxdec {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  if (r.get_den() <= 0) throw std::invalid_argument("bad rational literal: " + s);
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor_rational(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Rational frac_part(const Rational& r) { return r - Rational(floor_rational(r)); }

Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot_iq(const IVec& a, const QVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

long dot_ii(const IVec& a, const IVec& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec to_qvec(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = v[i];
  return q;
}

QVec add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec scale(const Rational& c, const QVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

namespace {

// Row echelon reduction in place; returns the pivot columns.
std::vector<int> echelon(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(QMat m) { return static_cast<int>(echelon(m).size()); }

std::optional<QVec> solve_square(QMat a, QVec b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  std::vector<int> piv = echelon(a);
  if (static_cast<int>(piv.size()) != n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (piv[i] != i) return std::nullopt;  // pivot in the rhs column
  QVec x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

QMat nullspace(QMat m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> piv = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  QMat basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    QVec v(cols, Rational(0));
    v[fc] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

IVec primitive_normalize(IVec v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::abs(x));
  if (g == 0) return v;
  for (long& x : v) x /= g;
  for (long x : v) {
    if (x > 0) return v;
    if (x < 0) {
      for (long& y : v) y = -y;
      return v;
    }
  }
  return v;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

}  // namespace boxdec
