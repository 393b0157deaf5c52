#include "boxdec/smith.hpp"

#include <stdexcept>

namespace boxdec {

ZMat zmat_from_rows(const IMat& rows) {
  ZMat m(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (long x : rows[i]) m[i].push_back(Integer(x));
  return m;
}

ZMat zmat_identity(int n) {
  ZMat m(n, std::vector<Integer>(n, Integer(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  const size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  ZMat r(n, std::vector<Integer>(p, Integer(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

Integer zmat_det(ZMat m) {
  // Bareiss fraction-free elimination
  const int n = static_cast<int>(m.size());
  Integer prev = 1;
  Integer sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i)
      for (int j = c + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
      }
    prev = m[c][c];
  }
  return n == 0 ? sign : sign * m[n - 1][n - 1];
}

SmithResult smith_normal_form(const ZMat& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  SmithResult r{zmat_identity(rows), a, zmat_identity(cols)};
  ZMat& d = r.d;

  auto swap_rows = [&](int i, int j) {
    std::swap(d[i], d[j]);
    std::swap(r.u[i], r.u[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (int k = 0; k < rows; ++k) std::swap(d[k][i], d[k][j]);
    for (int k = 0; k < cols; ++k) std::swap(r.v[k][i], r.v[k][j]);
  };
  auto add_row = [&](int dst, int src, const Integer& f) {
    for (int k = 0; k < cols; ++k) d[dst][k] += f * d[src][k];
    for (int k = 0; k < rows; ++k) r.u[dst][k] += f * r.u[src][k];
  };
  auto add_col = [&](int dst, int src, const Integer& f) {
    for (int k = 0; k < rows; ++k) d[k][dst] += f * d[k][src];
    for (int k = 0; k < cols; ++k) r.v[k][dst] += f * r.v[k][src];
  };
  auto negate_row = [&](int i) {
    for (int k = 0; k < cols; ++k) d[i][k] = -d[i][k];
    for (int k = 0; k < rows; ++k) r.u[i][k] = -r.u[i][k];
  };

  const int t = std::min(rows, cols);
  for (int k = 0; k < t; ++k) {
    // move a minimal-magnitude nonzero entry of the trailing block to (k,k)
    for (;;) {
      int pi = -1, pj = -1;
      Integer best = 0;
      for (int i = k; i < rows; ++i)
        for (int j = k; j < cols; ++j) {
          if (d[i][j] == 0) continue;
          Integer m = abs(d[i][j]);
          if (pi < 0 || m < best) { best = m; pi = i; pj = j; }
        }
      if (pi < 0) break;  // trailing block all zero
      if (pi != k) swap_rows(pi, k);
      if (pj != k) swap_cols(pj, k);
      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (d[i][k] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d[i][k].get_mpz_t(), d[k][k].get_mpz_t());
        add_row(i, k, -q);
        if (d[i][k] != 0) clean = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        if (d[k][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d[k][j].get_mpz_t(), d[k][k].get_mpz_t());
        add_col(j, k, -q);
        if (d[k][j] != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide every entry of the remaining block
      bool divides_all = true;
      for (int i = k + 1; i < rows && divides_all; ++i)
        for (int j = k + 1; j < cols && divides_all; ++j)
          if (d[i][j] % d[k][k] != 0) {
            add_row(k, i, Integer(1));  // pull the bad row up and redo
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (d[k][k] < 0) negate_row(k);
  }
  return r;
}

}  // namespace boxdec
