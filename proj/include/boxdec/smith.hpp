// smith.hpp - Smith normal form of integer matrices.

#ifndef BOXDEC_SMITH_HPP
#define BOXDEC_SMITH_HPP

#include "boxdec/rational.hpp"

namespace boxdec {

using ZMat = std::vector<std::vector<Integer>>;

struct SmithResult {
  ZMat u;  // unimodular, rows x rows
  ZMat d;  // diagonal with divisibility chain, nonnegative entries
  ZMat v;  // unimodular, cols x cols
};

// U * A * V = D with U, V unimodular and D = diag(d_1, ..., d_r, 0, ...)
// where d_i | d_{i+1} and d_i >= 0.
SmithResult smith_normal_form(const ZMat& a);

ZMat zmat_from_rows(const IMat& rows);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
ZMat zmat_identity(int n);
Integer zmat_det(ZMat m);

}  // namespace boxdec

#endif
