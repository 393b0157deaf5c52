// multipoly.hpp - sparse multivariate polynomials with exact coefficients.
//
// Exponent vectors are the map keys; zero coefficients are never stored.
// Degrees stay small (bounded by |Phi| - dim) but coefficients can be large
// rationals or cyclotomic numbers.

#ifndef BOXDEC_MULTIPOLY_HPP
#define BOXDEC_MULTIPOLY_HPP

#include <map>
#include <numeric>
#include <stdexcept>

#include "boxdec/scalar.hpp"

namespace boxdec {

template <class T>
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, T>;

  explicit MultiPoly(int dim) : dim_(dim) {}

  static MultiPoly constant(int dim, const T& c) {
    MultiPoly p(dim);
    p.add_term(Exponents(dim, 0), c);
    return p;
  }

  static MultiPoly monomial(int dim, Exponents e, const T& c) {
    MultiPoly p(dim);
    p.add_term(std::move(e), c);
    return p;
  }

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
      d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  void add_term(Exponents e, const T& c) {
    if (scalar_is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly operator+(const MultiPoly& b) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  MultiPoly operator-(const MultiPoly& b) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  MultiPoly scaled(const T& f) const {
    MultiPoly r(dim_);
    if (scalar_is_zero(f)) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, f * c);
    return r;
  }

  MultiPoly operator*(const MultiPoly& b) const {
    MultiPoly r(dim_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(dim_);
        for (int i = 0; i < dim_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }

  // Partial derivative in coordinate i.
  MultiPoly partial(int i) const {
    MultiPoly r(dim_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents e2 = e;
      e2[i] -= 1;
      r.add_term(std::move(e2), c * scalar_from_rational<T>(Rational(e[i])));
    }
    return r;
  }

  // Directional derivative along a rational vector.
  MultiPoly directional(const QVec& dir) const {
    MultiPoly r(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (dir[i] == 0) continue;
      r = r + partial(i).scaled(scalar_from_rational<T>(dir[i]));
    }
    return r;
  }

  T evaluate(const QVec& point) const {
    T total = scalar_zero<T>();
    for (const auto& [e, c] : terms_) {
      Rational m = 1;
      for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < e[i]; ++k) m *= point[i];
      total += c * scalar_from_rational<T>(m);
    }
    return total;
  }

  // q with q(v) = p(v + shift), by binomial expansion per variable.
  MultiPoly composed_shift(const QVec& shift) const {
    MultiPoly r(dim_);
    for (const auto& [e, c] : terms_) {
      // expand prod_i (v_i + shift_i)^{e_i}
      MultiPoly term = constant(dim_, c);
      for (int i = 0; i < dim_; ++i) {
        if (e[i] == 0) continue;
        MultiPoly lin(dim_);
        Exponents ei(dim_, 0);
        ei[i] = 1;
        lin.add_term(ei, scalar_one<T>());
        lin.add_term(Exponents(dim_, 0), scalar_from_rational<T>(shift[i]));
        for (int k = 0; k < e[i]; ++k) term = term * lin;
      }
      r = r + term;
    }
    return r;
  }

  // q with q(v) = p(v - c): the polynomial translated by c.
  MultiPoly translated(const QVec& c) const {
    QVec neg(c.size());
    for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
    return composed_shift(neg);
  }

  template <class U>
  MultiPoly<U> convert() const {
    MultiPoly<U> r(dim_);
    for (const auto& [e, c] : terms_) r.add_term(e, U(c));
    return r;
  }

  bool operator==(const MultiPoly& b) const { return (*this - b).is_zero(); }
  bool operator!=(const MultiPoly& b) const { return !(*this == b); }

 private:
  int dim_;
  TermMap terms_;
};

}  // namespace boxdec

#endif
