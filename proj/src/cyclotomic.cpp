#include "boxdec/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace boxdec {

namespace {

// ---- dense univariate polynomial helpers over Q, low-to-high coeffs ----

void trim(QVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QVec poly_mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// a mod m, m monic.
QVec poly_mod(QVec a, const QVec& m) {
  trim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    Rational lead = a.back();
    size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (size_t j = 0; j < m.size(); ++j) a[shift + j] -= lead * m[j];
    a.pop_back();
    trim(a);
    if (a.size() <= dm) break;
  }
  return a;
}

// Exact division a / b, b monic with integer coefficients; remainder must
// vanish.
std::vector<Integer> poly_divexact_z(std::vector<Integer> a,
                                     const std::vector<Integer>& b) {
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("bad cyclotomic division");
  std::vector<Integer> q(a.size() - db, Integer(0));
  for (size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    q[i - db] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) a[i - db + j] -= c * b[j];
  }
  for (const Integer& c : a)
    if (c != 0) throw std::logic_error("cyclotomic division has remainder");
  return q;
}

// Quotient and remainder of a by b over Q, b nonzero.
std::pair<QVec, QVec> poly_divmod(QVec a, const QVec& b) {
  trim(a);
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  QVec q(a.size() - db, Rational(0));
  const Rational inv_lead = 1 / b.back();
  for (size_t i = a.size(); i-- > db;) {
    if (i >= a.size()) continue;
    Rational c = a[i] * inv_lead;
    if (c == 0) continue;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    trim(a);
  }
  return {q, a};
}

// Extended Euclid: returns (g, u) with u*a + v*m = g, g the monic gcd.
std::pair<QVec, QVec> poly_half_xgcd(QVec a, QVec m) {
  trim(a);
  trim(m);
  QVec u0{Rational(1)}, u1{};
  QVec r0 = a, r1 = m;
  while (!r1.empty()) {
    auto [q, rem] = poly_divmod(r0, r1);
    QVec qu1 = poly_mul(q, u1);
    QVec nu(std::max(u0.size(), qu1.size()), Rational(0));
    for (size_t i = 0; i < u0.size(); ++i) nu[i] += u0[i];
    for (size_t i = 0; i < qu1.size(); ++i) nu[i] -= qu1[i];
    trim(nu);
    u0 = u1;
    u1 = nu;
    r0 = r1;
    r1 = rem;
  }
  if (r0.empty()) throw std::domain_error("gcd of zero polynomials");
  Rational inv = 1 / r0.back();
  for (Rational& c : r0) c *= inv;
  for (Rational& c : u0) c *= inv;
  return {r0, u0};
}

QVec monic_q(const std::vector<Integer>& p) {
  QVec q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[i] = Rational(p[i]);
  return q;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<Integer>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by recursive exact
  // division; compute iteratively over divisors in increasing order.
  std::function<std::vector<Integer>(long)> get = [&](long k) -> std::vector<Integer> {
    auto jt = cache.find(k);
    if (jt != cache.end()) return jt->second;
    std::vector<Integer> num(k + 1, Integer(0));
    num[0] = -1;
    num[k] = 1;
    for (long d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      num = poly_divexact_z(num, get(d));
    }
    cache[k] = num;
    return num;
  };
  get(n);
  return cache.at(n);
}

long euler_phi(long n) {
  return static_cast<long>(cyclotomic_polynomial(n).size()) - 1;
}

Cyclotomic::Cyclotomic(const Rational& r) : order_(1), c_{r} {}

Cyclotomic Cyclotomic::root_of_unity(long order, long exponent) {
  if (order < 1) throw std::invalid_argument("root order must be positive");
  long e = exponent % order;
  if (e < 0) e += order;
  const QVec phi = monic_q(cyclotomic_polynomial(order));
  QVec x(e + 1, Rational(0));
  x[e] = 1;
  QVec red = poly_mod(std::move(x), phi);
  red.resize(phi.size() - 1, Rational(0));
  return from_coeffs(order, std::move(red));
}

Cyclotomic Cyclotomic::from_coeffs(long order, QVec coeffs) {
  if (static_cast<long>(coeffs.size()) != euler_phi(order))
    throw std::invalid_argument("cyclotomic coefficient length mismatch");
  Cyclotomic z;
  z.order_ = order;
  z.c_ = std::move(coeffs);
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const Rational& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_part() const {
  if (!is_rational())
    throw std::domain_error("cyclotomic value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::promoted(long target_order) const {
  if (target_order == order_) return *this;
  if (target_order % order_ != 0)
    throw std::invalid_argument("cyclotomic order does not divide target");
  const long step = target_order / order_;
  const QVec phi = monic_q(cyclotomic_polynomial(target_order));
  // substitute zeta_order -> zeta_target^step
  QVec acc(1, Rational(0));
  QVec pw{Rational(1)};  // zeta_target^(step*i), reduced
  QVec xstep(step + 1, Rational(0));
  xstep[step] = 1;
  xstep = poly_mod(std::move(xstep), phi);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) {
      if (acc.size() < pw.size()) acc.resize(pw.size(), Rational(0));
      for (size_t j = 0; j < pw.size(); ++j) acc[j] += c_[i] * pw[j];
    }
    if (i + 1 < c_.size()) pw = poly_mod(poly_mul(pw, xstep), phi);
  }
  acc = poly_mod(std::move(acc), phi);
  acc.resize(phi.size() - 1, Rational(0));
  return from_coeffs(target_order, std::move(acc));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rational& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  long n = lcm_long(a.order_, b.order_);
  Cyclotomic pa = a.promoted(n), pb = b.promoted(n);
  for (size_t i = 0; i < pa.c_.size(); ++i) pa.c_[i] += pb.c_[i];
  return pa;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  long n = lcm_long(a.order_, b.order_);
  Cyclotomic pa = a.promoted(n), pb = b.promoted(n);
  const QVec phi = monic_q(cyclotomic_polynomial(n));
  QVec prod = poly_mod(poly_mul(pa.c_, pb.c_), phi);
  prod.resize(phi.size() - 1, Rational(0));
  return Cyclotomic::from_coeffs(n, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
  const QVec phi = monic_q(cyclotomic_polynomial(order_));
  auto [g, u] = poly_half_xgcd(c_, phi);
  if (g.size() != 1)
    throw std::logic_error("cyclotomic polynomial not coprime to element");
  // g == 1 after normalization, so u is the inverse modulo phi.
  QVec inv = poly_mod(std::move(u), phi);
  inv.resize(phi.size() - 1, Rational(0));
  return from_coeffs(order_, std::move(inv));
}

bool Cyclotomic::operator==(const Cyclotomic& b) const {
  return (*this - b).is_zero();
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  os << "Cyc(" << order_ << ";";
  for (size_t i = 0; i < c_.size(); ++i)
    os << (i ? "," : " ") << format_rational(c_[i]);
  os << ")";
  return os.str();
}

Cyclotomic cyclotomic_embed(long root_order, long exponent, long target_order) {
  if (target_order % root_order != 0)
    throw std::invalid_argument("root order does not divide target order");
  return Cyclotomic::root_of_unity(root_order, exponent).promoted(target_order);
}

}  // namespace boxdec
