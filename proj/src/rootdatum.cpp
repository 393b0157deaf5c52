#include "boxdec/rootdatum.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace boxdec {

namespace {

IMat cartan_matrix(char family, int rank) {
  // C[i][j] = <alpha_j, alpha_i-vee>; simple root j is column j.
  if (family == 'A') {
    IMat c(rank, IVec(rank, 0));
    for (int i = 0; i < rank; ++i) {
      c[i][i] = 2;
      if (i + 1 < rank) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return c;
  }
  if (family == 'B' && rank == 2) return {{2, -1}, {-2, 2}};  // alpha_1 long
  if (family == 'G' && rank == 2) return {{2, -1}, {-3, 2}};  // alpha_1 long
  throw std::invalid_argument("unsupported root system type");
}

QVec symmetrizer(char family, int rank) {
  if (family == 'A') return QVec(rank, Rational(1));
  if (family == 'B' && rank == 2) return {Rational(2), Rational(1)};
  if (family == 'G' && rank == 2) return {Rational(3), Rational(1)};
  throw std::invalid_argument("unsupported root system type");
}

}  // namespace

RootDatum RootDatum::simple(char family, int rank) {
  RootDatum d;
  d.rank_ = rank;
  IMat c = cartan_matrix(family, rank);
  for (int j = 0; j < rank; ++j) {
    IVec col(rank);
    for (int i = 0; i < rank; ++i) col[i] = c[i][j];
    d.simple_roots_.push_back(std::move(col));
    d.simple_coord_.push_back(j);
  }
  d.symmetrizer_ = symmetrizer(family, rank);
  d.label_ = std::string(1, family) + std::to_string(rank);
  d.finish();
  return d;
}

RootDatum RootDatum::torus(int rank) {
  RootDatum d;
  d.rank_ = rank;
  d.label_ = "T" + std::to_string(rank);
  return d;
}

RootDatum RootDatum::product(const RootDatum& a, const RootDatum& b) {
  RootDatum d;
  d.rank_ = a.rank_ + b.rank_;
  auto pad = [&](const IVec& v, bool first) {
    IVec out(d.rank_, 0);
    for (size_t i = 0; i < v.size(); ++i)
      out[first ? i : a.rank_ + i] = v[i];
    return out;
  };
  for (size_t i = 0; i < a.simple_roots_.size(); ++i) {
    d.simple_roots_.push_back(pad(a.simple_roots_[i], true));
    d.simple_coord_.push_back(a.simple_coord_[i]);
    d.symmetrizer_.push_back(a.symmetrizer_[i]);
  }
  for (size_t i = 0; i < b.simple_roots_.size(); ++i) {
    d.simple_roots_.push_back(pad(b.simple_roots_[i], false));
    d.simple_coord_.push_back(a.rank_ + b.simple_coord_[i]);
    d.symmetrizer_.push_back(b.symmetrizer_[i]);
  }
  d.label_ = a.label_ + "x" + b.label_;
  d.finish();
  return d;
}

RootDatum RootDatum::parse(const std::string& label) {
  std::vector<RootDatum> parts;
  size_t pos = 0;
  while (pos < label.size()) {
    size_t next = label.find('x', pos);
    std::string tok = label.substr(pos, next == std::string::npos
                                            ? std::string::npos
                                            : next - pos);
    if (tok.size() < 2) throw std::invalid_argument("bad root datum label: " + label);
    int r = std::stoi(tok.substr(1));
    char f = tok[0];
    parts.push_back(f == 'T' ? torus(r) : simple(f, r));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.empty()) throw std::invalid_argument("empty root datum label");
  RootDatum d = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) d = product(d, parts[i]);
  return d;
}

void RootDatum::finish() {
  if (simple_roots_.empty()) return;
  // all roots = Weyl orbit of the simple roots
  std::set<IVec> roots(simple_roots_.begin(), simple_roots_.end());
  std::vector<IVec> frontier(simple_roots_.begin(), simple_roots_.end());
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const IVec& r : frontier)
      for (int i = 0; i < num_simple(); ++i) {
        IVec s = reflect(i, r);
        if (roots.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  for (const IVec& r : roots) {
    QVec u = to_root_basis(to_qvec(r));
    bool nonneg = true;
    for (const Rational& x : u) nonneg = nonneg && x >= 0;
    if (nonneg) positive_roots_.push_back(r);
  }
  std::sort(positive_roots_.begin(), positive_roots_.end());
}

IVec RootDatum::rho() const {
  IVec r(rank_, 0);
  for (int c : simple_coord_) r[c] = 1;
  return r;
}

QVec RootDatum::to_root_basis(const QVec& w) const {
  const int n = num_simple();
  // solve sum_j u_j alpha_j = w on the semisimple coordinates
  QMat a(n, QVec(n));
  QVec b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      a[i][j] = Rational(simple_roots_[j][simple_coord_[i]]);
    b[i] = w[simple_coord_[i]];
  }
  auto u = solve_square(a, b);
  if (!u) throw std::logic_error("Cartan matrix singular");
  return *u;
}

Rational RootDatum::inner(const QVec& a, const QVec& b) const {
  Rational total = 0;
  if (num_simple() > 0) {
    QVec u = to_root_basis(b);
    for (int j = 0; j < num_simple(); ++j)
      total += u[j] * symmetrizer_[j] * a[simple_coord_[j]];
  }
  // torus coordinates: standard euclidean form
  std::vector<bool> semis(rank_, false);
  for (int c : simple_coord_) semis[c] = true;
  for (int i = 0; i < rank_; ++i)
    if (!semis[i]) total += a[i] * b[i];
  return total;
}

bool RootDatum::is_dominant(const IVec& w) const {
  for (int j = 0; j < num_simple(); ++j)
    if (w[simple_coord_[j]] < 0) return false;
  return true;
}

bool RootDatum::is_strictly_dominant(const IVec& w) const {
  for (int j = 0; j < num_simple(); ++j)
    if (w[simple_coord_[j]] <= 0) return false;
  return true;
}

IVec RootDatum::reflect(int i, const IVec& w) const {
  long c = w[simple_coord_[i]];
  IVec out = w;
  if (c == 0) return out;
  for (int k = 0; k < rank_; ++k) out[k] -= c * simple_roots_[i][k];
  return out;
}

IVec RootDatum::dominant_conjugate(IVec w, int* sign) const {
  int s = 1;
  for (;;) {
    int bad = -1;
    for (int j = 0; j < num_simple(); ++j)
      if (w[simple_coord_[j]] < 0) { bad = j; break; }
    if (bad < 0) break;
    w = reflect(bad, w);
    s = -s;
  }
  if (sign) *sign = s;
  return w;
}

IVec RootDatum::antidominant_conjugate(IVec w) const {
  for (;;) {
    int bad = -1;
    for (int j = 0; j < num_simple(); ++j)
      if (w[simple_coord_[j]] > 0) { bad = j; break; }
    if (bad < 0) break;
    w = reflect(bad, w);
  }
  return w;
}

std::vector<RootDatum::WeylElement> RootDatum::weyl_group(size_t cap) const {
  auto ident = [&]() {
    IMat m(rank_, IVec(rank_, 0));
    for (int i = 0; i < rank_; ++i) m[i][i] = 1;
    return m;
  };
  // simple reflection matrices
  std::vector<IMat> gens;
  for (int j = 0; j < num_simple(); ++j) {
    IMat m = ident();
    for (int k = 0; k < rank_; ++k) m[k][simple_coord_[j]] -= simple_roots_[j][k];
    gens.push_back(std::move(m));
  }
  std::map<IMat, int> elems;
  elems[ident()] = 1;
  std::vector<IMat> frontier{ident()};
  while (!frontier.empty()) {
    std::vector<IMat> next;
    for (const IMat& w : frontier)
      for (const IMat& g : gens) {
        IMat p(rank_, IVec(rank_, 0));
        for (int i = 0; i < rank_; ++i)
          for (int k = 0; k < rank_; ++k) {
            if (g[i][k] == 0) continue;
            for (int j = 0; j < rank_; ++j) p[i][j] += g[i][k] * w[k][j];
          }
        int sign = -elems.at(w);
        if (elems.emplace(p, sign).second) {
          next.push_back(std::move(p));
          if (elems.size() > cap)
            throw std::runtime_error("Weyl group order exceeds cap");
        }
      }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  for (const auto& [m, s] : elems) out.push_back({m, s});
  return out;
}

IVec RootDatum::apply(const IMat& w, const IVec& v) const {
  IVec out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += w[i][j] * v[j];
  return out;
}

MultiplicityFunction weight_multiplicities(const RootDatum& g,
                                           const IVec& highest) {
  if (!g.is_dominant(highest))
    throw std::invalid_argument("highest weight must be dominant");
  const int d = g.rank();
  MultiplicityFunction out(d);
  if (g.num_simple() == 0) {
    out.set(highest, 1);
    return out;
  }

  IVec lowest = g.antidominant_conjugate(highest);
  IVec diff(d);
  for (int i = 0; i < d; ++i) diff[i] = highest[i] - lowest[i];
  QVec cq = g.to_root_basis(to_qvec(diff));
  const int ns = g.num_simple();
  std::vector<long> box(ns);
  for (int j = 0; j < ns; ++j) {
    if (!is_integer(cq[j]) || cq[j] < 0)
      throw std::logic_error("weight box is not a nonnegative integer vector");
    box[j] = static_cast<long>(cq[j].get_num().get_si());
  }

  const IVec rho = g.rho();
  QVec top_sh = to_qvec(highest);
  for (int i = 0; i < d; ++i) top_sh[i] += rho[i];
  const Rational top_norm = g.inner(top_sh, top_sh);

  // enumerate mu = highest - sum k_j alpha_j by increasing height
  std::vector<std::pair<long, IVec>> by_height;  // (sum k, mu)
  std::vector<long> k(ns, 0);
  std::function<void(int, long)> enumerate = [&](int pos, long total) {
    if (pos == ns) {
      IVec mu = highest;
      for (int j = 0; j < ns; ++j)
        for (int i = 0; i < d; ++i) mu[i] -= k[j] * g.simple_roots()[j][i];
      by_height.push_back({total, std::move(mu)});
      return;
    }
    for (k[pos] = 0; k[pos] <= box[pos]; ++k[pos])
      enumerate(pos + 1, total + k[pos]);
    k[pos] = 0;
  };
  enumerate(0, 0);
  std::stable_sort(by_height.begin(), by_height.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::map<IVec, Rational> mult;  // all weights seen so far (higher levels)
  auto lookup = [&](const IVec& mu) -> Rational {
    auto it = mult.find(mu);
    return it == mult.end() ? Rational(0) : it->second;
  };

  for (const auto& [height, mu] : by_height) {
    if (height == 0) {
      mult[mu] = 1;
      continue;
    }
    IVec dom = g.dominant_conjugate(mu);
    auto known = mult.find(dom);
    if (known != mult.end()) {
      mult[mu] = known->second;
      continue;
    }
    // weights of the module all lie below the highest weight in root
    // order; a dominant representative outside that cone has mult 0 (and
    // can sit on the |.+rho| shell of the top, where the recursion's
    // denominator vanishes)
    {
      IVec gap(d);
      for (int i = 0; i < d; ++i) gap[i] = highest[i] - dom[i];
      QVec gap_rc = g.to_root_basis(to_qvec(gap));
      bool below = true;
      for (const Rational& c : gap_rc)
        if (!is_integer(c) || c < 0) below = false;
      if (!below) {
        mult[dom] = 0;
        mult[mu] = 0;
        continue;
      }
    }
    // Freudenthal recursion at the dominant representative
    QVec mu_sh = to_qvec(dom);
    for (int i = 0; i < d; ++i) mu_sh[i] += rho[i];
    Rational den = top_norm - g.inner(mu_sh, mu_sh);
    Rational num = 0;
    long max_step = 0;
    for (long b : box) max_step += b;
    for (const IVec& alpha : g.positive_roots()) {
      for (long step = 1; step <= max_step; ++step) {
        IVec up = dom;
        for (int i = 0; i < d; ++i) up[i] += step * alpha[i];
        Rational m_up = lookup(g.dominant_conjugate(up));
        if (m_up != 0)
          num += 2 * m_up * g.inner(to_qvec(up), to_qvec(alpha));
      }
    }
    if (den == 0)
      throw std::logic_error("Freudenthal denominator vanished off the orbit");
    mult[dom] = num / den;
    mult[mu] = mult[dom];
  }

  for (const auto& [mu, v] : mult)
    if (v != 0) out.set(mu, v);
  return out;
}

Integer weyl_dimension(const RootDatum& g, const IVec& highest) {
  if (!g.is_dominant(highest))
    throw std::invalid_argument("highest weight must be dominant");
  QVec lam = to_qvec(highest);
  QVec rho = to_qvec(g.rho());
  QVec shifted = add(lam, rho);
  Rational dim = 1;
  for (const IVec& alpha : g.positive_roots())
    dim *= g.inner(shifted, to_qvec(alpha)) / g.inner(rho, to_qvec(alpha));
  if (!is_integer(dim)) throw std::logic_error("Weyl dimension not integral");
  return dim.get_num();
}

}  // namespace boxdec
