#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "boxdec/boxspline.hpp"

using namespace boxdec;

namespace {

QVec qv(std::initializer_list<const char*> xs) {
  QVec v;
  for (const char* s : xs) v.push_back(parse_rational(s));
  return v;
}

// ---- independent one-dimensional oracle: repeated exact convolution of
// interval indicators, kept as a piecewise polynomial in global coordinates.

using Poly1 = std::vector<Rational>;  // coefficients, low to high

Rational poly_eval(const Poly1& p, const Rational& t) {
  Rational v(0);
  for (size_t k = p.size(); k-- > 0;) v = v * t + p[k];
  return v;
}

Poly1 poly_shift(const Poly1& p, const Rational& a) {
  // q(t) = p(t - a)
  Poly1 q(p.size(), Rational(0));
  for (size_t k = 0; k < p.size(); ++k) {
    // expand p_k (t - a)^k
    Poly1 pw{Rational(1)};
    for (size_t j = 0; j < k; ++j) {
      Poly1 nx(pw.size() + 1, Rational(0));
      for (size_t i = 0; i < pw.size(); ++i) {
        nx[i + 1] += pw[i];
        nx[i] -= a * pw[i];
      }
      pw = std::move(nx);
    }
    for (size_t i = 0; i < pw.size(); ++i) q[i] += p[k] * pw[i];
  }
  return q;
}

Poly1 poly_antiderivative(const Poly1& p) {
  Poly1 q(p.size() + 1, Rational(0));
  for (size_t k = 0; k < p.size(); ++k) q[k + 1] = p[k] / Rational(k + 1);
  return q;
}

struct Piecewise {
  std::vector<Rational> breaks;  // sorted, size n+1
  std::vector<Poly1> polys;      // size n, zero outside [breaks.front, back]

  Rational eval(const Rational& t) const {
    for (size_t i = 0; i + 1 < breaks.size(); ++i)
      if (breaks[i] < t && t < breaks[i + 1]) return poly_eval(polys[i], t);
    return 0;
  }
};

// antiderivative F with F == 0 left of the support, continuous
Piecewise antiderivative(const Piecewise& f) {
  Piecewise g{f.breaks, {}};
  Rational acc(0);
  for (size_t i = 0; i < f.polys.size(); ++i) {
    Poly1 a = poly_antiderivative(f.polys[i]);
    Rational c = acc - poly_eval(a, f.breaks[i]);
    a[0] += c;
    acc = poly_eval(a, f.breaks[i + 1]);
    g.polys.push_back(std::move(a));
  }
  return g;
}

Rational antideriv_value(const Piecewise& g, const Rational& t) {
  if (t <= g.breaks.front()) return 0;
  if (t >= g.breaks.back())
    return poly_eval(g.polys.back(), g.breaks.back());
  for (size_t i = 0; i + 1 < g.breaks.size(); ++i)
    if (t <= g.breaks[i + 1]) return poly_eval(g.polys[i], t);
  return 0;
}

// convolve with (1/a) * indicator of [0, a), a > 0
Piecewise convolve_box(const Piecewise& f, long a) {
  Piecewise big = antiderivative(f);
  std::vector<Rational> bps;
  for (const auto& b : f.breaks) {
    bps.push_back(b);
    bps.push_back(b + Rational(a));
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  auto segment_poly = [&](const Rational& t) -> Poly1 {
    // polynomial valid near t: F(t) - F(t - a), divided by a
    auto piece_of = [&](const Rational& x) -> Poly1 {
      if (x <= big.breaks.front()) return {Rational(0)};
      if (x >= big.breaks.back())
        return {poly_eval(big.polys.back(), big.breaks.back())};
      for (size_t i = 0; i + 1 < big.breaks.size(); ++i)
        if (x < big.breaks[i + 1]) return big.polys[i];
      return {Rational(0)};
    };
    Poly1 left = piece_of(t);
    Poly1 right = poly_shift(piece_of(t - Rational(a)), Rational(a));
    Poly1 out(std::max(left.size(), right.size()), Rational(0));
    for (size_t i = 0; i < left.size(); ++i) out[i] += left[i];
    for (size_t i = 0; i < right.size(); ++i) out[i] -= right[i];
    for (auto& c : out) c /= Rational(a);
    return out;
  };

  Piecewise out{bps, {}};
  for (size_t i = 0; i + 1 < bps.size(); ++i) {
    Rational mid = (bps[i] + bps[i + 1]) / 2;
    out.polys.push_back(segment_poly(mid));
  }
  return out;
}

// centered one-dimensional box spline for positive integer weights
Piecewise oracle_centered(const std::vector<long>& weights) {
  Piecewise f{{Rational(0), Rational(weights[0])},
              {{make_rational(1, weights[0])}}};
  Rational total(weights[0]);
  for (size_t i = 1; i < weights.size(); ++i) {
    f = convolve_box(f, weights[i]);
    total += Rational(weights[i]);
  }
  // recenter: value at x is the uncentered value at x + total/2
  Rational half = total / 2;
  Piecewise g{{}, {}};
  for (const auto& b : f.breaks) g.breaks.push_back(b - half);
  for (const auto& p : f.polys) g.polys.push_back(poly_shift(p, -half));
  return g;
}

Rational moment(const Piecewise& f, int power) {
  Rational acc(0);
  for (size_t i = 0; i < f.polys.size(); ++i) {
    Poly1 p = f.polys[i];
    for (int k = 0; k < power; ++k) {
      p.insert(p.begin(), Rational(0));  // multiply by t
    }
    Poly1 a = poly_antiderivative(p);
    acc += poly_eval(a, f.breaks[i + 1]) - poly_eval(a, f.breaks[i]);
  }
  return acc;
}

Rational random_generic(std::mt19937_64& rng, long span) {
  // odd denominator keeps the point off the half-integer wall offsets
  std::uniform_int_distribution<long> num(-span * 600, span * 600);
  for (;;) {
    Rational r = make_rational(num(rng), 601);
    if (r.get_den() == 601) return r;
  }
}

}  // namespace

TEST_CASE("one-dimensional values against the convolution oracle") {
  CHECK(eval_box(WeightList(1, {{1}}), qv({"1/4"})) == Rational(1));
  CHECK(eval_box(WeightList(1, {{1}, {1}}), qv({"1/3"})) ==
        make_rational(2, 3));
  CHECK(eval_box(WeightList(1, {{1}, {1}, {1}}), qv({"0"})) ==
        make_rational(3, 4));

  std::mt19937_64 rng(2718);
  for (auto weights : std::vector<std::vector<long>>{
           {1}, {1, 1}, {1, 2}, {1, 1, 1}, {1, 2, 3}, {2, 2}, {1, 1, 2}}) {
    Piecewise oracle = oracle_centered(weights);
    IMat vecs;
    for (long w : weights) vecs.push_back({w});
    WeightList phi(1, vecs);
    for (int rep = 0; rep < 25; ++rep) {
      Rational x = random_generic(rng, 4);
      CAPTURE(x.get_str());
      CHECK(eval_box(phi, {x}) == oracle.eval(x));
    }
  }
}

TEST_CASE("non-generic points are rejected") {
  WeightList phi(1, {{1}, {1}});
  CHECK_THROWS_AS(eval_box(phi, qv({"0"})), NonGenericPoint);
  CHECK_THROWS_AS(eval_box(phi, qv({"1"})), NonGenericPoint);
  WeightList tri(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(eval_box(tri, qv({"0", "0"})), NonGenericPoint);
  CHECK_THROWS_AS(eval_box(tri, qv({"1/2", "1/2"})), NonGenericPoint);
  // generic points outside the support evaluate to plain zero
  CHECK(eval_box(tri, qv({"15/2", "1/3"})) == Rational(0));
}

TEST_CASE("centered symmetry and sign-flip invariance") {
  std::mt19937_64 rng(31337);
  WeightList phi(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  WeightList flipped(2, {{-1, 0}, {0, 1}, {-1, -1}, {1, -1}});
  for (int rep = 0; rep < 20; ++rep) {
    QVec x = {random_generic(rng, 2), random_generic(rng, 2)};
    Rational v = eval_box(phi, x);
    CHECK(v == eval_box(phi, {-x[0], -x[1]}));
    CHECK(v == eval_box(flipped, x));
  }
}

TEST_CASE("periodization sums to one") {
  std::mt19937_64 rng(5150);
  // d = 1
  for (auto weights : std::vector<std::vector<long>>{{1, 1}, {1, 2}}) {
    IMat vecs;
    long reach = 0;
    for (long w : weights) {
      vecs.push_back({w});
      reach += w;
    }
    WeightList phi(1, vecs);
    for (int rep = 0; rep < 20; ++rep) {
      Rational x = random_generic(rng, 1);
      Rational total(0);
      for (long l = -reach - 1; l <= reach + 1; ++l)
        total += eval_box(phi, {x - Rational(l)});
      CHECK(total == Rational(1));
    }
  }
  // d = 2
  WeightList tri(2, {{1, 0}, {0, 1}, {1, 1}});
  for (int rep = 0; rep < 10; ++rep) {
    QVec x = {random_generic(rng, 1), random_generic(rng, 1)};
    Rational total(0);
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b)
        total += eval_box(tri, {x[0] - Rational(a), x[1] - Rational(b)});
    CHECK(total == Rational(1));
  }
}

TEST_CASE("local pieces") {
  // flat middle piece of the [1,2] spline
  WeightList phi(1, {{1}, {2}});
  auto fams = wall_families(phi);
  auto flat = local_piece(phi, alcove_of(qv({"0"}), qv({"1"}), fams), 7);
  CHECK(flat.poly == MultiPoly<Rational>::constant(1, make_rational(1, 2)));

  // descending tent piece: 1 - v on (0, 1)
  WeightList tent(1, {{1}, {1}});
  auto tf = wall_families(tent);
  auto down = local_piece(tent, alcove_of(qv({"1/2"}), qv({"1"}), tf), 7);
  MultiPoly<Rational> expect(1);
  expect.add_term({0}, Rational(1));
  expect.add_term({1}, Rational(-1));
  CHECK(down.poly == expect);

  // constant-one piece of the single-interval spline
  WeightList ind(1, {{1}});
  auto inf = wall_families(ind);
  auto one = local_piece(ind, alcove_of(qv({"0"}), qv({"1"}), inf), 7);
  CHECK(one.poly == MultiPoly<Rational>::constant(1, Rational(1)));

  // pieces agree with direct evaluation at fresh points
  std::mt19937_64 rng(404);
  WeightList b2(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  auto bf = wall_families(b2);
  QVec eps = default_generic_direction(b2, 9);
  for (auto base : {qv({"0", "0"}), qv({"1/2", "1/2"}), qv({"-1", "0"})}) {
    auto germ = alcove_of(base, eps, bf);
    auto piece = local_piece(b2, germ, 11);
    auto pts = sample_alcove_points(germ, bf, 5, 777);
    for (const auto& p : pts) CHECK(piece.poly.evaluate(p) == eval_box(b2, p));
  }
}

TEST_CASE("piece table caching and support shortcut") {
  WeightList phi(1, {{1}, {2}});
  PieceTable table(phi);
  QVec eps = qv({"1"});
  auto p1 = table.piece_at(qv({"0"}), eps, 3);
  auto p2 = table.piece_at(qv({"1/4"}), eps, 99);  // same alcove, cached
  CHECK(p1 == p2);
  CHECK(table.piece_at(qv({"5"}), eps, 3).is_zero());
  CHECK(table.piece_at(qv({"-2"}), eps, 3).is_zero());
}

TEST_CASE("moment identities from the local pieces") {
  // integrate the alcove pieces over the support: mass 1, centered mean 0
  for (auto weights : std::vector<std::vector<long>>{{1, 1}, {1, 2}, {1, 2, 3}}) {
    IMat vecs;
    Rational reach(0);
    for (long w : weights) {
      vecs.push_back({w});
      reach += make_rational(w, 2);
    }
    WeightList phi(1, vecs);
    PieceTable table(phi);
    QVec eps = qv({"1"});
    Rational mass(0), mean(0);
    Rational lo = -reach;
    while (lo < reach) {
      // alcove of lo+ extends to the next wall at most 1/2 away
      auto piece = table.piece_at({lo}, eps, 13);
      Rational hi = lo + make_rational(1, 2);
      // exact integrals of the univariate piece over (lo, hi)
      for (const auto& [e, c] : piece.terms()) {
        int k = e[0];
        auto ipow = [](const Rational& t, int n) {
          Rational v(1);
          for (int i = 0; i < n; ++i) v *= t;
          return v;
        };
        mass += c * (ipow(hi, k + 1) - ipow(lo, k + 1)) / Rational(k + 1);
        mean += c * (ipow(hi, k + 2) - ipow(lo, k + 2)) / Rational(k + 2);
      }
      lo = hi;
    }
    CHECK(mass == Rational(1));
    CHECK(mean == Rational(0));
  }
}

TEST_CASE("twisted expansion") {
  WeightList phi(1, {{1}, {2}});
  TorusPoint id(qv({"0"}));
  auto e0 = twisted_expansion(id, phi);
  CHECK(e0.sublist == phi);
  REQUIRE(e0.terms.size() == 1);
  CHECK(e0.terms[0].coeff == Cyclotomic(Rational(1)));
  CHECK(e0.terms[0].shift == qv({"0"}));
  CHECK(e0.field_order == 1);

  TorusPoint half(qv({"1/2"}));
  auto e1 = twisted_expansion(half, phi);
  CHECK(e1.sublist == WeightList(1, {{2}}));
  REQUIRE(e1.terms.size() == 2);
  CHECK(e1.field_order == 2);
  // (delta_{1/2} - s^{-1} delta_{-1/2}) / (1 - s^{-1}) with s^{-1} = -1
  for (const auto& t : e1.terms)
    CHECK(t.coeff == Cyclotomic(make_rational(1, 2)));
  CHECK(e1.terms[0].shift == qv({"-1/2"}));
  CHECK(e1.terms[1].shift == qv({"1/2"}));

  // a 2^k-term expansion in rank two
  WeightList r2(2, {{1, 3}, {1, -3}});
  TorusPoint s6(qv({"1/2", "1/6"}));  // s^alpha = 1 for both elements? no:
  // pick an order-6 vertex of the list instead
  auto verts = vertex_set(r2);
  bool found = false;
  for (const auto& s : verts) {
    if (s.order() != 6) continue;
    found = true;
    auto ex = twisted_expansion(s, r2);
    CHECK(ex.sublist == r2);
    CHECK(ex.terms.size() == 1);  // full sublist, nothing to expand
  }
  CHECK(found);

  // vertex keeping only part of a non-unimodular 2-d list
  WeightList mix(2, {{1, 0}, {0, 1}, {2, 1}});
  TorusPoint v(qv({"1/2", "0"}));  // fixes (0,1) and (2,1), not (1,0)
  auto em = twisted_expansion(v, mix);
  CHECK(em.sublist == WeightList(2, {{0, 1}, {2, 1}}));
  CHECK(em.terms.size() == 2);

  CHECK_THROWS(twisted_expansion(TorusPoint(qv({"1/3"})), phi));
}

TEST_CASE("multiplicity functions") {
  MultiplicityFunction m(2, qv({"1/2", "0"}));
  m.set({0, 0}, Rational(3));
  m.add({0, 0}, Rational(-1));
  m.set({2, -1}, Rational(5));
  CHECK(m.at_offset({0, 0}) == Rational(2));
  CHECK(m.at_point(qv({"1/2", "0"})) == Rational(2));
  CHECK(m.at_point(qv({"5/2", "-1"})) == Rational(5));
  CHECK(m.at_point(qv({"0", "0"})) == Rational(0));   // off the lattice
  CHECK(m.at_point(qv({"3/2", "0"})) == Rational(0));  // off the support
  auto [lo, hi] = m.support_box();
  CHECK(lo == IVec{0, -1});
  CHECK(hi == IVec{2, 0});
  m.set({2, -1}, Rational(0));
  CHECK(m.values().size() == 1);
}

TEST_CASE("forward pieces") {
  WeightList phi(1, {{1}, {2}});
  PieceTable table(phi);
  QVec eps = qv({"1"});

  // b(delta_0) is the box spline itself
  MultiplicityFunction delta(1);
  delta.set({0}, Rational(1));
  auto p0 = forward_piece_identity(delta, phi, qv({"0"}), eps, table, 5);
  CHECK(p0 == MultiPoly<Rational>::constant(1, make_rational(1, 2)));
  auto p1 = forward_piece_identity(delta, phi, qv({"1"}), eps, table, 5);
  // descending edge (3/2 - v)/2 on (1/2, 3/2)
  MultiPoly<Rational> edge(1);
  edge.add_term({0}, make_rational(3, 4));
  edge.add_term({1}, make_rational(-1, 2));
  CHECK(p1 == edge);

  // translates add with their weights
  MultiplicityFunction two(1);
  two.set({0}, Rational(1));
  two.set({1}, Rational(-2));
  auto q = forward_piece_identity(two, phi, qv({"1"}), eps, table, 5);
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 5; ++rep) {
    Rational x = Rational(1) + make_rational(1, 7 + rep);
    Rational direct = eval_box(phi, {x}) - Rational(2) * eval_box(phi, {x - 1});
    CHECK(q.evaluate({x}) == direct);
  }

  // twisted piece at the identity matches the rational one
  TorusPoint id(qv({"0"}));
  auto c = forward_piece(two, id, phi, qv({"1"}), eps, table, 5);
  for (const auto& [e, coef] : c.terms()) {
    CHECK(coef.is_rational());
    CHECK(coef.rational_part() == q.terms().at(e));
  }
}
