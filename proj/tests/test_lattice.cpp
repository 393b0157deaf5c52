#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "boxdec/arrangement.hpp"
#include "boxdec/smith.hpp"
#include "boxdec/torus.hpp"

using namespace boxdec;

namespace {

QVec qv(std::initializer_list<const char*> xs) {
  QVec v;
  for (const char* s : xs) v.push_back(parse_rational(s));
  return v;
}

ZMat random_zmat(int r, int c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  ZMat m(r, std::vector<Integer>(c));
  for (auto& row : m)
    for (auto& x : row) x = Integer(d(rng));
  return m;
}

}  // namespace

TEST_CASE("wall families, one dimension") {
  WeightList phi(1, {{1}, {2}});
  auto fams = wall_families(phi);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].normal == IVec{1});
  CHECK(fams[0].phase == make_rational(1, 2));  // rho = 3/2

  WeightList tent(1, {{1}, {1}});
  auto f2 = wall_families(tent);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].phase == Rational(0));  // rho = 1, walls on the integers
}

TEST_CASE("wall families, two dimensions") {
  WeightList phi(2, {{1, 0}, {0, 1}, {1, 1}});
  auto fams = wall_families(phi);
  REQUIRE(fams.size() == 3);
  std::set<IVec> normals;
  for (const auto& f : fams) {
    normals.insert(f.normal);
    CHECK(f.phase == Rational(0));  // rho = (1,1) pairs integrally with all
  }
  CHECK(normals == std::set<IVec>{{0, 1}, {1, -1}, {1, 0}});

  WeightList b2(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  auto fb = wall_families(b2);
  REQUIRE(fb.size() == 4);
  for (const auto& f : fb) {
    // rho = (3/2, 1/2): the axis families are offset by 1/2, the diagonal
    // families are integral
    if (f.normal == IVec{1, 0} || f.normal == IVec{0, 1})
      CHECK(f.phase == make_rational(1, 2));
    else
      CHECK(f.phase == Rational(0));
  }
}

TEST_CASE("genericity of directions") {
  WeightList b2(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  CHECK_FALSE(is_generic(qv({"1", "1"}), b2));
  CHECK_FALSE(is_generic(qv({"1", "0"}), b2));
  CHECK(is_generic(qv({"2", "1"}), b2));
  for (uint64_t seed = 0; seed < 8; ++seed)
    CHECK(is_generic(default_generic_direction(b2, seed), b2));
}

TEST_CASE("alcove germs and interiors") {
  WeightList phi(1, {{1}, {2}});  // walls at 1/2 + Z
  auto fams = wall_families(phi);

  auto g = alcove_of(qv({"0"}), qv({"1"}), fams);
  CHECK(g.signature == std::vector<long>{-1});  // (-1/2, 1/2)
  CHECK(in_alcove_interior(qv({"0"}), g, fams));
  CHECK(in_alcove_interior(qv({"2/5"}), g, fams));
  CHECK_FALSE(in_alcove_interior(qv({"1/2"}), g, fams));
  CHECK_FALSE(in_alcove_interior(qv({"3/5"}), g, fams));

  // base exactly on a wall: the side is decided by the direction
  auto gp = alcove_of(qv({"1/2"}), qv({"1"}), fams);
  CHECK(gp.signature == std::vector<long>{0});
  auto gm = alcove_of(qv({"1/2"}), qv({"-1"}), fams);
  CHECK(gm.signature == std::vector<long>{-1});

  CHECK_THROWS(alcove_of(qv({"0"}), qv({"0"}), fams));
}

TEST_CASE("alcove sampling postconditions") {
  WeightList phi(2, {{1, 0}, {0, 1}, {1, 1}});
  auto fams = wall_families(phi);
  QVec eps = qv({"1/3", "1/5"});
  for (auto base : {qv({"0", "0"}), qv({"1", "1"}), qv({"-1/2", "1/4"})}) {
    auto germ = alcove_of(base, eps, fams);
    auto pts = sample_alcove_points(germ, fams, 12, 42);
    CHECK(pts.size() == 12);
    std::set<QVec> uniq(pts.begin(), pts.end());
    CHECK(uniq.size() == 12);
    for (const auto& p : pts) CHECK(in_alcove_interior(p, germ, fams));
    // deterministic for a fixed seed
    CHECK(pts == sample_alcove_points(germ, fams, 12, 42));
    CHECK(pts != sample_alcove_points(germ, fams, 12, 43));
  }
}

TEST_CASE("smith normal form, examples") {
  ZMat a = zmat_from_rows({{2, 4}, {6, 8}});
  auto s = smith_normal_form(a);
  CHECK(s.d[0][0] == 2);
  CHECK(s.d[1][1] == 4);
  CHECK(zmat_mul(zmat_mul(s.u, a), s.v) == s.d);

  ZMat b = zmat_from_rows({{1, 3}, {1, -3}});
  auto sb = smith_normal_form(b);
  CHECK(sb.d[0][0] == 1);
  CHECK(sb.d[1][1] == 6);

  ZMat z = zmat_from_rows({{0, 0}, {0, 0}});
  auto sz = smith_normal_form(z);
  CHECK(sz.d == z);
}

TEST_CASE("smith normal form, randomized properties") {
  std::mt19937_64 rng(314159);
  for (int rep = 0; rep < 40; ++rep) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    ZMat a = random_zmat(r, c, rng);
    auto s = smith_normal_form(a);
    CHECK(zmat_mul(zmat_mul(s.u, a), s.v) == s.d);
    Integer du = zmat_det(s.u), dv = zmat_det(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (int i = 0; i < std::min(r, c); ++i) {
      CHECK(s.d[i][i] >= 0);
      if (i + 1 < std::min(r, c) && s.d[i][i] != 0 && s.d[i + 1][i + 1] != 0)
        CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
      for (int j = 0; j < c; ++j)
        if (j != i) CHECK(s.d[i][j] == 0);
    }
  }
}

TEST_CASE("torus points and characters") {
  TorusPoint s(qv({"1/2"}));
  CHECK(s.order() == 2);
  CHECK(s.character(IVec{1}) == Cyclotomic::root_of_unity(2, 1));
  CHECK(s.character(IVec{2}) == Cyclotomic(Rational(1)));
  CHECK(s.inverted() == s);

  TorusPoint t(qv({"7/3", "-1/4"}));  // reduces mod 1
  CHECK(t.coords() == qv({"1/3", "3/4"}));
  CHECK(t.order() == 12);
  CHECK(t.character(IVec{3, 0}) == Cyclotomic(Rational(1)));
  CHECK(t.character(IVec{0, 1}) == Cyclotomic::root_of_unity(4, 3));
  CHECK(t.inverted().coords() == qv({"2/3", "1/4"}));

  // rational (non-integral) exponents through the lattice-shift convention
  CHECK(s.character(qv({"1/2"})) == Cyclotomic::root_of_unity(4, 1));

  WeightList phi(1, {{1}, {2}});
  CHECK(s.fixed_indices(phi) == std::vector<int>{1});
  TorusPoint id(qv({"0"}));
  CHECK(id.fixed_indices(phi) == std::vector<int>{0, 1});
}

TEST_CASE("vertex sets") {
  // d = 1: [1,2] has vertices 0 and 1/2
  auto v1 = vertex_set(WeightList(1, {{1}, {2}}));
  REQUIRE(v1.size() == 2);
  CHECK(v1[0].coords() == qv({"0"}));
  CHECK(v1[1].coords() == qv({"1/2"}));

  // unimodular lists only have the identity
  auto v2 = vertex_set(WeightList(2, {{1, 0}, {0, 1}, {1, 1}}));
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].is_identity());

  // restricted roots of the rank-one embedding: a cyclic group of order 6
  auto v3 = vertex_set(WeightList(2, {{1, 3}, {1, -3}}));
  CHECK(v3.size() == 6);
  std::set<TorusPoint> set3(v3.begin(), v3.end());
  for (const auto& s : v3) {
    CHECK(set3.count(s.inverted()) == 1);  // closed under inversion
    CHECK(6 % s.order() == 0);
  }
  CHECK(v3[0].is_identity());
  CHECK(std::is_sorted(v3.begin(), v3.end()));

  // torus-embedding list for the rank-two group: index-3 vertex group
  auto v4 = vertex_set(WeightList(2, {{2, -1}, {-1, 2}, {1, 1}}));
  REQUIRE(v4.size() == 3);
  CHECK(v4[0].coords() == qv({"0", "0"}));
  CHECK(v4[1].coords() == qv({"1/3", "2/3"}));
  CHECK(v4[2].coords() == qv({"2/3", "1/3"}));
  // every vertex keeps the full list fixed here
  WeightList phi4(2, {{2, -1}, {-1, 2}, {1, 1}});
  for (const auto& s : v4)
    CHECK(s.fixed_indices(phi4) == std::vector<int>{0, 1, 2});
}

TEST_CASE("vertex set invariances") {
  // sign flips and reordering do not change the vertex set
  WeightList a(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  WeightList b(2, {{-1, 0}, {1, 1}, {0, -1}, {-1, 1}});
  auto va = vertex_set(a), vb = vertex_set(b);
  REQUIRE(va.size() == vb.size());
  for (size_t i = 0; i < va.size(); ++i) CHECK(va[i] == vb[i]);
}
