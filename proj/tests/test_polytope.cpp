#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adjring/polytope.hpp"

#include <random>

using namespace adjring;

namespace {

QVector qv(std::initializer_list<Rat> xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

Polytope unit_square() {
  return Polytope::box(qv({Rat(0), Rat(0)}), qv({Rat(1), Rat(1)}));
}

Polytope random_polytope(std::mt19937_64& rng, int dim, int npts) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  std::vector<QVector> pts;
  for (int i = 0; i < npts; ++i) {
    QVector p(dim);
    for (int j = 0; j < dim; ++j) p(j) = rat(num(rng), den(rng));
    pts.push_back(p);
  }
  return Polytope::from_vrep(dim, pts);
}

}  // namespace

TEST_CASE("dual description of the unit square") {
  Polytope p = unit_square();
  CHECK(p.vrep().size() == 4);
  CHECK(p.hrep().size() == 4);
  std::vector<QVector> want = {qv({Rat(0), Rat(0)}), qv({Rat(0), Rat(1)}),
                               qv({Rat(1), Rat(0)}), qv({Rat(1), Rat(1)})};
  CHECK(p.vrep() == want);
}

TEST_CASE("dual description of a 1-d segment from vertices") {
  Polytope p = Polytope::from_vrep(1, {qv({Rat(0)}), qv({Rat(1)})});
  CHECK(p.vrep().size() == 2);
  REQUIRE(p.hrep().size() == 2);
  // x >= 0 and -x >= -1 in some order
  for (const HalfSpace& h : p.hrep()) {
    if (h.normal(0) > 0) {
      CHECK(h.normal(0) == 1);
      CHECK(h.offset == 0);
    } else {
      CHECK(h.normal(0) == -1);
      CHECK(h.offset == -1);
    }
  }
}

TEST_CASE("dual description of a clipped quadrant") {
  std::vector<HalfSpace> hs;
  hs.push_back({qv({Rat(1), Rat(1)}), Rat(1)});
  hs.push_back({qv({Rat(1), Rat(0)}), Rat(0)});
  hs.push_back({qv({Rat(0), Rat(1)}), Rat(0)});
  hs.push_back({qv({Rat(-1), Rat(-1)}), Rat(-2)});
  Polytope p = Polytope::from_hrep(2, hs);
  CHECK(p.vrep().size() == 4);
  CHECK(p.contains(qv({Rat(1), Rat(0)})));
  for (const QVector& v :
       {qv({Rat(1), Rat(0)}), qv({Rat(0), Rat(1)}), qv({Rat(2), Rat(0)}), qv({Rat(0), Rat(2)})})
    CHECK(std::find(p.vrep().begin(), p.vrep().end(), v) != p.vrep().end());
}

TEST_CASE("containment") {
  Polytope p = unit_square();
  CHECK(p.contains(qv({Rat(1, 2), Rat(1, 2)})));
  CHECK(!p.contains(qv({Rat(1), Rat(2)})));
  std::vector<HalfSpace> hs;
  hs.push_back({qv({Rat(1), Rat(0)}), Rat(0)});
  hs.push_back({qv({Rat(0), Rat(1)}), Rat(0)});
  hs.push_back({qv({Rat(-1), Rat(-1)}), Rat(-1)});
  Polytope simplex = Polytope::from_hrep(2, hs);
  CHECK(simplex.contains(qv({rat(1, 3), rat(2, 3)})));
  CHECK_THROWS_AS(p.contains(qv({Rat(0)})), std::invalid_argument);
}

TEST_CASE("minkowski sums") {
  Polytope a = Polytope::from_vrep(1, {qv({Rat(0)}), qv({Rat(1)})});
  Polytope s = minkowski_sum(a, a);
  CHECK(s.vrep() == std::vector<QVector>{qv({Rat(0)}), qv({Rat(2)})});

  Polytope sq = unit_square();
  Polytope pt = Polytope::from_vrep(2, {qv({Rat(3), Rat(-1)})});
  Polytope tr = minkowski_sum(sq, pt);
  std::vector<QVector> want = {qv({Rat(3), Rat(-1)}), qv({Rat(3), Rat(0)}),
                               qv({Rat(4), Rat(-1)}), qv({Rat(4), Rat(0)})};
  CHECK(tr.vrep() == want);

  Polytope seg = Polytope::from_vrep(2, {qv({Rat(0), Rat(0)}), qv({Rat(1), Rat(1)})});
  Polytope hex = minkowski_sum(sq, seg);
  CHECK(hex.vrep().size() == 6);
  // oracle: hull of pairwise vertex sums
  std::vector<QVector> sums;
  for (const QVector& u : sq.vrep())
    for (const QVector& v : seg.vrep()) sums.push_back(u + v);
  CHECK(hex == Polytope::from_vrep(2, sums));
}

TEST_CASE("face_of") {
  Polytope p = unit_square();
  Face whole = p.face_of(qv({Rat(1, 2), Rat(1, 2)}));
  CHECK(whole.tight.empty());
  CHECK(*whole.carrier == p);

  Face corner = p.face_of(qv({Rat(0), Rat(0)}));
  CHECK(corner.tight.size() == 2);
  CHECK(corner.carrier->vrep() == std::vector<QVector>{qv({Rat(0), Rat(0)})});

  Face edge = p.face_of(qv({Rat(1, 2), Rat(0)}));
  CHECK(edge.tight.size() == 1);
  CHECK(edge.carrier->vrep() ==
        std::vector<QVector>{qv({Rat(0), Rat(0)}), qv({Rat(1), Rat(0)})});

  CHECK_THROWS_AS(p.face_of(qv({Rat(2), Rat(0)})), std::domain_error);
}

TEST_CASE("extreme points") {
  Polytope p = Polytope::from_vrep(1, {qv({Rat(0)}), qv({Rat(1, 2)}), qv({Rat(1)})});
  CHECK(p.extreme_points() == std::vector<QVector>{qv({Rat(0)}), qv({Rat(1)})});

  std::vector<HalfSpace> hs;
  hs.push_back({qv({Rat(1), Rat(0)}), Rat(0)});
  hs.push_back({qv({Rat(0), Rat(1)}), Rat(0)});
  hs.push_back({qv({Rat(-2), Rat(-1)}), Rat(-2)});
  hs.push_back({qv({Rat(-1), Rat(-2)}), Rat(-2)});
  Polytope q = Polytope::from_hrep(2, hs);
  std::vector<QVector> want = {qv({Rat(0), Rat(0)}), qv({Rat(0), Rat(1)}),
                               qv({rat(2, 3), rat(2, 3)}), qv({Rat(1), Rat(0)})};
  CHECK(q.extreme_points() == want);

  CHECK_THROWS_AS(Polytope::empty(2).extreme_points(), std::domain_error);
}

TEST_CASE("local delta") {
  Polytope seg = Polytope::from_vrep(1, {qv({Rat(0)}), qv({Rat(1)})});
  CHECK(seg.local_delta(qv({Rat(1)})) == 1);
  Polytope p = unit_square();
  CHECK(p.local_delta(qv({Rat(1, 2), Rat(1, 2)})) == Rat(1, 2));
  CHECK(p.local_delta(qv({Rat(0), Rat(0)})) == 1);
  CHECK_THROWS_AS(p.local_delta(qv({Rat(3), Rat(0)})), std::domain_error);
}

TEST_CASE("projection") {
  Polytope sq = unit_square();
  Polytope px = sq.project({0});
  CHECK(px.vrep() == std::vector<QVector>{qv({Rat(0)}), qv({Rat(1)})});

  std::vector<HalfSpace> hs;
  for (int i = 0; i < 3; ++i) {
    QVector e = QVector::Constant(3, Rat(0));
    e(i) = 1;
    hs.push_back({e, Rat(0)});
  }
  hs.push_back({qv({Rat(-1), Rat(-1), Rat(-1)}), Rat(-1)});
  Polytope simplex = Polytope::from_hrep(3, hs);
  Polytope tri = simplex.project({0, 1});
  std::vector<QVector> want = {qv({Rat(0), Rat(0)}), qv({Rat(0), Rat(1)}),
                               qv({Rat(1), Rat(0)})};
  CHECK(tri.vrep() == want);

  CHECK(Polytope::empty(2).project({0}).is_empty());
}

TEST_CASE("projection is the shadow: membership iff lift exists") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 25; ++it) {
    Polytope p = random_polytope(rng, 3, 5);
    if (p.is_empty()) continue;
    Polytope sh = p.project({0, 1});
    for (const QVector& v : p.vrep()) {
      CHECK(sh.contains(qv({v(0), v(1)})));
    }
    for (const QVector& s : sh.vrep()) {
      // lift exists: intersect p with the two fixed coordinates
      std::vector<LinCon> fix;
      QVector e0 = QVector::Constant(3, Rat(0)), e1 = QVector::Constant(3, Rat(0));
      e0(0) = 1;
      e1(1) = 1;
      fix.push_back({e0, s(0), true});
      fix.push_back({e1, s(1), true});
      CHECK(!p.intersect(fix).is_empty());
    }
  }
}

TEST_CASE("dual description round trip on random polytopes") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 60; ++it) {
    int dim = 1 + static_cast<int>(it % 4);
    Polytope p = random_polytope(rng, dim, 6);
    if (p.is_empty()) continue;
    Polytope q = Polytope::from_hrep(dim, p.hrep());
    CHECK(p.vrep() == q.vrep());
  }
}

TEST_CASE("face minimality on random polytopes") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 10; ++it) {
    Polytope p = random_polytope(rng, 2, 5);
    if (p.is_empty() || p.affine_dim() < 2) continue;
    for (const QVector& v : p.vrep()) {
      Face f = p.face_of(v);
      CHECK(f.carrier->contains(v));
      CHECK(f.carrier->vrep() == std::vector<QVector>{v});
      // dropping any tight inequality strictly enlarges the face
      for (int drop : f.tight) {
        std::vector<HalfSpace> hs = p.hrep();
        for (int t : f.tight) {
          if (t == drop) continue;
          hs.push_back({QVector(-p.hrep()[t].normal), Rat(-p.hrep()[t].offset)});
        }
        Polytope larger = Polytope::from_hrep(p.dim(), hs);
        CHECK(larger.vrep().size() > 1);
      }
    }
  }
}

TEST_CASE("cones and segments") {
  Cone quad = Cone::from_generators(
      2, {qv({Rat(1), Rat(0)}), qv({Rat(0), Rat(1)})});
  CHECK(quad.pointed());
  CHECK(quad.generators().size() == 2);
  CHECK(quad.contains(qv({Rat(2), Rat(3)})));
  CHECK(!quad.contains(qv({Rat(-1), Rat(0)})));

  auto hit = segment_cone_hits(quad, qv({Rat(1), Rat(1)}), qv({Rat(1), Rat(-1)}));
  REQUIRE(hit);
  CHECK(hit->first == 0);
  CHECK(hit->second == Rat(1, 2));

  auto inside = segment_cone_hits(quad, qv({Rat(1), Rat(0)}), qv({Rat(0), Rat(2)}));
  REQUIRE(inside);
  CHECK(inside->first == 0);
  CHECK(inside->second == 1);

  auto miss = segment_cone_hits(quad, qv({Rat(-1), Rat(-1)}), qv({Rat(-2), Rat(-1)}));
  CHECK(!miss);

  Cone halfplane = Cone::from_hrep(2, {qv({Rat(0), Rat(1)})});
  CHECK(!halfplane.pointed());
  CHECK(halfplane.lineality().size() == 1);
}

TEST_CASE("minkowski commutes and is monotone") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 10; ++it) {
    Polytope a = random_polytope(rng, 2, 4);
    Polytope b = random_polytope(rng, 2, 4);
    Polytope c = random_polytope(rng, 2, 3);
    if (a.is_empty() || b.is_empty() || c.is_empty()) continue;
    CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    CHECK(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));
  }
}
