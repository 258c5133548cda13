#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adjring/monoid.hpp"

using namespace adjring;

namespace {

QVector qv(std::initializer_list<Rat> xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

ZVector zv(std::initializer_list<long> xs) {
  ZVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

Cone wedge(long k) {
  return Cone::from_generators(2, {qv({Rat(1), Rat(0)}), qv({Rat(1), Rat(k)})});
}

}  // namespace

TEST_CASE("hilbert basis of unimodular cones is the ray set") {
  Cone c = Cone::from_generators(2, {qv({Rat(1), Rat(0)}), qv({Rat(0), Rat(1)})});
  HilbertBasis hb = hilbert_basis(c);
  CHECK(hb.elements == std::vector<ZVector>{zv({0, 1}), zv({1, 0})});

  Cone c3 = Cone::from_generators(
      3, {qv({Rat(1), Rat(0), Rat(0)}), qv({Rat(1), Rat(1), Rat(0)}),
          qv({Rat(1), Rat(1), Rat(1)})});
  HilbertBasis hb3 = hilbert_basis(c3);
  CHECK(hb3.elements.size() == 3);
}

TEST_CASE("hilbert basis of singular wedges") {
  HilbertBasis h2 = hilbert_basis(wedge(2));
  CHECK(h2.elements ==
        std::vector<ZVector>{zv({1, 0}), zv({1, 1}), zv({1, 2})});
  HilbertBasis h3 = hilbert_basis(wedge(3));
  CHECK(h3.elements == std::vector<ZVector>{zv({1, 0}), zv({1, 1}),
                                            zv({1, 2}), zv({1, 3})});
}

TEST_CASE("hilbert basis rejects cones with lines") {
  Cone half = Cone::from_hrep(2, {qv({Rat(0), Rat(1)})});
  CHECK_THROWS_AS(hilbert_basis(half), std::domain_error);
}

TEST_CASE("hilbert basis minimality and completeness") {
  for (long k : {2L, 3L}) {
    HilbertBasis hb = hilbert_basis(wedge(k));
    for (const ZVector& h : hb.elements)
      for (const ZVector& a : hb.elements)
        for (const ZVector& b : hb.elements) CHECK(h != ZVector(a + b));
    GenerationCheck g = is_generated(wedge(k), Rat(10), hb.elements);
    CHECK(g.generated);
  }
}

TEST_CASE("is_generated finds the missing middle generator") {
  GenerationCheck bad =
      is_generated(wedge(2), Rat(6), {zv({1, 0}), zv({1, 2})});
  CHECK(!bad.generated);
  REQUIRE(bad.counterexample);
  CHECK(*bad.counterexample == zv({1, 1}));

  GenerationCheck good =
      is_generated(wedge(2), Rat(6), {zv({1, 0}), zv({1, 1}), zv({1, 2})});
  CHECK(good.generated);

  Cone quad =
      Cone::from_generators(2, {qv({Rat(1), Rat(0)}), qv({Rat(0), Rat(1)})});
  CHECK(is_generated(quad, Rat(5), {zv({1, 0}), zv({0, 1})}).generated);
}

TEST_CASE("decompose") {
  std::vector<ZVector> gens = {zv({1, 0}), zv({1, 1}), zv({1, 2})};
  auto d = decompose(zv({2, 1}), gens);
  REQUIRE(d);
  CHECK(*d == std::vector<ZVector>{zv({1, 0}), zv({1, 1})});

  auto zero = decompose(zv({0, 0}), gens);
  REQUIRE(zero);
  CHECK(zero->empty());

  CHECK(!decompose(zv({1, 1}), {zv({1, 0}), zv({1, 2})}));
}

TEST_CASE("veronese submonoids") {
  AffineMonoid n2{{zv({1, 0}), zv({0, 1})}, 2, true};
  ZMatrix l(2, 2);
  l << 2, 0, 0, 1;
  AffineMonoid v = veronese_submonoid(n2, l);
  CHECK(v.finite_index);
  CHECK(v.generators == std::vector<ZVector>{zv({0, 1}), zv({2, 0})});

  AffineMonoid n1{{zv({1})}, 1, true};
  ZMatrix l3(1, 1);
  l3 << 3;
  AffineMonoid v3 = veronese_submonoid(n1, l3);
  CHECK(v3.generators == std::vector<ZVector>{zv({3})});

  // identity lattice returns the monoid itself
  ZMatrix id = ZMatrix::Identity(2, 2);
  AffineMonoid w{{zv({1, 0}), zv({1, 1}), zv({1, 2})}, 2, true};
  AffineMonoid vw = veronese_submonoid(w, id);
  CHECK(vw.generators ==
        std::vector<ZVector>{zv({1, 0}), zv({1, 1}), zv({1, 2})});
}

TEST_CASE("veronese against brute force on the even sublattice") {
  AffineMonoid w{{zv({1, 0}), zv({1, 1}), zv({1, 2})}, 2, true};
  ZMatrix l(2, 2);  // {(a,b) : a+b even}
  l << 2, 1, 0, 1;
  AffineMonoid v = veronese_submonoid(w, l);
  CHECK(v.finite_index);

  // brute force: every point of the wedge cone with even coordinate sum
  // and first coordinate ≤ 6 must decompose over v.generators
  for (long a = 0; a <= 6; ++a) {
    for (long b = 0; b <= 2 * a; ++b) {
      if ((a + b) % 2 != 0) continue;
      ZVector x = zv({a, b});
      if (a == 0 && b == 0) continue;
      CHECK(decompose(x, v.generators));
    }
  }
  // and the generators are irredundant over each other
  for (size_t i = 0; i < v.generators.size(); ++i) {
    std::vector<ZVector> others;
    for (size_t j = 0; j < v.generators.size(); ++j)
      if (j != i) others.push_back(v.generators[j]);
    CHECK(!decompose(v.generators[i], others));
  }
}

TEST_CASE("lattice points of a polytope") {
  Polytope sq = Polytope::box(qv({Rat(0), Rat(0)}), qv({Rat(2), Rat(1)}));
  CHECK(lattice_points(sq).size() == 6);
  Polytope thin =
      Polytope::box(qv({Rat(1, 3)}), qv({Rat(2, 3)}));
  CHECK(lattice_points(thin).empty());
  CHECK(lattice_points(Polytope::empty(2)).empty());
}
