#ifndef ADJRING_POLYTOPE_HPP
#define ADJRING_POLYTOPE_HPP

#include "adjring/linalg.hpp"
#include "adjring/quadratic.hpp"
#include "adjring/simplex.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace adjring {

// Extreme rays and lineality of the cone {x : <a,x> >= 0 for all a},
// by incremental double description. Rays are primitive integer vectors,
// sorted lexicographically.
struct DDResult {
  std::vector<QVector> lineality;
  std::vector<ZVector> rays;
};
DDResult double_description(int dim, const std::vector<QVector>& ineqs);

struct HalfSpace {
  QVector normal;
  Rat offset;  // <normal, x> >= offset
};

class Polytope;

struct Face {
  std::vector<int> tight;  // hrep indices active on the face
  std::shared_ptr<const Polytope> carrier;
};

// Rational polytope with a synchronized dual description. Both
// representations are canonical: vrep is exactly the extreme points
// (sorted lexicographically) and hrep is irredundant, with the affine
// hull stored as paired opposite inequalities. Immutable after
// construction. The empty polytope is first-class.
class Polytope {
 public:
  static Polytope from_hrep(int dim, std::vector<HalfSpace> hs);
  static Polytope from_vrep(int dim, std::vector<QVector> pts);
  static Polytope empty(int dim);
  static Polytope box(const QVector& lo, const QVector& hi);

  int dim() const { return dim_; }
  bool is_empty() const { return vrep_.empty(); }
  // dimension of the affine hull; -1 for the empty polytope
  int affine_dim() const;

  const std::vector<HalfSpace>& hrep() const { return hrep_; }
  const std::vector<QVector>& vrep() const { return vrep_; }

  bool contains(const QVector& x) const;
  bool contains(const QuadVector& x) const;

  // Extreme points; throws std::domain_error when empty.
  const std::vector<QVector>& extreme_points() const;

  // Minimal face containing y; throws std::domain_error when y is outside.
  Face face_of(const QVector& y) const;
  Face face_of(const QuadVector& y) const;

  // Local polytopality radius: min sup-norm distance from x to the faces that do
  // not contain x. Throws std::domain_error when x is outside.
  Rat local_delta(const QVector& x) const;

  // Exact coordinate projection onto the kept indices (Fourier-Motzkin).
  Polytope project(const std::vector<int>& keep) const;

  // Intersection with extra conditions, re-canonicalized.
  Polytope intersect(const std::vector<LinCon>& extra) const;

  friend Polytope minkowski_sum(const Polytope& a, const Polytope& b);
  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vrep_ == b.vrep_;
  }

 private:
  Polytope() = default;
  int dim_ = 0;
  std::vector<HalfSpace> hrep_;
  std::vector<QVector> vrep_;
};

Polytope minkowski_sum(const Polytope& a, const Polytope& b);

// Rational polyhedral cone through the origin.
class Cone {
 public:
  static Cone from_generators(int dim, const std::vector<QVector>& gens);
  static Cone from_hrep(int dim, std::vector<QVector> normals);

  int dim() const { return dim_; }
  // Irredundant primitive generators (extreme rays), plus a lineality
  // basis when the cone is not pointed.
  const std::vector<ZVector>& generators() const { return rays_; }
  const std::vector<QVector>& lineality() const { return lineality_; }
  const std::vector<QVector>& hrep() const { return hrep_; }  // <n,x> >= 0
  const std::vector<QVector>& equalities() const { return eq_; }

  bool pointed() const { return lineality_.empty(); }
  bool contains(const QVector& x) const;

 private:
  Cone() = default;
  int dim_ = 0;
  std::vector<ZVector> rays_;
  std::vector<QVector> lineality_;
  std::vector<QVector> hrep_;
  std::vector<QVector> eq_;  // <n,x> == 0
};

// Exact parameter interval {t in [0,1] : x + t(y-x) in d}, or nullopt
// when the segment misses the cone.
std::optional<std::pair<Rat, Rat>> segment_cone_hits(const Cone& d,
                                                     const QVector& x,
                                                     const QVector& y);

}  // namespace adjring

#endif
