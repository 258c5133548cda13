#ifndef ADJRING_PWA_HPP
#define ADJRING_PWA_HPP

#include "adjring/polytope.hpp"

#include <vector>

namespace adjring {

struct AffineMap {
  QVector grad;
  Rat offset;  // x ↦ <grad,x> + offset
};

inline Rat apply(const AffineMap& m, const QVector& x) {
  return (m.grad.dot(x) + m.offset);
}

// Convex rational piecewise affine function: full-dimensional cells
// covering the domain with pairwise disjoint interiors, one affine map
// per cell, maps agreeing on shared faces.
struct PwaCell {
  Polytope cell;
  AffineMap map;
};

struct PiecewiseAffineFn {
  Polytope domain = Polytope::empty(0);
  std::vector<PwaCell> cells;
};

// Lower envelope F(x) = min{y : (x,y) in Q} of the lifted hull
// Q = conv{(x_i,f_i)} ∪ {(x_i,c)}. The samples must lie in p, satisfy
// |f_i| <= c, and p's affine hull must miss the origin. F is convex,
// rational, and F(x_i) <= f_i.
PiecewiseAffineFn lower_envelope_extension(
    const Polytope& p, const std::vector<std::pair<QVector, Rat>>& samples,
    const Rat& c);

// Value at x; throws std::domain_error outside the domain.
Rat evaluate(const PiecewiseAffineFn& f, const QVector& x);

struct Decomposition {
  std::vector<PwaCell> cells;
  bool convex = true;
};

// Cell list plus a convexity certificate: every cell's map must stay
// below every other cell's map on that cell's vertices.
Decomposition decomposition(const PiecewiseAffineFn& f);

}  // namespace adjring

#endif
