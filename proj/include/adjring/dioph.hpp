#ifndef ADJRING_DIOPH_HPP
#define ADJRING_DIOPH_HPP

#include "adjring/polytope.hpp"

#include <vector>

namespace adjring {

struct ConvergentList {
  std::vector<Rat> values;
  bool finite = false;  // input was rational and the expansion ended
};

// First `count` continued-fraction convergents of alpha. Consecutive
// convergents bracket alpha on alternating sides. A rational alpha has a
// finite expansion; the list then stops early and is flagged.
ConvergentList convergents(const Quad& alpha, int count);

struct ApproxPoint {
  QVector x;
  Int k;        // divisible by the requested k; (k_i/k)*x_i is integral
  Quad weight;  // positive; weights sum to 1 and combine to the target
};

struct ApproximationResult {
  std::vector<ApproxPoint> points;
};

// Rational approximations x_i of x inside p: each x_i lies in the
// minimal face of p containing x, satisfies the sup-norm bound
// ‖x−x_i‖ < eps/k_i, and x is a convex combination of the x_i.
// A rational x yields the single-point result with zero error.
ApproximationResult approximate_in_polytope(const Polytope& p,
                                            const QuadVector& x, const Int& k,
                                            const Rat& eps);

}  // namespace adjring

#endif
