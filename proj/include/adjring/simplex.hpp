#ifndef ADJRING_SIMPLEX_HPP
#define ADJRING_SIMPLEX_HPP

#include "adjring/rational.hpp"

#include <optional>
#include <vector>

namespace adjring {

// One linear condition <normal, x> >= offset (or == offset).
struct LinCon {
  QVector normal;
  Rat offset;
  bool equality = false;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Rat value;   // objective value at the optimum
  QVector point;
};

// Exact rational LP: minimize <c, x> subject to the given conditions.
// Dense two-phase simplex with Bland's rule; deterministic and terminating.
LpResult lp_minimize(const QVector& c, const std::vector<LinCon>& cons);
LpResult lp_maximize(const QVector& c, const std::vector<LinCon>& cons);

// Feasibility of the system (phase one only).
bool lp_feasible(const std::vector<LinCon>& cons, int dim);

}  // namespace adjring

#endif
