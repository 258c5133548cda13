#ifndef ADJRING_TORIC_HPP
#define ADJRING_TORIC_HPP

#include "adjring/monoid.hpp"
#include "adjring/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adjring {

// Smooth complete (projective) toric testbed, dimension <= 3. Divisors
// are torus-invariant: one rational coefficient per ray.
struct Fan {
  int dim = 0;
  std::vector<ZVector> rays;
  std::vector<std::vector<int>> max_cones;
};

using TorusDivisor = QVector;

Fan fan_p1();
Fan fan_p2();
Fan fan_p1xp1();
Fan fan_hirzebruch(int a);  // a <= 3
Fan fan_del_pezzo(int k);   // blowup of P2 in k <= 3 invariant points
Fan fan_p3();
// Lookup by name: P1, P2, P1xP1, F0..F3, dP1..dP3, P3.
Fan fan_preset(const std::string& name);

struct FanReport {
  bool smooth = false;
  bool complete = false;
  bool projective = false;
  std::vector<Int> determinants;                 // one per maximal cone
  std::vector<std::vector<int>> unpaired_facets;  // facets not shared twice
  std::optional<QVector> support_function;  // ample coefficients if projective
};

// Certificates: smoothness by determinants, completeness by facet
// pairing plus a direction-cover sample, projectivity by LP feasibility
// of a strictly convex support function. Throws std::invalid_argument
// on malformed input (non-primitive ray, repeated ray or cone).
FanReport validate_fan(const Fan& f);

// -sum of all invariant prime divisors.
TorusDivisor canonical_divisor(const Fan& f);

bool is_integral(const TorusDivisor& d);
TorusDivisor floor_div(const TorusDivisor& d);

// P_D = {u : <u,v_rho> >= -a_rho for all rays}; may be empty.
Polytope section_polytope(const Fan& f, const TorusDivisor& d);

struct LinearSystem {
  TorusDivisor divisor;
  std::vector<ZVector> points;  // P_D cap M, sorted lex; h0 = size
  TorusDivisor fixed_part;      // whole divisor when the system is empty
  TorusDivisor mobile_part;
};

// Requires d integral (floor Q-divisors first).
LinearSystem global_sections(const Fan& f, const TorusDivisor& d);

// Cones (as sorted ray index sets) whose orbit closures lie in Bs|d|,
// minimal under inclusion. Throws std::domain_error when |d| is empty.
std::vector<std::vector<int>> base_locus(const Fan& f, const TorusDivisor& d);

struct StableBaseLocus {
  bool everything = false;  // |d|_R empty: B(d) = X
  std::vector<std::vector<int>> cones;
  Int q0{1};  // B(d) = Bs|q*d| for every multiple q of q0
};

StableBaseLocus stable_base_locus(const Fan& f, const TorusDivisor& d);

struct Positivity {
  bool pseudoeffective = false;
  bool big = false;
  bool nef = false;
  bool ample = false;
};

Positivity positivity(const Fan& f, const TorusDivisor& d);

struct ZariskiData {
  QVector sigma;  // sigma_rho(d) per ray
  TorusDivisor n_sigma;
  TorusDivisor positive_part;  // d - n_sigma
};

// Nakayama's sigma decomposition. The limit eps->0+ of o_rho(d+eps*a)
// is taken exactly: the value is piecewise linear in eps, so halving
// eps until three consecutive samples are collinear pins down the
// linear piece through 0. Throws std::domain_error when d is not
// pseudo-effective, std::invalid_argument when a is not ample.
ZariskiData sigma_decomposition(const Fan& f, const TorusDivisor& d,
                                const TorusDivisor& a);

struct StarFan {
  Fan fan;                      // fan of S in N/Zv_s
  int s = -1;                   // the distinguished ray in the parent
  std::vector<int> ray_origin;  // parent ray index per star ray
  ZMatrix proj;    // (n-1) x n projection N -> N/Zv_s
  ZMatrix mbasis;  // n x (n-1) basis of v_s-perp cap M
};

// Star fan of the invariant prime divisor of ray s, with the fixed
// lattice identifications used by restrict_system.
StarFan star_restriction(const Fan& f, int s);

struct RestrictedSystem {
  bool zero = true;             // S contained in Bs|d|
  std::vector<ZVector> points;  // tight lattice points in M(S) coordinates
  QVector fixed_part;           // per star ray; min tightness over points
  StarFan star;
};

// Image of H0(X,d) on the prime divisor S of ray s. The basepoint for
// the M(S) coordinates is the graded-lex-least tight lattice point.
RestrictedSystem restrict_system(const Fan& f, const TorusDivisor& d, int s);

struct AdjointScenario {
  Fan fan;
  int s = -1;           // distinguished ray, not in v
  std::vector<int> v;   // ray indices spanning V
  TorusDivisor a;       // ample
};

struct AdjointPolytopes {
  Polytope l = Polytope::empty(0);  // the box 0 <= b_i <= 1
  Polytope e = Polytope::empty(0);  // {b in l : K+A+B effective}
  Polytope b = Polytope::empty(0);  // {b in l : sigma_S(K+S+A+B) = 0}
};

// The three polytopes in b-space (dimension |v|). e is the shadow of
// the (b,u) feasibility polytope; b uses the two-slice characterization
// of the parametric tight-section polytope in (b,eps,u): by convexity
// and monotonicity of eps -> o_S(D+eps*A), sigma_S vanishes exactly
// when both the eps=0 and eps=1 slices of the shadow contain b.
AdjointPolytopes adjoint_polytopes(const AdjointScenario& sc);

struct PhiResult {
  QVector value;  // divisor on S, per star ray
  Int k0{1};      // finite case: the m used; asymptotic: stabilizing k0
  StarFan star;
};

// Phi_m(b) = b|S - b|S wedge (1/m)Fix|m(K+S+A+B)|_S, exact.
PhiResult phi(const AdjointScenario& sc, const QVector& b, const Int& m);
// The limit function using the real section polytope of K+S+A+B.
PhiResult phi_asymptotic(const AdjointScenario& sc, const QVector& b);

}  // namespace adjring

#endif
