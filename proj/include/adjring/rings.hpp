#ifndef ADJRING_RINGS_HPP
#define ADJRING_RINGS_HPP

#include "adjring/pwa.hpp"
#include "adjring/toric.hpp"

#include <optional>
#include <vector>

namespace adjring {

// Multigraded section ring R(X; D_1..D_l): the piece at multidegree m
// is H0(X, floor(sum m_i D_i)), with monomial basis the lattice points
// of the floored section polytope. The grading monoid is N^l by default
// or a finitely generated submonoid via its generators.
struct SectionRing {
  Fan fan;
  std::vector<TorusDivisor> divisors;
  AffineMonoid grading;
};

SectionRing section_ring(Fan f, std::vector<TorusDivisor> divisors);

struct Monomial {
  ZVector deg;    // multidegree in the grading monoid
  ZVector point;  // lattice point of the floored section polytope
};

bool operator==(const Monomial& a, const Monomial& b);

struct GeneratorSet {
  std::vector<Monomial> elements;
  Rat bound{0};         // total degree searched
  bool verdict = false;  // see the producing operation
};

// Grading-monoid elements with total degree <= bound, sorted by
// (degree, lex).
std::vector<ZVector> multidegrees_up_to(const SectionRing& r, const Rat& bound);

// Monomial basis at m; throws std::invalid_argument when m is outside
// the grading monoid.
std::vector<ZVector> graded_piece(const SectionRing& r, const ZVector& m);

// Greedy generator search by total degree. verdict reports saturation:
// no new generators appeared at degrees beyond bound/2.
GeneratorSet minimal_generators(const SectionRing& r, const Rat& bound);

struct GenerationVerdict {
  bool generated = true;
  std::optional<Monomial> counterexample;
};

// Exhaustive decomposition of every monomial of total degree <= bound.
GenerationVerdict verify_generation(const SectionRing& r,
                                    const std::vector<Monomial>& gens,
                                    const Rat& bound);

struct RestrictedRing {
  SectionRing base;
  int s = -1;
};

RestrictedRing restricted_ring(const SectionRing& r, int s);
// res_S of the piece at m (zero system iff S is in that base locus).
RestrictedSystem restricted_piece(const RestrictedRing& rr, const ZVector& m);

// Subring graded by (grading monoid) cap l. Throws std::invalid_argument
// unless l has finite index.
SectionRing veronese_ring(const SectionRing& r, const ZMatrix& l);

// One piece of the Cox-style descent decomposition S = union S_j.
struct CoxPiece {
  int s = -1;                        // ray index of S_j
  AffineMonoid monoid;               // S_j inside the grading lattice
  Monomial sigma;                    // the canonical section of S_j
  std::vector<Monomial> restricted_gens;  // lifted generators of res_{S_j}
};

struct CoxHypothesisError : std::domain_error {
  explicit CoxHypothesisError(ZVector w)
      : std::domain_error("cox descent: hypothesis (i) fails"),
        witness(std::move(w)) {}
  ZVector witness;  // the multidegree alpha violating alpha - S_j effective
};

// The descent of the finite generation proof, monomial-level: base set =
// all monomials of degree <= m_threshold, the sigma_j, and the lifted
// restricted generators; hypothesis (i) is machine-checked on monoid
// elements just above the threshold, and the verdict is
// verify_generation at verify_bound.
GeneratorSet cox_descent_generators(const SectionRing& r,
                                    const std::vector<CoxPiece>& pieces,
                                    const Rat& m_threshold,
                                    const Rat& verify_bound);

struct FixFunction {
  // One function per ray, over p lifted to {last coordinate = 1}:
  // evaluate at (D, 1).
  std::vector<PiecewiseAffineFn> per_ray;
  std::optional<Int> k;  // uniform k of the multiple formula, if found
};

// mult_Gamma Fix(D) = min of the Gamma-tightness over the real section
// polytope P_D, fitted exactly as a piecewise affine function of D in p.
// k is the least k <= k_max with Fix(D) = (1/m)Fix|mD| at every tested
// rational D in p, for all m <= 60 divisible by k with mD integral.
// Throws std::domain_error when a vertex of p has empty |D|.
FixFunction fix_function(const Fan& f, const Polytope& p,
                         const Int& k_max = Int(120));

Rat evaluate_fix(const FixFunction& ff, int ray, const QVector& d);

}  // namespace adjring

#endif
