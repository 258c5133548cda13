#ifndef ADJRING_MONOID_HPP
#define ADJRING_MONOID_HPP

#include "adjring/polytope.hpp"

#include <optional>
#include <vector>

namespace adjring {

// Unique minimal generating set of cone∩ℤᴺ for a pointed rational cone.
struct HilbertBasis {
  Cone cone;
  std::vector<ZVector> elements;
};

struct AffineMonoid {
  std::vector<ZVector> generators;
  int rank = 0;
  bool finite_index = true;
};

// Degree of a lattice point against a grading functional; the default
// grading is all-ones. Monoids here live in divisor space, which has no
// canonical grading, so callers may supply their own.
QVector default_grading(int dim);
Rat degree_of(const ZVector& x, const QVector& grading);

// Graded-lex order: by degree, ties broken lexicographically.
bool graded_lex_less(const ZVector& a, const ZVector& b,
                     const QVector& grading);

// All lattice points of a (possibly empty) polytope, sorted lex.
std::vector<ZVector> lattice_points(const Polytope& p);

// Hilbert basis of c∩ℤᴺ. Throws std::domain_error on a non-pointed cone
// (the minimal basis is not unique there). Elements sorted graded-lex.
HilbertBasis hilbert_basis(const Cone& c, const QVector& grading);
HilbertBasis hilbert_basis(const Cone& c);

// Generators of s∩l where l is the sublattice of ℤʳ spanned by the
// columns of lat. Computed as a Hilbert basis in the coordinates of l.
// finite_index is set when l has full rank in ℤʳ.
AffineMonoid veronese_submonoid(const AffineMonoid& s, const ZMatrix& lat);

// One decomposition of e as an ℕ-combination of gens (listed with
// multiplicity, graded-lex order), or nullopt. Deterministic: greedy in
// graded-lex order with backtracking.
std::optional<std::vector<ZVector>> decompose(const ZVector& e,
                                              const std::vector<ZVector>& gens,
                                              const QVector& grading);
std::optional<std::vector<ZVector>> decompose(const ZVector& e,
                                              const std::vector<ZVector>& gens);

struct GenerationCheck {
  bool generated = true;
  std::optional<ZVector> counterexample;
};

// Checks that every lattice point of c with degree ≤ bound decomposes
// over gens. The graded slice {x in c : degree ≤ bound} must be bounded.
GenerationCheck is_generated(const Cone& c, const Rat& bound,
                             const std::vector<ZVector>& gens,
                             const QVector& grading);
GenerationCheck is_generated(const Cone& c, const Rat& bound,
                             const std::vector<ZVector>& gens);

}  // namespace adjring

#endif
