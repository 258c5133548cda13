#ifndef ADJRING_LINALG_HPP
#define ADJRING_LINALG_HPP

#include "adjring/rational.hpp"

#include <optional>
#include <vector>

namespace adjring {

// Solves m*x = b exactly by Gaussian elimination with a fixed pivot rule
// (first row with a nonzero entry in the leftmost unresolved column).
// Returns nullopt when the system is inconsistent.
// Throws std::invalid_argument on a row/size mismatch.
std::optional<QVector> solve_linear(const QMatrix& m, const QVector& b);

// Rank of a rational matrix.
int rank(const QMatrix& m);

// Basis of the null space {x : m*x = 0}, as matrix columns.
QMatrix null_space(const QMatrix& m);

// Least positive integer c with c*v integral. Returns 1 for the zero vector.
Int common_denominator(const QVector& v);

// v scaled to a primitive integer vector with the same direction.
// v must be nonzero.
ZVector primitive(const QVector& v);

inline QVector to_rat(const ZVector& v) {
  QVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
  return r;
}

// Hermite normal form: returns H (column-style, lower triangular) and a
// unimodular U with a*U = H. Columns of H span the same lattice as a's.
void hermite_normal_form(const ZMatrix& a, ZMatrix& h, ZMatrix& u);

// Determinant of a square integer matrix (Bareiss).
Int det(const ZMatrix& a);

// Basis of the lattice {x in Z^n : a*x in image_Z(l)}, where l's columns
// generate a finite-index sublattice of Z^m and a is an m x n integer
// matrix. Used for Veronese submonoids and restriction lattices.
ZMatrix lattice_preimage(const ZMatrix& a, const ZMatrix& l);

// Completes the primitive vector v to a Z-basis of Z^n; returns a
// unimodular matrix whose first column is v.
ZMatrix complete_to_basis(const ZVector& v);

}  // namespace adjring

#endif
