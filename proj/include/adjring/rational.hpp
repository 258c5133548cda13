#ifndef ADJRING_RATIONAL_HPP
#define ADJRING_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 3,
    AddCost = 50,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace adjring {

// Exact rational scalar. mpq_class keeps the canonical form invariant
// (reduced fraction, positive denominator) on every operation.
using Rat = mpq_class;
using Int = mpz_class;

using QVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using QMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using ZVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using ZMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Canonicalizing constructor: reduced fraction, positive denominator.
// The two-argument mpq_class constructor alone does not canonicalize.
inline Rat rat(long num, long den = 1) {
  Rat x(num, den);
  x.canonicalize();
  return x;
}

// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

// "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& x);

inline Int floor_int(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

inline Int ceil_int(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

inline Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Sup-norm of a vector of rationals: max |x_i|.
Rat sup_norm(const QVector& v);

}  // namespace adjring

#endif
