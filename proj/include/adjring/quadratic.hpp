#ifndef ADJRING_QUADRATIC_HPP
#define ADJRING_QUADRATIC_HPP

#include "adjring/rational.hpp"

#include <stdexcept>

namespace adjring {

// Element a + b*sqrt(d) of a fixed real quadratic field, d a positive
// square-free integer. Mixed-d arithmetic is rejected: one irrational
// direction per experiment. Rationals embed with d=0 so they combine
// freely with any field.
class Quad {
 public:
  Quad() : a_(0), b_(0), d_(0) {}
  Quad(Rat a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT(runtime/explicit)
  Quad(long a) : a_(a), b_(0), d_(0) {}            // NOLINT(runtime/explicit)
  Quad(Rat a, Rat b, long d);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  long d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  // Only valid when is_rational().
  const Rat& rational() const;

  Quad operator-() const { return Quad(-a_, -b_, d_); }
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o);

  friend Quad operator+(Quad x, const Quad& y) { return x += y; }
  friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
  friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
  friend Quad operator/(Quad x, const Quad& y) { return x /= y; }

  // Exact sign of a + b*sqrt(d) under the real embedding sqrt(d) > 0.
  int sign() const;

  friend bool operator==(const Quad& x, const Quad& y) { return (x - y).sign() == 0; }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
  friend bool operator<(const Quad& x, const Quad& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Quad& x, const Quad& y) { return y < x; }
  friend bool operator<=(const Quad& x, const Quad& y) { return !(y < x); }
  friend bool operator>=(const Quad& x, const Quad& y) { return !(x < y); }

  // Largest integer n with n <= a + b*sqrt(d).
  Int floor() const;

  double to_double() const;

 private:
  void merge_field(const Quad& o);

  Rat a_, b_;
  long d_;  // 0 when the element is rational
};

inline Quad sqrt_of(long d) { return Quad(Rat(0), Rat(1), d); }

using QuadVector = Eigen::Matrix<Quad, Eigen::Dynamic, 1>;

Quad abs_quad(const Quad& x);
Quad sup_norm(const QuadVector& v);

}  // namespace adjring

namespace Eigen {

template <>
struct NumTraits<adjring::Quad> : GenericNumTraits<adjring::Quad> {
  typedef adjring::Quad Real;
  typedef adjring::Quad NonInteger;
  typedef adjring::Quad Nested;
  static inline Real epsilon() { return adjring::Quad(0); }
  static inline Real dummy_precision() { return adjring::Quad(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 300,
    MulCost = 400
  };
};

}  // namespace Eigen

#endif
