#include "adjring/quadratic.hpp"

#include <cmath>

namespace adjring {

namespace {

bool square_free(long d) {
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

}  // namespace

Quad::Quad(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_ == 0) {
    d_ = 0;
    return;
  }
  if (d_ <= 0) throw std::invalid_argument("quadratic radicand must be positive");
  if (d_ == 1 || !square_free(d_))
    throw std::invalid_argument("quadratic radicand must be square-free and > 1");
}

const Rat& Quad::rational() const {
  if (!is_rational()) throw std::logic_error("Quad is irrational");
  return a_;
}

void Quad::merge_field(const Quad& o) {
  if (d_ == 0) {
    d_ = o.d_;
  } else if (o.d_ != 0 && o.d_ != d_) {
    throw std::invalid_argument("mixed quadratic fields");
  }
}

Quad& Quad::operator+=(const Quad& o) {
  merge_field(o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_ == 0) d_ = 0;
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  merge_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_ == 0) d_ = 0;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  merge_field(o);
  long d = d_ == 0 ? o.d_ : d_;
  Rat na = a_ * o.a_ + b_ * o.b_ * d;
  Rat nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = (b_ == 0) ? 0 : d;
  return *this;
}

Quad& Quad::operator/=(const Quad& o) {
  merge_field(o);
  long d = d_ == 0 ? o.d_ : d_;
  Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
  if (norm == 0) {
    if (o.a_ == 0 && o.b_ == 0) throw std::domain_error("division by zero");
    // a^2 = b^2 d with b != 0 would make sqrt(d) rational
    throw std::logic_error("degenerate quadratic divisor");
  }
  // multiply by the conjugate
  Quad conj(o.a_, -o.b_, d);
  *this *= conj;
  a_ /= norm;
  b_ /= norm;
  if (b_ == 0) d_ = 0;
  return *this;
}

int Quad::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 against b^2 d
  Rat lhs = a_ * a_;
  Rat rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  if (c == 0) throw std::logic_error("sqrt(d) rational; d not square-free");
  return c > 0 ? sa : sb;
}

Int Quad::floor() const {
  if (is_rational()) return floor_int(a_);
  // Estimate with 256-bit floats, then fix up exactly.
  mpf_class fa(a_, 256), fb(b_, 256), fd(d_, 256);
  mpf_class v = fa + fb * sqrt(fd);
  mpz_class n;
  mpz_set_f(n.get_mpz_t(), v.get_mpf_t());
  while (*this < Quad(Rat(n))) n -= 1;
  while (*this >= Quad(Rat(n + 1))) n += 1;
  return n;
}

double Quad::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

Quad abs_quad(const Quad& x) { return x.sign() < 0 ? -x : x; }

Quad sup_norm(const QuadVector& v) {
  Quad m(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Quad a = abs_quad(v(i));
    if (m < a) m = a;
  }
  return m;
}

}  // namespace adjring
