#include "adjring/rational.hpp"

namespace adjring {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat x;
  if (x.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  x.canonicalize();
  if (x.get_den() <= 0)
    throw std::invalid_argument("nonpositive denominator: " + s);
  return x;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

Rat sup_norm(const QVector& v) {
  Rat m = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rat a = abs_rat(v(i));
    if (a > m) m = a;
  }
  return m;
}

}  // namespace adjring
