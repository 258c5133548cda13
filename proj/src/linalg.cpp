#include "adjring/linalg.hpp"

#include <stdexcept>

namespace adjring {

namespace {

// Row echelon with the fixed pivot rule: first row with a nonzero entry
// in the leftmost unresolved column. Returns pivot columns.
std::vector<int> echelon(QMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Rat inv = m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) /= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<QVector> solve_linear(const QMatrix& m, const QVector& b) {
  if (m.rows() != b.size())
    throw std::invalid_argument("solve_linear: row count does not match rhs size");
  QMatrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  std::vector<int> pivots = echelon(aug);
  // inconsistent iff a pivot lands in the rhs column
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  QVector x = QVector::Constant(m.cols(), Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k) x(pivots[k]) = aug(k, m.cols());
  return x;
}

int rank(const QMatrix& m) {
  QMatrix w = m;
  return static_cast<int>(echelon(w).size());
}

QMatrix null_space(const QMatrix& m) {
  QMatrix w = m;
  std::vector<int> pivots = echelon(w);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  QMatrix basis(n, n - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVector v = QVector::Constant(n, Rat(0));
    v(f) = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v(pivots[k]) = -w(k, f);
    basis.col(col++) = v;
  }
  return basis;
}

Int common_denominator(const QVector& v) {
  Int c = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), v(i).get_den_mpz_t());
  return c;
}

ZVector primitive(const QVector& v) {
  Int c = common_denominator(v);
  ZVector z(v.size());
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rat s = v(i) * Rat(c);
    z(i) = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z(i).get_mpz_t());
  }
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  for (Eigen::Index i = 0; i < v.size(); ++i) z(i) /= g;
  return z;
}

void hermite_normal_form(const ZMatrix& a, ZMatrix& h, ZMatrix& u) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  h = a;
  u = ZMatrix::Zero(cols, cols);
  for (Eigen::Index i = 0; i < cols; ++i) u(i, i) = 1;
  Eigen::Index pivot_col = 0;
  for (Eigen::Index r = 0; r < rows && pivot_col < cols; ++r) {
    // gcd out row r across columns pivot_col..cols-1
    while (true) {
      Eigen::Index jmin = -1;
      for (Eigen::Index j = pivot_col; j < cols; ++j) {
        if (h(r, j) == 0) continue;
        if (jmin < 0 || cmp(abs(h(r, jmin)), abs(h(r, j))) > 0) jmin = j;
      }
      if (jmin < 0) break;
      if (jmin != pivot_col) { h.col(jmin).swap(h.col(pivot_col)); u.col(jmin).swap(u.col(pivot_col)); }
      bool clean = true;
      for (Eigen::Index j = pivot_col + 1; j < cols; ++j) {
        if (h(r, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, pivot_col).get_mpz_t());
        h.col(j) -= (h.col(pivot_col) * q).eval();
        u.col(j) -= (u.col(pivot_col) * q).eval();
        if (h(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, pivot_col) != 0) {
      if (h(r, pivot_col) < 0) { h.col(pivot_col) *= Int(-1); u.col(pivot_col) *= Int(-1); }
      // reduce earlier columns against the pivot
      for (Eigen::Index j = 0; j < pivot_col; ++j) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, pivot_col).get_mpz_t());
        if (q != 0) {
          h.col(j) -= (h.col(pivot_col) * q).eval();
          u.col(j) -= (u.col(pivot_col) * q).eval();
        }
      }
      ++pivot_col;
    }
  }
}

Int det(const ZMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  ZMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

ZMatrix lattice_preimage(const ZMatrix& a, const ZMatrix& l) {
  // x with a*x in L  <=>  exists integer y : a*x - l*y = 0. The integer
  // kernel of B = [a | -l] projects onto the preimage lattice, and a
  // projection of a lattice is spanned by the projections of any basis.
  const Eigen::Index n = a.cols(), k = l.cols();
  ZMatrix big(a.rows(), n + k);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < n; ++j) big(i, j) = a(i, j);
    for (Eigen::Index j = 0; j < k; ++j) big(i, n + j) = -l(i, j);
  }
  ZMatrix bh, bu;
  hermite_normal_form(big, bh, bu);
  auto bh_col_zero = [&](Eigen::Index c) {
    for (Eigen::Index i = 0; i < bh.rows(); ++i)
      if (bh(i, c) != 0) return false;
    return true;
  };
  std::vector<Eigen::Index> kercols;
  for (Eigen::Index c = 0; c < bh.cols(); ++c)
    if (bh_col_zero(c)) kercols.push_back(c);
  ZMatrix xblock(n, static_cast<Eigen::Index>(kercols.size()));
  for (size_t c = 0; c < kercols.size(); ++c)
    xblock.col(static_cast<Eigen::Index>(c)) = bu.col(kercols[c]).head(n);
  ZMatrix h, u;
  hermite_normal_form(xblock, h, u);
  // nonzero columns of h form the basis
  auto col_nonzero = [&](Eigen::Index c) {
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      if (h(i, c) != 0) return true;
    return false;
  };
  Eigen::Index nz = 0;
  for (Eigen::Index c = 0; c < h.cols(); ++c)
    if (col_nonzero(c)) ++nz;
  ZMatrix basis(n, nz);
  Eigen::Index w = 0;
  for (Eigen::Index c = 0; c < h.cols(); ++c)
    if (col_nonzero(c)) basis.col(w++) = h.col(c);
  return basis;
}

ZMatrix complete_to_basis(const ZVector& v) {
  const Eigen::Index n = v.size();
  // Unimodular row reduction V*v = e1 via the gcd algorithm, then B = V^-1.
  ZVector w = v;
  ZMatrix vm = ZMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) vm(i, i) = 1;
  auto rowop = [&](Eigen::Index dst, Eigen::Index src, const Int& q) {
    w(dst) -= q * w(src);
    vm.row(dst) -= (vm.row(src) * q).eval();
  };
  while (true) {
    Eigen::Index p = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (w(i) == 0) continue;
      if (p < 0 || cmp(abs(w(i)), abs(w(p))) < 0) p = i;
    }
    if (p < 0) throw std::invalid_argument("complete_to_basis: zero vector");
    bool done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == p || w(i) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), w(i).get_mpz_t(), w(p).get_mpz_t());
      rowop(i, p, q);
      if (w(i) != 0) done = false;
    }
    if (done) {
      if (p != 0) { w.row(0).swap(w.row(p)); vm.row(0).swap(vm.row(p)); }
      if (w(0) < 0) { w(0) = -w(0); vm.row(0) *= Int(-1); }
      break;
    }
  }
  if (cmp(w(0), 1) != 0)
    throw std::invalid_argument("complete_to_basis: vector not primitive");
  // invert the unimodular vm exactly
  QMatrix q(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) q(i, j) = Rat(vm(i, j));
  ZMatrix inv(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    QVector e = QVector::Constant(n, Rat(0));
    e(c) = 1;
    QVector x = *solve_linear(q, e);
    for (Eigen::Index i = 0; i < n; ++i) inv(i, c) = x(i).get_num();
  }
  return inv;
}

}  // namespace adjring
