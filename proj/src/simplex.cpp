#include "adjring/simplex.hpp"

#include <stdexcept>

namespace adjring {

namespace {

// Tableau simplex in standard form: minimize c.z with A z = b, z >= 0.
// Bland's rule throughout.
class Tableau {
 public:
  Tableau(const QMatrix& a, const QVector& b, const QVector& c)
      : m_(a.rows()), n_(a.cols()), t_(a.rows() + 1, a.cols() + 1), basis_(a.rows()) {
    for (Eigen::Index i = 0; i < m_; ++i) {
      for (Eigen::Index j = 0; j < n_; ++j) t_(i, j) = a(i, j);
      t_(i, n_) = b(i);
    }
    for (Eigen::Index j = 0; j < n_; ++j) t_(m_, j) = c(j);
    t_(m_, n_) = 0;
  }

  void set_basis(const std::vector<Eigen::Index>& basis) {
    basis_ = basis;
    for (Eigen::Index i = 0; i < m_; ++i) price_out(i, basis_[i]);
  }

  // Returns false on unboundedness.
  bool iterate() {
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < n_; ++j)
        if (t_(m_, j) < 0) { enter = j; break; }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (t_(i, enter) <= 0) continue;
        if (leave < 0) { leave = i; continue; }
        Rat cur = t_(i, n_) / t_(i, enter);
        Rat best = t_(leave, n_) / t_(leave, enter);
        if (cur < best || (cur == best && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Rat objective() const { return -t_(m_, n_); }

  QVector solution() const {
    QVector z = QVector::Constant(n_, Rat(0));
    for (Eigen::Index i = 0; i < m_; ++i) z(basis_[i]) = t_(i, n_);
    return z;
  }

  const std::vector<Eigen::Index>& basis() const { return basis_; }

  // Drives a variable out of the basis if possible (used to purge
  // artificials after phase one). Returns false when the row is all zero
  // over the allowed columns.
  bool force_out(Eigen::Index row, Eigen::Index max_col) {
    for (Eigen::Index j = 0; j < max_col; ++j) {
      if (t_(row, j) != 0) { pivot(row, j); return true; }
    }
    return false;
  }

  // Keeps only the listed rows, then truncates to new_n columns and
  // installs a fresh cost row.
  void drop_rows_and_columns(const std::vector<Eigen::Index>& keep,
                             Eigen::Index new_n, const QVector& cost) {
    const Eigen::Index km = static_cast<Eigen::Index>(keep.size());
    QMatrix nt(km + 1, new_n + 1);
    std::vector<Eigen::Index> nb(km);
    for (Eigen::Index i = 0; i < km; ++i) {
      for (Eigen::Index j = 0; j < new_n; ++j) nt(i, j) = t_(keep[i], j);
      nt(i, new_n) = t_(keep[i], n_);
      nb[i] = basis_[keep[i]];
    }
    for (Eigen::Index j = 0; j < new_n; ++j) nt(km, j) = cost(j);
    nt(km, new_n) = 0;
    t_ = std::move(nt);
    m_ = km;
    n_ = new_n;
    basis_ = std::move(nb);
    for (Eigen::Index i = 0; i < m_; ++i) price_out(i, basis_[i]);
  }

  Eigen::Index rows() const { return m_; }

 private:
  void pivot(Eigen::Index r, Eigen::Index c) {
    Rat p = t_(r, c);
    for (Eigen::Index j = 0; j <= n_; ++j) t_(r, j) /= p;
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == r || t_(i, c) == 0) continue;
      Rat f = t_(i, c);
      for (Eigen::Index j = 0; j <= n_; ++j) t_(i, j) -= f * t_(r, j);
    }
    basis_[r] = c;
  }

  void price_out(Eigen::Index row, Eigen::Index col) {
    if (t_(m_, col) == 0) return;
    Rat f = t_(m_, col);
    for (Eigen::Index j = 0; j <= n_; ++j) t_(m_, j) -= f * t_(row, j);
  }

  Eigen::Index m_, n_;
  QMatrix t_;
  std::vector<Eigen::Index> basis_;
};

LpResult solve(const QVector& c, const std::vector<LinCon>& cons, bool maximize) {
  const Eigen::Index dim = c.size();
  const Eigen::Index m = static_cast<Eigen::Index>(cons.size());
  Eigen::Index slacks = 0;
  for (const LinCon& con : cons)
    if (!con.equality) ++slacks;
  // variables: x+ (dim), x- (dim), slacks, artificials (m)
  const Eigen::Index nv = 2 * dim + slacks;
  QMatrix a = QMatrix::Constant(m, nv + m, Rat(0));
  QVector b(m);
  Eigen::Index sl = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const LinCon& con = cons[i];
    if (con.normal.size() != dim)
      throw std::invalid_argument("lp: constraint dimension mismatch");
    int flip = con.offset < 0 ? -1 : 1;
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = flip * con.normal(j);
      a(i, dim + j) = -flip * con.normal(j);
    }
    if (!con.equality) {
      a(i, 2 * dim + sl) = flip * Rat(-1);  // <n,x> - s = b
      ++sl;
    }
    b(i) = flip * con.offset;
    a(i, nv + i) = 1;
  }
  // phase one
  QVector phase1 = QVector::Constant(nv + m, Rat(0));
  for (Eigen::Index i = 0; i < m; ++i) phase1(nv + i) = 1;
  Tableau t(a, b, phase1);
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = nv + i;
  t.set_basis(basis);
  t.iterate();  // phase one is bounded below by 0
  if (t.objective() != 0) return {LpStatus::Infeasible, Rat(0), QVector()};
  // purge artificials still in the basis
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    if (t.basis()[i] >= nv) t.force_out(i, nv);
  }
  // rows still carrying an artificial are redundant (zero over the real
  // columns) and get dropped together with the artificial columns
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < t.rows(); ++i)
    if (t.basis()[i] < nv) keep.push_back(i);
  // phase two
  QVector cost = QVector::Constant(nv, Rat(0));
  for (Eigen::Index j = 0; j < dim; ++j) {
    Rat cj = maximize ? Rat(-c(j)) : c(j);
    cost(j) = cj;
    cost(dim + j) = -cj;
  }
  t.drop_rows_and_columns(keep, nv, cost);
  if (!t.iterate()) return {LpStatus::Unbounded, Rat(0), QVector()};
  QVector z = t.solution();
  QVector x(dim);
  for (Eigen::Index j = 0; j < dim; ++j) x(j) = z(j) - z(dim + j);
  Rat val = maximize ? Rat(-t.objective()) : t.objective();
  return {LpStatus::Optimal, val, x};
}

}  // namespace

LpResult lp_minimize(const QVector& c, const std::vector<LinCon>& cons) {
  return solve(c, cons, false);
}

LpResult lp_maximize(const QVector& c, const std::vector<LinCon>& cons) {
  return solve(c, cons, true);
}

bool lp_feasible(const std::vector<LinCon>& cons, int dim) {
  QVector c = QVector::Constant(dim, Rat(0));
  return solve(c, cons, false).status == LpStatus::Optimal;
}

}  // namespace adjring
