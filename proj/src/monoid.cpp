#include "adjring/monoid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace adjring {

namespace {

bool is_zero(const ZVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

bool lex_less(const ZVector& a, const ZVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

// Every integer point of the box [lo,hi], in lex order.
std::vector<ZVector> box_points(const ZVector& lo, const ZVector& hi) {
  const Eigen::Index n = lo.size();
  for (Eigen::Index i = 0; i < n; ++i)
    if (lo(i) > hi(i)) return {};
  std::vector<ZVector> out;
  ZVector cur = lo;
  for (;;) {
    out.push_back(cur);
    Eigen::Index i = n - 1;
    while (i >= 0 && cur(i) == hi(i)) {
      cur(i) = lo(i);
      --i;
    }
    if (i < 0) break;
    cur(i) += 1;
  }
  return out;
}

}  // namespace

QVector default_grading(int dim) {
  return QVector::Constant(dim, Rat(1));
}

Rat degree_of(const ZVector& x, const QVector& grading) {
  Rat d = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) d += grading(i) * Rat(x(i));
  return d;
}

bool graded_lex_less(const ZVector& a, const ZVector& b,
                     const QVector& grading) {
  Rat da = degree_of(a, grading), db = degree_of(b, grading);
  if (da != db) return da < db;
  return lex_less(a, b);
}

std::vector<ZVector> lattice_points(const Polytope& p) {
  if (p.is_empty()) return {};
  const int n = p.dim();
  ZVector lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    Rat mn = p.vrep()[0](j), mx = mn;
    for (const QVector& v : p.vrep()) {
      if (v(j) < mn) mn = v(j);
      if (v(j) > mx) mx = v(j);
    }
    lo(j) = ceil_int(mn);
    hi(j) = floor_int(mx);
  }
  std::vector<ZVector> out;
  for (const ZVector& x : box_points(lo, hi))
    if (p.contains(to_rat(x))) out.push_back(x);
  return out;
}

HilbertBasis hilbert_basis(const Cone& c, const QVector& grading) {
  if (!c.pointed())
    throw std::domain_error(
        "hilbert_basis: cone contains a line, minimal basis not unique");
  const int n = c.dim();
  HilbertBasis hb{c, {}};
  if (c.generators().empty()) return hb;

  // Every Hilbert basis element lies in the zonotope spanned by the
  // primitive ray generators, so its bounding box suffices as the
  // candidate pool.
  ZVector lo = ZVector::Constant(n, Int(0));
  ZVector hi = ZVector::Constant(n, Int(0));
  for (const ZVector& r : c.generators()) {
    for (int j = 0; j < n; ++j) {
      if (r(j) < 0)
        lo(j) += r(j);
      else
        hi(j) += r(j);
    }
  }
  std::vector<ZVector> cand;
  for (const ZVector& x : box_points(lo, hi))
    if (!is_zero(x) && c.contains(to_rat(x))) cand.push_back(x);

  // h is reducible iff h - c lands back in the cone for some candidate c
  // (an irreducible summand of h is itself a candidate).
  for (const ZVector& h : cand) {
    bool reducible = false;
    for (const ZVector& x : cand) {
      ZVector rest = h - x;
      if (is_zero(rest)) continue;
      if (c.contains(to_rat(rest))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.elements.push_back(h);
  }
  std::sort(hb.elements.begin(), hb.elements.end(),
            [&](const ZVector& a, const ZVector& b) {
              return graded_lex_less(a, b, grading);
            });
  return hb;
}

HilbertBasis hilbert_basis(const Cone& c) {
  return hilbert_basis(c, default_grading(c.dim()));
}

AffineMonoid veronese_submonoid(const AffineMonoid& s, const ZMatrix& lat) {
  const int n = s.rank;
  if (lat.rows() != n)
    throw std::invalid_argument("veronese_submonoid: lattice rank mismatch");
  ZMatrix h, u;
  hermite_normal_form(lat, h, u);
  std::vector<Eigen::Index> basis_cols;
  for (Eigen::Index c = 0; c < h.cols(); ++c) {
    bool zero = true;
    for (Eigen::Index r = 0; r < h.rows(); ++r)
      if (h(r, c) != 0) zero = false;
    if (!zero) basis_cols.push_back(c);
  }
  const int r = static_cast<int>(basis_cols.size());
  ZMatrix b(n, r);
  for (int c = 0; c < r; ++c) b.col(c) = h.col(basis_cols[c]);

  std::vector<QVector> gens;
  for (const ZVector& g : s.generators) gens.push_back(to_rat(g));
  Cone cone = Cone::from_generators(n, gens);

  // Pull the cone back to the coordinates of the sublattice basis.
  QMatrix bq(n, r);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < r; ++c) bq(i, c) = Rat(b(i, c));
  std::vector<QVector> normals;
  for (const QVector& a : cone.hrep())
    normals.push_back((a.transpose() * bq).transpose());
  for (const QVector& e : cone.equalities()) {
    QVector w = (e.transpose() * bq).transpose();
    normals.push_back(w);
    normals.push_back(QVector(-w));
  }
  HilbertBasis hb = hilbert_basis(Cone::from_hrep(r, normals));

  AffineMonoid out;
  out.rank = n;
  out.finite_index = (r == n);
  for (const ZVector& y : hb.elements) out.generators.push_back(b * y);
  std::sort(out.generators.begin(), out.generators.end(), lex_less);
  return out;
}

namespace {

struct DecomposeSearch {
  const std::vector<ZVector>* gens;
  const QVector* grading;
  std::set<std::pair<std::vector<Int>, size_t>> dead;
  std::vector<ZVector> picked;

  bool run(const ZVector& x, size_t start) {
    if (is_zero(x)) return true;
    std::vector<Int> key(x.data(), x.data() + x.size());
    if (dead.count({key, start})) return false;
    for (size_t i = start; i < gens->size(); ++i) {
      ZVector rest = x - (*gens)[i];
      if (degree_of(rest, *grading) < 0) continue;
      picked.push_back((*gens)[i]);
      if (run(rest, i)) return true;
      picked.pop_back();
    }
    dead.insert({std::move(key), start});
    return false;
  }
};

}  // namespace

std::optional<std::vector<ZVector>> decompose(const ZVector& e,
                                              const std::vector<ZVector>& gens,
                                              const QVector& grading) {
  for (const ZVector& g : gens)
    if (degree_of(g, grading) <= 0)
      throw std::invalid_argument("decompose: grading not positive on gens");
  std::vector<ZVector> sorted = gens;
  std::sort(sorted.begin(), sorted.end(),
            [&](const ZVector& a, const ZVector& b) {
              return graded_lex_less(a, b, grading);
            });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  DecomposeSearch s{&sorted, &grading, {}, {}};
  if (!s.run(e, 0)) return std::nullopt;
  return s.picked;
}

std::optional<std::vector<ZVector>> decompose(const ZVector& e,
                                              const std::vector<ZVector>& gens) {
  return decompose(e, gens, default_grading(static_cast<int>(e.size())));
}

GenerationCheck is_generated(const Cone& c, const Rat& bound,
                             const std::vector<ZVector>& gens,
                             const QVector& grading) {
  std::vector<HalfSpace> hs;
  for (const QVector& a : c.hrep()) hs.push_back({a, Rat(0)});
  for (const QVector& e : c.equalities()) {
    hs.push_back({e, Rat(0)});
    hs.push_back({QVector(-e), Rat(0)});
  }
  hs.push_back({QVector(-grading), Rat(-bound)});
  Polytope slice = Polytope::from_hrep(c.dim(), hs);

  std::vector<ZVector> pts = lattice_points(slice);
  std::sort(pts.begin(), pts.end(), [&](const ZVector& a, const ZVector& b) {
    return graded_lex_less(a, b, grading);
  });
  for (const ZVector& x : pts) {
    if (is_zero(x)) continue;
    if (!decompose(x, gens, grading)) return {false, x};
  }
  return {true, std::nullopt};
}

GenerationCheck is_generated(const Cone& c, const Rat& bound,
                             const std::vector<ZVector>& gens) {
  return is_generated(c, bound, gens, default_grading(c.dim()));
}

}  // namespace adjring
