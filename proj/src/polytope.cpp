#include "adjring/polytope.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

namespace adjring {

namespace {

bool lex_less(const QVector& a, const QVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    int c = cmp(a(i), b(i));
    if (c != 0) return c < 0;
  }
  return false;
}

bool lex_less_z(const ZVector& a, const ZVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    int c = cmp(a(i), b(i));
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<Rat> to_key(const ZVector& v) {
  std::vector<Rat> k(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) k[i] = Rat(v(i));
  return k;
}

Rat dot(const QVector& a, const QVector& b) { return a.dot(b); }

// Echelon-reduced deterministic basis of the span of the given vectors.
std::vector<QVector> canonical_basis(const std::vector<QVector>& vecs, int dim) {
  if (vecs.empty()) return {};
  QMatrix m(static_cast<Eigen::Index>(vecs.size()), dim);
  for (size_t i = 0; i < vecs.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vecs[i].transpose();
  // reuse rank-style elimination
  std::vector<QVector> out;
  std::vector<int> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < dim && r < m.rows(); ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Rat inv = m(r, c);
    m.row(r) /= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      m.row(i) -= m(i, c) * m.row(r);
    }
    pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  for (Eigen::Index i = 0; i < r; ++i) out.push_back(m.row(i).transpose());
  return out;
}

}  // namespace

DDResult double_description(int dim, const std::vector<QVector>& ineqs) {
  std::vector<QVector> lineality;
  for (int i = 0; i < dim; ++i) {
    QVector e = QVector::Constant(dim, Rat(0));
    e(i) = 1;
    lineality.push_back(e);
  }
  std::vector<QVector> rays;
  std::vector<QVector> processed;

  auto canonical = [&](const QVector& r) -> QVector {
    return to_rat(primitive(r));
  };

  auto dedupe = [&]() {
    std::set<std::vector<Rat>> seen;
    std::vector<QVector> out;
    for (const QVector& r : rays) {
      std::vector<Rat> key(r.size());
      for (Eigen::Index i = 0; i < r.size(); ++i) key[i] = r(i);
      if (seen.insert(key).second) out.push_back(r);
    }
    rays = std::move(out);
  };

  auto adjacent = [&](const QVector& r1, const QVector& r2) {
    std::vector<QVector> tight;
    for (const QVector& a : processed)
      if (dot(a, r1) == 0 && dot(a, r2) == 0) tight.push_back(a);
    int need = dim - static_cast<int>(lineality.size()) - 2;
    if (need < 0) return false;
    QMatrix m(static_cast<Eigen::Index>(tight.size()), dim);
    for (size_t i = 0; i < tight.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = tight[i].transpose();
    return rank(m) == need;
  };

  for (const QVector& a : ineqs) {
    if (static_cast<int>(a.size()) != dim)
      throw std::invalid_argument("double_description: dimension mismatch");
    bool zero = true;
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != 0) { zero = false; break; }
    if (zero) continue;

    Eigen::Index l0 = -1;
    for (size_t i = 0; i < lineality.size(); ++i)
      if (dot(a, lineality[i]) != 0) { l0 = static_cast<Eigen::Index>(i); break; }

    if (l0 >= 0) {
      QVector v0 = lineality[l0];
      Rat av0 = dot(a, v0);
      if (av0 < 0) { v0 = -v0; av0 = -av0; }
      std::vector<QVector> newlin;
      for (size_t i = 0; i < lineality.size(); ++i) {
        if (static_cast<Eigen::Index>(i) == l0) continue;
        newlin.push_back(lineality[i] - (dot(a, lineality[i]) / av0) * v0);
      }
      lineality = std::move(newlin);
      for (QVector& r : rays) {
        Rat ar = dot(a, r);
        if (ar != 0) r = canonical(r - (ar / av0) * v0);
      }
      rays.push_back(canonical(v0));
      dedupe();
    } else {
      std::vector<QVector> pos, zer, neg;
      for (const QVector& r : rays) {
        int s = sgn(dot(a, r));
        (s > 0 ? pos : s == 0 ? zer : neg).push_back(r);
      }
      std::vector<QVector> next = pos;
      next.insert(next.end(), zer.begin(), zer.end());
      for (const QVector& rp : pos)
        for (const QVector& rn : neg)
          if (adjacent(rp, rn))
            next.push_back(canonical(dot(a, rp) * rn - dot(a, rn) * rp));
      rays = std::move(next);
      dedupe();
    }
    processed.push_back(a);
  }

  DDResult res;
  res.lineality = canonical_basis(lineality, dim);
  for (const QVector& r : rays) res.rays.push_back(primitive(r));
  std::sort(res.rays.begin(), res.rays.end(), lex_less_z);
  return res;
}

// ---------------------------------------------------------------------------
// Polytope

Polytope Polytope::empty(int dim) {
  Polytope p;
  p.dim_ = dim;
  return p;
}

Polytope Polytope::from_vrep(int dim, std::vector<QVector> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return empty(dim);

  // facets = extreme rays of the polar cone {a : <a,(1,p)> >= 0}
  std::vector<QVector> gens;
  for (const QVector& p : pts) {
    QVector g(dim + 1);
    g(0) = 1;
    g.tail(dim) = p;
    gens.push_back(g);
  }
  DDResult dual = double_description(dim + 1, gens);

  Polytope poly;
  poly.dim_ = dim;
  // affine hull first, as paired opposite inequalities
  for (const QVector& l : dual.lineality) {
    QVector n = l.tail(dim);
    bool zero = true;
    for (Eigen::Index i = 0; i < n.size(); ++i)
      if (n(i) != 0) { zero = false; break; }
    if (zero) continue;
    Rat c = -l(0);
    poly.hrep_.push_back({n, c});
    poly.hrep_.push_back({QVector(-n), Rat(-c)});
  }
  std::vector<HalfSpace> facets;
  for (const ZVector& r : dual.rays) {
    QVector n(dim);
    bool zero = true;
    for (int i = 0; i < dim; ++i) {
      n(i) = Rat(r(i + 1));
      if (n(i) != 0) zero = false;
    }
    if (zero) continue;  // the trivial ray (1, 0)
    facets.push_back({n, Rat(-Rat(r(0)))});
  }
  std::sort(facets.begin(), facets.end(), [](const HalfSpace& a, const HalfSpace& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return a.offset < b.offset;
  });
  poly.hrep_.insert(poly.hrep_.end(), facets.begin(), facets.end());

  // extreme points: tight constraints span the whole space
  for (const QVector& p : pts) {
    std::vector<QVector> tight;
    for (const HalfSpace& h : poly.hrep_)
      if (dot(h.normal, p) == h.offset) tight.push_back(h.normal);
    QMatrix m(static_cast<Eigen::Index>(tight.size()), dim);
    for (size_t i = 0; i < tight.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = tight[i].transpose();
    if (rank(m) == dim) poly.vrep_.push_back(p);
  }
  return poly;
}

Polytope Polytope::from_hrep(int dim, std::vector<HalfSpace> hs) {
  // homogenize: (x0, x) with x0 >= 0 and <n,x> - c*x0 >= 0
  std::vector<QVector> ineqs;
  QVector e0 = QVector::Constant(dim + 1, Rat(0));
  e0(0) = 1;
  ineqs.push_back(e0);
  for (const HalfSpace& h : hs) {
    if (static_cast<int>(h.normal.size()) != dim)
      throw std::invalid_argument("from_hrep: dimension mismatch");
    QVector a(dim + 1);
    a(0) = -h.offset;
    a.tail(dim) = h.normal;
    ineqs.push_back(a);
  }
  DDResult dd = double_description(dim + 1, ineqs);
  if (!dd.lineality.empty())
    throw std::domain_error("from_hrep: set contains an affine line (unbounded)");
  std::vector<QVector> verts;
  for (const ZVector& r : dd.rays) {
    if (r(0) == 0) {
      bool zero = true;
      for (int i = 1; i <= dim; ++i)
        if (r(i) != 0) zero = false;
      if (!zero) throw std::domain_error("from_hrep: unbounded polyhedron");
      continue;
    }
    QVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Rat(r(i + 1)) / Rat(r(0));
    verts.push_back(v);
  }
  return from_vrep(dim, std::move(verts));
}

Polytope Polytope::box(const QVector& lo, const QVector& hi) {
  const int dim = static_cast<int>(lo.size());
  std::vector<HalfSpace> hs;
  for (int i = 0; i < dim; ++i) {
    QVector e = QVector::Constant(dim, Rat(0));
    e(i) = 1;
    hs.push_back({e, lo(i)});
    hs.push_back({QVector(-e), Rat(-hi(i))});
  }
  return from_hrep(dim, std::move(hs));
}

int Polytope::affine_dim() const {
  if (vrep_.empty()) return -1;
  QMatrix m(static_cast<Eigen::Index>(vrep_.size()) - 1, dim_);
  for (size_t i = 1; i < vrep_.size(); ++i)
    m.row(static_cast<Eigen::Index>(i) - 1) = (vrep_[i] - vrep_[0]).transpose();
  return rank(m);
}

bool Polytope::contains(const QVector& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("contains: dimension mismatch");
  if (vrep_.empty()) return false;
  for (const HalfSpace& h : hrep_)
    if (dot(h.normal, x) < h.offset) return false;
  return true;
}

bool Polytope::contains(const QuadVector& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("contains: dimension mismatch");
  if (vrep_.empty()) return false;
  for (const HalfSpace& h : hrep_) {
    Quad v(0);
    for (int i = 0; i < dim_; ++i) v += Quad(h.normal(i)) * x(i);
    if (v < Quad(h.offset)) return false;
  }
  return true;
}

const std::vector<QVector>& Polytope::extreme_points() const {
  if (vrep_.empty()) throw std::domain_error("extreme_points: empty polytope");
  return vrep_;
}

Face Polytope::face_of(const QVector& y) const {
  if (!contains(y)) throw std::domain_error("face_of: point outside polytope");
  Face f;
  std::vector<HalfSpace> hs = hrep_;
  for (size_t i = 0; i < hrep_.size(); ++i) {
    if (dot(hrep_[i].normal, y) == hrep_[i].offset) {
      f.tight.push_back(static_cast<int>(i));
      hs.push_back({QVector(-hrep_[i].normal), Rat(-hrep_[i].offset)});
    }
  }
  f.carrier = std::make_shared<const Polytope>(from_hrep(dim_, std::move(hs)));
  return f;
}

Face Polytope::face_of(const QuadVector& y) const {
  if (!contains(y)) throw std::domain_error("face_of: point outside polytope");
  Face f;
  std::vector<HalfSpace> hs = hrep_;
  for (size_t i = 0; i < hrep_.size(); ++i) {
    Quad v(0);
    for (int j = 0; j < dim_; ++j) v += Quad(hrep_[i].normal(j)) * y(j);
    if (v == Quad(hrep_[i].offset)) {
      f.tight.push_back(static_cast<int>(i));
      hs.push_back({QVector(-hrep_[i].normal), Rat(-hrep_[i].offset)});
    }
  }
  f.carrier = std::make_shared<const Polytope>(from_hrep(dim_, std::move(hs)));
  return f;
}

Rat Polytope::local_delta(const QVector& x) const {
  if (!contains(x)) throw std::domain_error("local_delta: point outside polytope");
  // min over facets not containing x; every face avoiding x lies in one
  std::optional<Rat> best;
  for (const HalfSpace& h : hrep_) {
    if (dot(h.normal, x) == h.offset) continue;
    // sup-norm distance from x to the facet, as an LP in (y, t)
    std::vector<LinCon> cons;
    const int n = dim_;
    auto lift = [&](const QVector& normal, const Rat& off, bool eq) {
      QVector v = QVector::Constant(n + 1, Rat(0));
      v.head(n) = normal;
      cons.push_back({v, off, eq});
    };
    for (const HalfSpace& g : hrep_) lift(g.normal, g.offset, false);
    lift(h.normal, h.offset, true);
    for (int j = 0; j < n; ++j) {
      QVector v = QVector::Constant(n + 1, Rat(0));
      v(j) = -1;
      v(n) = 1;
      cons.push_back({v, Rat(-x(j)), false});  // t - y_j >= -x_j
      v(j) = 1;
      cons.push_back({v, x(j), false});  // t + y_j >= x_j
    }
    QVector c = QVector::Constant(n + 1, Rat(0));
    c(n) = 1;
    LpResult r = lp_minimize(c, cons);
    if (r.status != LpStatus::Optimal) continue;  // facet empty, cannot happen for minimal hrep
    if (!best || r.value < *best) best = r.value;
  }
  // a single point has no faces avoiding x; any positive delta works
  return best ? *best : Rat(1);
}

Polytope Polytope::project(const std::vector<int>& keep) const {
  if (vrep_.empty()) return empty(static_cast<int>(keep.size()));
  struct Row {
    QVector n;
    Rat c;
  };
  std::vector<Row> rows;
  for (const HalfSpace& h : hrep_) rows.push_back({h.normal, h.offset});

  std::vector<bool> keep_mask(dim_, false);
  for (int k : keep) keep_mask[k] = true;

  auto prune = [&](std::vector<Row>& rs) {
    // exact dedupe on the normalized (normal, offset)
    std::set<std::vector<Rat>> seen;
    std::vector<Row> out;
    for (const Row& r : rs) {
      QVector full(dim_ + 1);
      full.head(dim_) = r.n;
      full(dim_) = r.c;
      bool zero = true;
      for (Eigen::Index i = 0; i < full.size(); ++i)
        if (full(i) != 0) zero = false;
      if (zero) continue;
      ZVector p = primitive(full);
      // only positive rescaling is allowed for inequalities
      bool flipped = false;
      for (Eigen::Index i = 0; i < full.size(); ++i)
        if (full(i) != 0) { flipped = sgn(full(i)) != sgn(p(i)); break; }
      if (flipped) p = -p;
      std::vector<Rat> key = to_key(p);
      if (seen.insert(key).second) {
        Row nr;
        nr.n = QVector(dim_);
        for (int i = 0; i < dim_; ++i) nr.n(i) = Rat(p(i));
        nr.c = Rat(p(dim_));
        out.push_back(nr);
      }
    }
    rs = std::move(out);
    if (rs.size() <= 24) return;
    // LP-based redundancy removal to keep Fourier-Motzkin growth in check
    std::vector<Row> kept;
    for (size_t i = 0; i < rs.size(); ++i) {
      std::vector<LinCon> cons;
      for (size_t j = 0; j < rs.size(); ++j) {
        if (j == i) continue;
        cons.push_back({rs[j].n, rs[j].c, false});
      }
      LpResult r = lp_minimize(rs[i].n, cons);
      bool redundant = (r.status == LpStatus::Optimal && r.value >= rs[i].c);
      if (!redundant) kept.push_back(rs[i]);
    }
    rs = std::move(kept);
  };

  for (int j = dim_ - 1; j >= 0; --j) {
    if (keep_mask[j]) continue;
    std::vector<Row> pos, zer, neg;
    for (const Row& r : rows) {
      int s = sgn(r.n(j));
      (s > 0 ? pos : s == 0 ? zer : neg).push_back(r);
    }
    std::vector<Row> next = zer;
    for (const Row& p : pos)
      for (const Row& q : neg) {
        Rat lp = -q.n(j), lq = p.n(j);
        next.push_back({lp * p.n + lq * q.n, lp * p.c + lq * q.c});
      }
    rows = std::move(next);
    prune(rows);
  }

  std::vector<HalfSpace> hs;
  for (const Row& r : rows) {
    QVector n(static_cast<Eigen::Index>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) n(static_cast<Eigen::Index>(i)) = r.n(keep[i]);
    hs.push_back({n, r.c});
  }
  return from_hrep(static_cast<int>(keep.size()), std::move(hs));
}

Polytope Polytope::intersect(const std::vector<LinCon>& extra) const {
  std::vector<HalfSpace> hs = hrep_;
  for (const LinCon& c : extra) {
    hs.push_back({c.normal, c.offset});
    if (c.equality) hs.push_back({QVector(-c.normal), Rat(-c.offset)});
  }
  return from_hrep(dim_, std::move(hs));
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.dim_ != b.dim_)
    throw std::invalid_argument("minkowski_sum: dimension mismatch");
  if (a.is_empty() || b.is_empty()) return Polytope::empty(a.dim_);
  std::vector<QVector> sums;
  for (const QVector& u : a.vrep_)
    for (const QVector& v : b.vrep_) sums.push_back(u + v);
  return Polytope::from_vrep(a.dim_, std::move(sums));
}

// ---------------------------------------------------------------------------
// Cone

Cone Cone::from_generators(int dim, const std::vector<QVector>& gens) {
  // polar: {a : <a,g> >= 0}
  DDResult polar = double_description(dim, gens);
  std::vector<QVector> normals;
  for (const ZVector& r : polar.rays) normals.push_back(to_rat(r));
  Cone c = from_hrep(dim, normals);
  for (const QVector& l : polar.lineality) c.eq_.push_back(l);
  // re-check: from_hrep has no equality channel, add them as constraints
  if (!polar.lineality.empty()) {
    std::vector<QVector> all = normals;
    for (const QVector& l : polar.lineality) {
      all.push_back(l);
      all.push_back(-l);
    }
    DDResult dd = double_description(dim, all);
    c.rays_ = dd.rays;
    c.lineality_ = dd.lineality;
  }
  return c;
}

Cone Cone::from_hrep(int dim, std::vector<QVector> normals) {
  Cone c;
  c.dim_ = dim;
  DDResult dd = double_description(dim, normals);
  c.rays_ = dd.rays;
  c.lineality_ = dd.lineality;
  // canonical minimal hrep via the polar of the computed generators
  std::vector<QVector> gens;
  for (const ZVector& r : c.rays_) gens.push_back(to_rat(r));
  for (const QVector& l : c.lineality_) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  DDResult polar = double_description(dim, gens);
  c.hrep_.clear();
  for (const ZVector& r : polar.rays) c.hrep_.push_back(to_rat(r));
  c.eq_.clear();
  for (const QVector& l : polar.lineality) c.eq_.push_back(l);
  return c;
}

bool Cone::contains(const QVector& x) const {
  for (const QVector& n : hrep_)
    if (dot(n, x) < 0) return false;
  for (const QVector& n : eq_)
    if (dot(n, x) != 0) return false;
  return true;
}

std::optional<std::pair<Rat, Rat>> segment_cone_hits(const Cone& d,
                                                     const QVector& x,
                                                     const QVector& y) {
  Rat lo = 0, hi = 1;
  QVector dir = y - x;
  auto clamp = [&](const QVector& n, bool eq) -> bool {
    Rat a = dot(n, x), b = dot(n, dir);
    // a + t b >= 0 (or == 0)
    if (b == 0) {
      if (a < 0 || (eq && a != 0)) return false;
      return true;
    }
    Rat t = -a / b;
    if (eq) {
      if (t < lo || t > hi) return false;
      lo = hi = t;
      return true;
    }
    if (b > 0) {
      if (t > lo) lo = t;
    } else {
      if (t < hi) hi = t;
    }
    return true;
  };
  for (const QVector& n : d.hrep())
    if (!clamp(n, false)) return std::nullopt;
  for (const QVector& n : d.equalities())
    if (!clamp(n, true)) return std::nullopt;
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

}  // namespace adjring
