#include "adjring/pwa.hpp"

#include <algorithm>
#include <stdexcept>

namespace adjring {

namespace {

// Does the affine hull of p contain the origin? Solved as feasibility of
// an affine combination of the vertices summing to zero.
bool affine_hull_has_origin(const Polytope& p) {
  const auto& vs = p.vrep();
  const int m = static_cast<int>(vs.size());
  const int n = p.dim();
  std::vector<LinCon> cons;
  for (int i = 0; i < n; ++i) {
    QVector row(m);
    for (int j = 0; j < m; ++j) row(j) = vs[j](i);
    cons.push_back({row, Rat(0), true});
  }
  cons.push_back({QVector::Constant(m, Rat(1)), Rat(1), true});
  return lp_feasible(cons, m);
}

}  // namespace

PiecewiseAffineFn lower_envelope_extension(
    const Polytope& p, const std::vector<std::pair<QVector, Rat>>& samples,
    const Rat& c) {
  const int n = p.dim();
  if (samples.empty())
    throw std::invalid_argument("lower_envelope_extension: no samples");
  for (const auto& [x, f] : samples) {
    if (!p.contains(x))
      throw std::invalid_argument("lower_envelope_extension: sample outside p");
    if (f > c)
      throw std::invalid_argument("lower_envelope_extension: f exceeds c");
  }
  if (affine_hull_has_origin(p))
    throw std::invalid_argument(
        "lower_envelope_extension: affine hull contains the origin");

  std::vector<QVector> lifted;
  for (const auto& [x, f] : samples) {
    QVector low(n + 1), high(n + 1);
    low.head(n) = x;
    low(n) = f;
    high.head(n) = x;
    high(n) = c;
    lifted.push_back(low);
    lifted.push_back(high);
  }
  Polytope q = Polytope::from_vrep(n + 1, lifted);

  std::vector<int> keep(n);
  for (int i = 0; i < n; ++i) keep[i] = i;
  PiecewiseAffineFn fn;
  fn.domain = q.project(keep);

  // Lower faces carry inequalities <a,x> + nu*y >= o with nu > 0, each
  // giving the affine map y = (o - <a,x>)/nu; F is their maximum.
  std::vector<AffineMap> maps;
  for (const HalfSpace& h : q.hrep()) {
    Rat nu = h.normal(n);
    if (nu <= 0) continue;
    AffineMap m;
    m.grad = QVector(-h.normal.head(n) / nu);
    m.offset = h.offset / nu;
    maps.push_back(m);
  }
  if (maps.empty())
    throw std::logic_error("lower_envelope_extension: no lower faces");

  const int full = fn.domain.affine_dim();
  for (size_t i = 0; i < maps.size(); ++i) {
    std::vector<LinCon> dominate;
    for (size_t j = 0; j < maps.size(); ++j) {
      if (j == i) continue;
      dominate.push_back({QVector(maps[i].grad - maps[j].grad),
                          maps[j].offset - maps[i].offset, false});
    }
    Polytope cell = fn.domain.intersect(dominate);
    if (cell.is_empty() || cell.affine_dim() < full) continue;
    fn.cells.push_back({cell, maps[i]});
  }
  return fn;
}

Rat evaluate(const PiecewiseAffineFn& f, const QVector& x) {
  for (const PwaCell& c : f.cells)
    if (c.cell.contains(x)) return apply(c.map, x);
  throw std::domain_error("evaluate: point outside domain");
}

Decomposition decomposition(const PiecewiseAffineFn& f) {
  Decomposition d{f.cells, true};
  for (const PwaCell& a : f.cells) {
    for (const PwaCell& b : f.cells) {
      for (const QVector& v : b.cell.vrep()) {
        if (apply(a.map, v) > apply(b.map, v)) {
          d.convex = false;
          return d;
        }
      }
    }
  }
  return d;
}

}  // namespace adjring
