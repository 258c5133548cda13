#include "adjring/rings.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace adjring {

namespace {

Rat total_degree(const ZVector& m) {
  Rat s(0);
  for (Eigen::Index i = 0; i < m.size(); ++i) s += Rat(m(i));
  return s;
}

bool lex_less(const ZVector& a, const ZVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

ZVector cat(const ZVector& a, const ZVector& b) {
  ZVector r(a.size() + b.size());
  r.head(a.size()) = a;
  r.tail(b.size()) = b;
  return r;
}

// grading for combined (multidegree, lattice point) vectors: total
// degree of the multidegree part only
QVector combined_grading(Eigen::Index deg_len, Eigen::Index pt_len) {
  QVector g = QVector::Constant(deg_len + pt_len, Rat(0));
  for (Eigen::Index i = 0; i < deg_len; ++i) g(i) = 1;
  return g;
}

bool decomposes(const Monomial& mono, const std::vector<Monomial>& gens) {
  if (gens.empty()) return false;
  std::vector<ZVector> cgens;
  for (const Monomial& g : gens) cgens.push_back(cat(g.deg, g.point));
  QVector grading = combined_grading(mono.deg.size(), mono.point.size());
  return decompose(cat(mono.deg, mono.point), cgens, grading).has_value();
}

TorusDivisor weighted_divisor(const SectionRing& r, const ZVector& m) {
  TorusDivisor d =
      QVector::Constant(static_cast<Eigen::Index>(r.fan.rays.size()), Rat(0));
  for (size_t i = 0; i < r.divisors.size(); ++i)
    d += Rat(m(static_cast<Eigen::Index>(i))) * r.divisors[i];
  return d;
}

std::vector<ZVector> monoid_elements_up_to(const std::vector<ZVector>& gens,
                                           const Rat& bound, int rank) {
  std::set<std::vector<Int>> seen;
  std::vector<ZVector> frontier = {ZVector::Constant(rank, Int(0))};
  seen.insert(std::vector<Int>(static_cast<size_t>(rank), Int(0)));
  std::vector<ZVector> out = frontier;
  while (!frontier.empty()) {
    std::vector<ZVector> next;
    for (const ZVector& m : frontier) {
      for (const ZVector& g : gens) {
        ZVector s = m + g;
        if (total_degree(s) > bound) continue;
        std::vector<Int> key(s.data(), s.data() + s.size());
        if (!seen.insert(key).second) continue;
        next.push_back(s);
        out.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const ZVector& a, const ZVector& b) {
    Rat da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return lex_less(a, b);
  });
  return out;
}

}  // namespace

bool operator==(const Monomial& a, const Monomial& b) {
  return a.deg == b.deg && a.point == b.point;
}

SectionRing section_ring(Fan f, std::vector<TorusDivisor> divisors) {
  SectionRing r;
  r.fan = std::move(f);
  const int l = static_cast<int>(divisors.size());
  r.divisors = std::move(divisors);
  r.grading.rank = l;
  r.grading.finite_index = true;
  for (int i = 0; i < l; ++i) {
    ZVector e = ZVector::Constant(l, Int(0));
    e(i) = 1;
    r.grading.generators.push_back(e);
  }
  return r;
}

std::vector<ZVector> multidegrees_up_to(const SectionRing& r,
                                        const Rat& bound) {
  return monoid_elements_up_to(r.grading.generators, bound, r.grading.rank);
}

std::vector<ZVector> graded_piece(const SectionRing& r, const ZVector& m) {
  if (m.size() != r.grading.rank)
    throw std::invalid_argument("graded_piece: multidegree size");
  bool zero = true;
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (m(i) != 0) zero = false;
  if (!zero && !decompose(m, r.grading.generators))
    throw std::invalid_argument("graded_piece: multidegree outside monoid");
  return lattice_points(
      section_polytope(r.fan, floor_div(weighted_divisor(r, m))));
}

GeneratorSet minimal_generators(const SectionRing& r, const Rat& bound) {
  if (bound < 1) throw std::invalid_argument("minimal_generators: bound < 1");
  GeneratorSet gs;
  gs.bound = bound;
  Rat last_new(0);
  for (const ZVector& m : multidegrees_up_to(r, bound)) {
    Rat deg = total_degree(m);
    if (deg == 0) continue;
    for (const ZVector& u : graded_piece(r, m)) {
      Monomial mono{m, u};
      if (!decomposes(mono, gs.elements)) {
        gs.elements.push_back(mono);
        last_new = deg;
      }
    }
  }
  gs.verdict = (last_new * 2 <= bound);
  return gs;
}

GenerationVerdict verify_generation(const SectionRing& r,
                                    const std::vector<Monomial>& gens,
                                    const Rat& bound) {
  for (const ZVector& m : multidegrees_up_to(r, bound)) {
    if (total_degree(m) == 0) continue;
    for (const ZVector& u : graded_piece(r, m)) {
      Monomial mono{m, u};
      if (!decomposes(mono, gens)) return {false, mono};
    }
  }
  return {true, std::nullopt};
}

RestrictedRing restricted_ring(const SectionRing& r, int s) {
  if (s < 0 || s >= static_cast<int>(r.fan.rays.size()))
    throw std::invalid_argument("restricted_ring: not a ray");
  return {r, s};
}

RestrictedSystem restricted_piece(const RestrictedRing& rr, const ZVector& m) {
  TorusDivisor d = floor_div(weighted_divisor(rr.base, m));
  return restrict_system(rr.base.fan, d, rr.s);
}

SectionRing veronese_ring(const SectionRing& r, const ZMatrix& l) {
  AffineMonoid sub = veronese_submonoid(r.grading, l);
  if (!sub.finite_index)
    throw std::invalid_argument("veronese_ring: sublattice has infinite index");
  SectionRing v = r;
  v.grading = sub;
  return v;
}

GeneratorSet cox_descent_generators(const SectionRing& r,
                                    const std::vector<CoxPiece>& pieces,
                                    const Rat& m_threshold,
                                    const Rat& verify_bound) {
  // hypothesis (i): just above the threshold, alpha - S_j stays effective
  for (const CoxPiece& pc : pieces) {
    Rat maxgen(0);
    for (const ZVector& g : pc.monoid.generators)
      maxgen = std::max(maxgen, total_degree(g));
    for (const ZVector& alpha : monoid_elements_up_to(
             pc.monoid.generators, m_threshold + maxgen, pc.monoid.rank)) {
      if (total_degree(alpha) < m_threshold) continue;
      TorusDivisor d = weighted_divisor(r, alpha);
      d(pc.s) -= 1;
      if (!positivity(r.fan, d).pseudoeffective)
        throw CoxHypothesisError(alpha);
    }
  }

  GeneratorSet gs;
  gs.bound = verify_bound;
  auto push = [&](const Monomial& m) {
    for (const Monomial& e : gs.elements)
      if (e == m) return;
    gs.elements.push_back(m);
  };
  for (const ZVector& m : multidegrees_up_to(r, m_threshold)) {
    if (total_degree(m) == 0) continue;
    for (const ZVector& u : graded_piece(r, m)) push({m, u});
  }
  for (const CoxPiece& pc : pieces) {
    push(pc.sigma);
    for (const Monomial& g : pc.restricted_gens) push(g);
  }
  gs.verdict = verify_generation(r, gs.elements, verify_bound).generated;
  return gs;
}

namespace {

Rat order_at(const Fan& f, const TorusDivisor& d, int ray) {
  std::vector<LinCon> cons;
  for (size_t i = 0; i < f.rays.size(); ++i)
    cons.push_back({to_rat(f.rays[i]), -d(static_cast<Eigen::Index>(i)), false});
  LpResult lp = lp_minimize(to_rat(f.rays[ray]), cons);
  if (lp.status != LpStatus::Optimal)
    throw std::domain_error("fix_function: empty linear system");
  return lp.value + d(ray);
}

}  // namespace

FixFunction fix_function(const Fan& f, const Polytope& p, const Int& k_max) {
  const int r = static_cast<int>(f.rays.size());
  if (p.dim() != r)
    throw std::invalid_argument("fix_function: polytope dimension");
  for (const QVector& v : p.vrep())
    if (section_polytope(f, v).is_empty())
      throw std::domain_error("fix_function: vertex with empty system");

  const int n = f.dim;
  FixFunction ff;
  for (int ray = 0; ray < r; ++ray) {
    Rat cap(1);
    for (const QVector& v : p.vrep())
      cap = std::max(cap, order_at(f, v, ray));
    cap += 1;

    // epigraph shadow in (D, t): some u in P_D has ray-tightness <= t
    std::vector<HalfSpace> hs;
    for (const HalfSpace& h : p.hrep()) {
      QVector row = QVector::Constant(r + 1 + n, Rat(0));
      row.head(r) = h.normal;
      hs.push_back({row, h.offset});
    }
    for (size_t rho = 0; rho < f.rays.size(); ++rho) {
      QVector row = QVector::Constant(r + 1 + n, Rat(0));
      row(static_cast<Eigen::Index>(rho)) = 1;
      row.tail(n) = to_rat(f.rays[rho]);
      hs.push_back({row, Rat(0)});
    }
    {
      QVector row = QVector::Constant(r + 1 + n, Rat(0));
      row(r) = 1;
      row(ray) = -1;
      row.tail(n) = -to_rat(f.rays[ray]);
      hs.push_back({row, Rat(0)});  // t >= <u,v_ray> + D_ray
      QVector capr = QVector::Constant(r + 1 + n, Rat(0));
      capr(r) = -1;
      hs.push_back({capr, -cap});
      QVector low = QVector::Constant(r + 1 + n, Rat(0));
      low(r) = 1;
      hs.push_back({low, Rat(0)});
    }
    std::vector<int> keep(r + 1);
    for (int i = 0; i <= r; ++i) keep[i] = i;
    Polytope shadow = Polytope::from_hrep(r + 1 + n, hs).project(keep);

    // sample at every breakpoint candidate: shadow vertex projections
    // plus the vertices of p, lifted to the hyperplane {last = 1}
    std::set<std::vector<Rat>> sample_keys;
    std::vector<std::pair<QVector, Rat>> samples;
    auto add_sample = [&](const QVector& d) {
      std::vector<Rat> key(d.data(), d.data() + d.size());
      if (!sample_keys.insert(key).second) return;
      QVector lifted(r + 1);
      lifted.head(r) = d;
      lifted(r) = 1;
      samples.push_back({lifted, order_at(f, d, ray)});
    };
    for (const QVector& v : shadow.vrep()) add_sample(QVector(v.head(r)));
    for (const QVector& v : p.vrep()) add_sample(v);

    std::vector<QVector> lifted_pts;
    for (const auto& [x, fv] : samples) lifted_pts.push_back(x);
    Polytope lifted_dom = Polytope::from_vrep(r + 1, lifted_pts);
    ff.per_ray.push_back(lower_envelope_extension(lifted_dom, samples, cap));
  }

  // uniform k for the multiple formula, over vertices and a fixed
  // sample of interior rational points
  std::vector<QVector> tested = p.vrep();
  std::mt19937_64 rng(27);
  std::uniform_int_distribution<int> w(0, 6);
  while (tested.size() < p.vrep().size() + 20) {
    QVector acc = QVector::Constant(r, Rat(0));
    Rat tot(0);
    for (const QVector& v : p.vrep()) {
      int wi = w(rng);
      acc += Rat(wi) * v;
      tot += wi;
    }
    if (tot == 0) continue;
    tested.push_back(QVector(acc / tot));
  }
  std::vector<std::vector<Rat>> want;  // per tested point, per ray
  for (const QVector& d : tested) {
    std::vector<Rat> o;
    for (int ray = 0; ray < r; ++ray) o.push_back(order_at(f, d, ray));
    want.push_back(o);
  }
  for (Int k(1); k <= k_max; ++k) {
    bool ok = true;
    for (size_t ti = 0; ti < tested.size() && ok; ++ti) {
      const QVector& d = tested[ti];
      for (Int m = k; m <= 60 && ok; m += k) {
        TorusDivisor md = Rat(m) * d;
        if (!is_integral(md)) continue;
        LinearSystem ls = global_sections(f, md);
        if (ls.points.empty()) continue;
        for (int ray = 0; ray < r; ++ray)
          if (ls.fixed_part(ray) != Rat(m) * want[ti][ray]) ok = false;
      }
    }
    if (ok) {
      ff.k = k;
      break;
    }
  }
  return ff;
}

Rat evaluate_fix(const FixFunction& ff, int ray, const QVector& d) {
  QVector lifted(d.size() + 1);
  lifted.head(d.size()) = d;
  lifted(d.size()) = 1;
  return evaluate(ff.per_ray.at(static_cast<size_t>(ray)), lifted);
}

}  // namespace adjring
