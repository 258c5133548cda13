#include "adjring/toric.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace adjring {

namespace {

ZVector zrow(std::initializer_list<long> xs) {
  ZVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

bool is_primitive(const ZVector& v) {
  Int g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v(i).get_mpz_t());
  return g == 1;
}

Rat tightness(const QVector& u, const ZVector& ray, const Rat& coeff) {
  return to_rat(ray).dot(u) + coeff;
}

// All distinct nonempty cones of the fan, as sorted ray index sets.
std::vector<std::vector<int>> all_cones(const Fan& f) {
  std::set<std::vector<int>> seen;
  for (const auto& mc : f.max_cones) {
    const size_t k = mc.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> face;
      for (size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) face.push_back(mc[i]);
      std::sort(face.begin(), face.end());
      seen.insert(face);
    }
  }
  return {seen.begin(), seen.end()};
}

// Is there a lattice point / real point of P tight on every ray of the cone?
bool face_nonempty(const Polytope& p, const Fan& f, const TorusDivisor& d,
                   const std::vector<int>& cone) {
  if (p.is_empty()) return false;
  std::vector<LinCon> tight;
  for (int r : cone) tight.push_back({to_rat(f.rays[r]), -d(r), true});
  return !p.intersect(tight).is_empty();
}

std::vector<int> iota(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

Fan fan_p1() { return {1, {zrow({1}), zrow({-1})}, {{0}, {1}}}; }

Fan fan_p2() {
  return {2, {zrow({1, 0}), zrow({0, 1}), zrow({-1, -1})},
          {{0, 1}, {1, 2}, {2, 0}}};
}

Fan fan_p1xp1() { return fan_hirzebruch(0); }

Fan fan_hirzebruch(int a) {
  if (a < 0 || a > 3) throw std::invalid_argument("fan_hirzebruch: need 0<=a<=3");
  return {2, {zrow({1, 0}), zrow({0, 1}), zrow({-1, a}), zrow({0, -1})},
          {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
}

Fan fan_del_pezzo(int k) {
  switch (k) {
    case 1:
      return {2, {zrow({1, 0}), zrow({1, 1}), zrow({0, 1}), zrow({-1, -1})},
              {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    case 2:
      return {2,
              {zrow({1, 0}), zrow({1, 1}), zrow({0, 1}), zrow({-1, 0}),
               zrow({-1, -1})},
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}};
    case 3:
      return {2,
              {zrow({1, 0}), zrow({1, 1}), zrow({0, 1}), zrow({-1, 0}),
               zrow({-1, -1}), zrow({0, -1})},
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}};
    default:
      throw std::invalid_argument("fan_del_pezzo: need 1<=k<=3");
  }
}

Fan fan_p3() {
  return {3,
          {zrow({1, 0, 0}), zrow({0, 1, 0}), zrow({0, 0, 1}),
           zrow({-1, -1, -1})},
          {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

Fan fan_preset(const std::string& name) {
  if (name == "P1") return fan_p1();
  if (name == "P2") return fan_p2();
  if (name == "P1xP1" || name == "F0") return fan_p1xp1();
  if (name == "F1") return fan_hirzebruch(1);
  if (name == "F2") return fan_hirzebruch(2);
  if (name == "F3") return fan_hirzebruch(3);
  if (name == "dP1") return fan_del_pezzo(1);
  if (name == "dP2") return fan_del_pezzo(2);
  if (name == "dP3") return fan_del_pezzo(3);
  if (name == "P3") return fan_p3();
  throw std::invalid_argument("fan_preset: unknown preset " + name);
}

FanReport validate_fan(const Fan& f) {
  const int n = f.dim;
  const int r = static_cast<int>(f.rays.size());
  std::set<std::vector<Int>> ray_set;
  for (const ZVector& v : f.rays) {
    if (v.size() != n) throw std::invalid_argument("validate_fan: ray size");
    if (!is_primitive(v))
      throw std::invalid_argument("validate_fan: non-primitive ray");
    std::vector<Int> key(v.data(), v.data() + v.size());
    if (!ray_set.insert(key).second)
      throw std::invalid_argument("validate_fan: repeated ray");
  }
  std::set<std::vector<int>> cone_set;
  for (const auto& mc : f.max_cones) {
    std::vector<int> sorted = mc;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("validate_fan: repeated ray in cone");
    for (int i : sorted)
      if (i < 0 || i >= r)
        throw std::invalid_argument("validate_fan: ray index out of range");
    if (!cone_set.insert(sorted).second)
      throw std::invalid_argument("validate_fan: repeated cone");
  }

  FanReport rep;
  rep.smooth = true;
  for (const auto& mc : f.max_cones) {
    if (static_cast<int>(mc.size()) != n) {
      rep.smooth = false;
      rep.determinants.push_back(Int(0));
      continue;
    }
    ZMatrix m(n, n);
    for (int j = 0; j < n; ++j) m.col(j) = f.rays[mc[j]];
    Int dm = det(m);
    rep.determinants.push_back(dm);
    if (dm != 1 && dm != -1) rep.smooth = false;
  }

  // completeness: facet pairing plus a direction-cover sample
  rep.complete = true;
  std::map<std::vector<int>, int> facet_count;
  for (const auto& mc : f.max_cones) {
    std::vector<int> sorted = mc;
    std::sort(sorted.begin(), sorted.end());
    for (size_t drop = 0; drop < sorted.size(); ++drop) {
      std::vector<int> facet;
      for (size_t i = 0; i < sorted.size(); ++i)
        if (i != drop) facet.push_back(sorted[i]);
      if (!facet.empty()) facet_count[facet] += 1;
    }
  }
  for (const auto& [facet, count] : facet_count) {
    if (count != 2) {
      rep.complete = false;
      rep.unpaired_facets.push_back(facet);
    }
  }
  if (n == 1 && f.max_cones.size() != 2) rep.complete = false;

  std::vector<QVector> dirs;
  for (int i = 0; i < n; ++i) {
    for (int sgn : {1, -1}) {
      QVector e = QVector::Constant(n, Rat(0));
      e(i) = sgn;
      dirs.push_back(e);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          QVector e = QVector::Constant(n, Rat(0));
          e(i) = si;
          e(j) = sj;
          dirs.push_back(e);
        }
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  while (dirs.size() < static_cast<size_t>(4 * n * n + 20)) {
    QVector e(n);
    bool zero = true;
    for (int i = 0; i < n; ++i) {
      e(i) = rat(num(rng), den(rng));
      if (e(i) != 0) zero = false;
    }
    if (!zero) dirs.push_back(e);
  }
  for (const QVector& w : dirs) {
    bool covered = false;
    for (const auto& mc : f.max_cones) {
      const int k = static_cast<int>(mc.size());
      std::vector<LinCon> cons;
      for (int i = 0; i < n; ++i) {
        QVector row(k);
        for (int j = 0; j < k; ++j) row(j) = Rat(f.rays[mc[j]](i));
        cons.push_back({row, w(i), true});
      }
      for (int j = 0; j < k; ++j) {
        QVector pos = QVector::Constant(k, Rat(0));
        pos(j) = 1;
        cons.push_back({pos, Rat(0), false});
      }
      if (lp_feasible(cons, k)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      rep.complete = false;
      break;
    }
  }

  // projectivity: strictly convex support function via LP. Variables are
  // the coefficients a_rho followed by one vertex u_sigma per max cone.
  const int m = static_cast<int>(f.max_cones.size());
  const int vars = r + m * n;
  std::vector<LinCon> cons;
  for (int c = 0; c < m; ++c) {
    std::vector<int> in(f.max_cones[c].begin(), f.max_cones[c].end());
    for (int rho = 0; rho < r; ++rho) {
      bool inside = std::find(in.begin(), in.end(), rho) != in.end();
      QVector row = QVector::Constant(vars, Rat(0));
      row(rho) = 1;
      for (int i = 0; i < n; ++i) row(r + c * n + i) = Rat(f.rays[rho](i));
      // <u_c, v_rho> + a_rho: zero on the cone, >= 1 off it
      cons.push_back({row, inside ? Rat(0) : Rat(1), inside});
    }
  }
  LpResult lp = lp_minimize(QVector::Constant(vars, Rat(0)), cons);
  rep.projective = (lp.status == LpStatus::Optimal);
  if (rep.projective) rep.support_function = QVector(lp.point.head(r));
  return rep;
}

TorusDivisor canonical_divisor(const Fan& f) {
  return QVector::Constant(static_cast<Eigen::Index>(f.rays.size()), Rat(-1));
}

bool is_integral(const TorusDivisor& d) {
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (d(i).get_den() != 1) return false;
  return true;
}

TorusDivisor floor_div(const TorusDivisor& d) {
  TorusDivisor r(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) r(i) = Rat(floor_int(d(i)));
  return r;
}

Polytope section_polytope(const Fan& f, const TorusDivisor& d) {
  if (d.size() != static_cast<Eigen::Index>(f.rays.size()))
    throw std::invalid_argument("section_polytope: coefficient count");
  std::vector<HalfSpace> hs;
  for (size_t i = 0; i < f.rays.size(); ++i)
    hs.push_back({to_rat(f.rays[i]), -d(static_cast<Eigen::Index>(i))});
  return Polytope::from_hrep(f.dim, hs);
}

LinearSystem global_sections(const Fan& f, const TorusDivisor& d) {
  if (!is_integral(d))
    throw std::invalid_argument("global_sections: divisor not integral");
  LinearSystem ls;
  ls.divisor = d;
  ls.points = lattice_points(section_polytope(f, d));
  const Eigen::Index r = d.size();
  if (ls.points.empty()) {
    ls.fixed_part = d;
    ls.mobile_part = QVector::Constant(r, Rat(0));
    return ls;
  }
  ls.fixed_part = QVector(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    Rat mn = tightness(to_rat(ls.points[0]), f.rays[i], d(i));
    for (const ZVector& u : ls.points)
      mn = std::min(mn, tightness(to_rat(u), f.rays[i], d(i)));
    ls.fixed_part(i) = mn;
  }
  ls.mobile_part = d - ls.fixed_part;
  return ls;
}

std::vector<std::vector<int>> base_locus(const Fan& f, const TorusDivisor& d) {
  LinearSystem ls = global_sections(f, d);
  if (ls.points.empty())
    throw std::domain_error("base_locus: |D| empty, Bs undefined");
  std::vector<std::vector<int>> in_bs;
  for (const auto& cone : all_cones(f)) {
    bool free = false;
    for (const ZVector& u : ls.points) {
      bool tight_all = true;
      for (int rho : cone)
        if (tightness(to_rat(u), f.rays[rho], d(rho)) != 0) tight_all = false;
      if (tight_all) {
        free = true;
        break;
      }
    }
    if (!free) in_bs.push_back(cone);
  }
  // minimal under inclusion
  std::vector<std::vector<int>> minimal;
  for (const auto& c : in_bs) {
    bool has_smaller = false;
    for (const auto& o : in_bs) {
      if (o.size() >= c.size() || o == c) continue;
      if (std::includes(c.begin(), c.end(), o.begin(), o.end()))
        has_smaller = true;
    }
    if (!has_smaller) minimal.push_back(c);
  }
  return minimal;
}

StableBaseLocus stable_base_locus(const Fan& f, const TorusDivisor& d) {
  StableBaseLocus out;
  Polytope p = section_polytope(f, d);
  if (p.is_empty()) {
    out.everything = true;
    return out;
  }
  std::vector<std::vector<int>> in_bs;
  for (const auto& cone : all_cones(f))
    if (!face_nonempty(p, f, d, cone)) in_bs.push_back(cone);
  for (const auto& c : in_bs) {
    bool has_smaller = false;
    for (const auto& o : in_bs) {
      if (o.size() >= c.size() || o == c) continue;
      if (std::includes(c.begin(), c.end(), o.begin(), o.end()))
        has_smaller = true;
    }
    if (!has_smaller) out.cones.push_back(c);
  }
  out.q0 = common_denominator(d);
  for (const QVector& v : p.vrep()) out.q0 = lcm(out.q0, common_denominator(v));
  return out;
}

Positivity positivity(const Fan& f, const TorusDivisor& d) {
  Positivity pos;
  Polytope p = section_polytope(f, d);
  pos.pseudoeffective = !p.is_empty();
  pos.big = (p.affine_dim() == f.dim);
  pos.nef = true;
  pos.ample = true;
  const int n = f.dim;
  for (const auto& mc : f.max_cones) {
    if (static_cast<int>(mc.size()) != n)
      throw std::invalid_argument("positivity: fan not smooth-complete");
    QMatrix m(n, n);
    QVector rhs(n);
    for (int j = 0; j < n; ++j) {
      m.row(j) = to_rat(f.rays[mc[j]]).transpose();
      rhs(j) = -d(mc[j]);
    }
    auto u = solve_linear(m, rhs);
    if (!u) throw std::invalid_argument("positivity: degenerate cone");
    for (size_t rho = 0; rho < f.rays.size(); ++rho) {
      if (std::find(mc.begin(), mc.end(), static_cast<int>(rho)) != mc.end())
        continue;
      Rat t = tightness(*u, f.rays[rho], d(static_cast<Eigen::Index>(rho)));
      if (t < 0) pos.nef = false;
      if (t <= 0) pos.ample = false;
    }
  }
  if (!pos.nef) pos.ample = false;
  return pos;
}

ZariskiData sigma_decomposition(const Fan& f, const TorusDivisor& d,
                                const TorusDivisor& a) {
  if (!positivity(f, a).ample)
    throw std::invalid_argument("sigma_decomposition: a not ample");
  if (!positivity(f, d).pseudoeffective)
    throw std::domain_error("sigma_decomposition: d not pseudo-effective");
  const Eigen::Index r = d.size();
  ZariskiData z;
  z.sigma = QVector(r);
  // eps -> o_rho(d + eps*a) is the value function of an LP whose right
  // hand side is affine in eps: convex, piecewise linear with finitely
  // many pieces, hence continuous on the closed feasible interval. The
  // one-sided limit at 0 is therefore the value at eps = 0 itself.
  for (Eigen::Index rho = 0; rho < r; ++rho) {
    std::vector<LinCon> cons;
    for (size_t i = 0; i < f.rays.size(); ++i)
      cons.push_back({to_rat(f.rays[i]), -d(static_cast<Eigen::Index>(i)),
                      false});
    LpResult lp = lp_minimize(to_rat(f.rays[rho]), cons);
    if (lp.status != LpStatus::Optimal)
      throw std::logic_error("sigma_decomposition: LP not optimal");
    z.sigma(rho) = lp.value + d(rho);
  }
  z.n_sigma = z.sigma;
  z.positive_part = d - z.n_sigma;
  return z;
}

StarFan star_restriction(const Fan& f, int s) {
  if (s < 0 || s >= static_cast<int>(f.rays.size()))
    throw std::invalid_argument("star_restriction: not a ray");
  const int n = f.dim;
  StarFan st;
  st.s = s;
  ZMatrix b = complete_to_basis(f.rays[s]);
  // integer inverse of the unimodular completion
  QMatrix bq(n, n), binv_q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bq(i, j) = Rat(b(i, j));
  for (int j = 0; j < n; ++j) {
    QVector e = QVector::Constant(n, Rat(0));
    e(j) = 1;
    binv_q.col(j) = *solve_linear(bq, e);
  }
  st.proj = ZMatrix(n - 1, n);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j) st.proj(i - 1, j) = Int(binv_q(i, j).get_num());

  ZMatrix vs(1, n);
  for (int j = 0; j < n; ++j) vs(0, j) = f.rays[s](j);
  ZMatrix h, u;
  hermite_normal_form(vs, h, u);
  st.mbasis = ZMatrix(n, n - 1);
  int col = 0;
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    if (h(0, c) != 0) continue;
    st.mbasis.col(col++) = u.col(c);
  }

  for (size_t rho = 0; rho < f.rays.size(); ++rho) {
    if (static_cast<int>(rho) == s) continue;
    bool adjacent = false;
    for (const auto& mc : f.max_cones) {
      if (std::find(mc.begin(), mc.end(), s) == mc.end()) continue;
      if (std::find(mc.begin(), mc.end(), static_cast<int>(rho)) != mc.end())
        adjacent = true;
    }
    if (adjacent) st.ray_origin.push_back(static_cast<int>(rho));
  }
  st.fan.dim = n - 1;
  for (int rho : st.ray_origin) {
    ZVector img = st.proj * f.rays[rho];
    st.fan.rays.push_back(n - 1 > 0 ? primitive(to_rat(img)) : img);
  }
  for (const auto& mc : f.max_cones) {
    if (std::find(mc.begin(), mc.end(), s) == mc.end()) continue;
    std::vector<int> cone;
    for (int rho : mc) {
      if (rho == s) continue;
      auto it = std::find(st.ray_origin.begin(), st.ray_origin.end(), rho);
      cone.push_back(static_cast<int>(it - st.ray_origin.begin()));
    }
    std::sort(cone.begin(), cone.end());
    st.fan.max_cones.push_back(cone);
  }
  return st;
}

RestrictedSystem restrict_system(const Fan& f, const TorusDivisor& d, int s) {
  RestrictedSystem rs;
  rs.star = star_restriction(f, s);
  LinearSystem ls = global_sections(f, d);
  std::vector<ZVector> tight;
  for (const ZVector& u : ls.points)
    if (tightness(to_rat(u), f.rays[s], d(s)) == 0) tight.push_back(u);
  if (tight.empty()) return rs;
  rs.zero = false;

  QVector grading = default_grading(f.dim);
  ZVector u0 = tight[0];
  for (const ZVector& u : tight)
    if (graded_lex_less(u, u0, grading)) u0 = u;

  const int n = f.dim;
  QMatrix mb(n, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n - 1; ++j) mb(i, j) = Rat(rs.star.mbasis(i, j));
  for (const ZVector& u : tight) {
    auto y = solve_linear(mb, to_rat(ZVector(u - u0)));
    if (!y) throw std::logic_error("restrict_system: point off the face lattice");
    ZVector yi(n - 1);
    for (int j = 0; j < n - 1; ++j) yi(j) = Int((*y)(j).get_num());
    rs.points.push_back(yi);
  }
  std::sort(rs.points.begin(), rs.points.end(),
            [](const ZVector& a, const ZVector& b) {
              for (Eigen::Index i = 0; i < a.size(); ++i)
                if (a(i) != b(i)) return a(i) < b(i);
              return false;
            });

  const int k = static_cast<int>(rs.star.ray_origin.size());
  rs.fixed_part = QVector(k);
  for (int j = 0; j < k; ++j) {
    int rho = rs.star.ray_origin[j];
    Rat mn = tightness(to_rat(tight[0]), f.rays[rho], d(rho));
    for (const ZVector& u : tight)
      mn = std::min(mn, tightness(to_rat(u), f.rays[rho], d(rho)));
    rs.fixed_part(j) = mn;
  }
  return rs;
}

namespace {

void check_scenario(const AdjointScenario& sc) {
  if (sc.s < 0 || sc.s >= static_cast<int>(sc.fan.rays.size()))
    throw std::invalid_argument("adjoint scenario: s not a ray");
  for (int i : sc.v)
    if (i == sc.s) throw std::invalid_argument("adjoint scenario: s in V");
  if (!positivity(sc.fan, sc.a).ample)
    throw std::invalid_argument("adjoint scenario: A not ample");
}

// D(b) = K + [with_s]S + A + sum b_i S_i as half-space data over
// (b-vars, extra prefix columns, u-vars).
std::vector<HalfSpace> adjoint_constraints(const AdjointScenario& sc,
                                           bool with_s, int eps_cols) {
  const int n = sc.fan.dim;
  const int nb = static_cast<int>(sc.v.size());
  const int vars = nb + eps_cols + n;
  TorusDivisor base = canonical_divisor(sc.fan) + sc.a;
  if (with_s) base(sc.s) += 1;
  std::vector<HalfSpace> hs;
  for (int i = 0; i < nb; ++i) {
    QVector lo = QVector::Constant(vars, Rat(0));
    lo(i) = 1;
    hs.push_back({lo, Rat(0)});
    QVector hi = QVector::Constant(vars, Rat(0));
    hi(i) = -1;
    hs.push_back({hi, Rat(-1)});
  }
  for (size_t rho = 0; rho < sc.fan.rays.size(); ++rho) {
    QVector row = QVector::Constant(vars, Rat(0));
    for (int i = 0; i < nb; ++i)
      if (sc.v[i] == static_cast<int>(rho)) row(i) = 1;
    if (eps_cols == 1) row(nb) = sc.a(static_cast<Eigen::Index>(rho));
    for (int j = 0; j < n; ++j)
      row(nb + eps_cols + j) = Rat(sc.fan.rays[rho](j));
    hs.push_back({row, -base(static_cast<Eigen::Index>(rho))});
  }
  return hs;
}

}  // namespace

AdjointPolytopes adjoint_polytopes(const AdjointScenario& sc) {
  check_scenario(sc);
  const int n = sc.fan.dim;
  const int nb = static_cast<int>(sc.v.size());
  AdjointPolytopes out;
  out.l = Polytope::box(QVector::Constant(nb, Rat(0)),
                        QVector::Constant(nb, Rat(1)));

  // E: shadow of {(b,u) : b in box, u in P_{K+A+B}} on b-space
  Polytope feas = Polytope::from_hrep(nb + n, adjoint_constraints(sc, false, 0));
  out.e = feas.project(iota(nb));

  // B: shadow Z of the S-tight members of P_{K+S+A+B+eps*A} on
  // (b,eps)-space; sigma_S vanishes iff both end slices contain b.
  std::vector<HalfSpace> hs = adjoint_constraints(sc, true, 1);
  const int vars = nb + 1 + n;
  {
    QVector lo = QVector::Constant(vars, Rat(0));
    lo(nb) = 1;
    hs.push_back({lo, Rat(0)});
    QVector hi = QVector::Constant(vars, Rat(0));
    hi(nb) = -1;
    hs.push_back({hi, Rat(-1)});
    // S-tightness = 0
    QVector t = QVector::Constant(vars, Rat(0));
    t(nb) = sc.a(sc.s);
    for (int j = 0; j < n; ++j) t(nb + 1 + j) = Rat(sc.fan.rays[sc.s](j));
    Rat off = Rat(-1) * (canonical_divisor(sc.fan)(sc.s) + Rat(1) + sc.a(sc.s));
    hs.push_back({t, off});
    hs.push_back({QVector(-t), -off});
  }
  Polytope z = Polytope::from_hrep(vars, hs).project(iota(nb + 1));
  auto slice = [&](const Rat& eps) {
    QVector e = QVector::Constant(nb + 1, Rat(0));
    e(nb) = 1;
    return z.intersect({{e, eps, true}}).project(iota(nb));
  };
  Polytope s0 = slice(Rat(0)), s1 = slice(Rat(1));
  if (s0.is_empty() || s1.is_empty()) {
    out.b = Polytope::empty(nb);
  } else {
    std::vector<HalfSpace> both = s0.hrep();
    for (const HalfSpace& h : s1.hrep()) both.push_back(h);
    out.b = Polytope::from_hrep(nb, both);
  }
  return out;
}

namespace {

PhiResult phi_common(const AdjointScenario& sc, const QVector& b,
                     const RestrictedSystem& rs, const QVector& fix_scaled,
                     const Int& k0) {
  const int k = static_cast<int>(rs.star.ray_origin.size());
  QVector bs = QVector::Constant(k, Rat(0));
  for (int j = 0; j < k; ++j)
    for (size_t i = 0; i < sc.v.size(); ++i)
      if (sc.v[i] == rs.star.ray_origin[j]) bs(j) = b(static_cast<int>(i));
  PhiResult out;
  out.star = rs.star;
  out.k0 = k0;
  out.value = QVector(k);
  for (int j = 0; j < k; ++j)
    out.value(j) = bs(j) - std::min(bs(j), fix_scaled(j));
  return out;
}

TorusDivisor adjoint_divisor(const AdjointScenario& sc, const QVector& b) {
  TorusDivisor d = canonical_divisor(sc.fan) + sc.a;
  d(sc.s) += 1;
  for (size_t i = 0; i < sc.v.size(); ++i)
    d(sc.v[i]) += b(static_cast<int>(i));
  return d;
}

}  // namespace

PhiResult phi(const AdjointScenario& sc, const QVector& b, const Int& m) {
  check_scenario(sc);
  if (m <= 0) throw std::invalid_argument("phi: m must be positive");
  TorusDivisor md = Rat(m) * adjoint_divisor(sc, b);
  if (!is_integral(md))
    throw std::invalid_argument("phi: m(K+S+A+B) not integral");
  RestrictedSystem rs = restrict_system(sc.fan, md, sc.s);
  if (rs.zero)
    throw std::domain_error("phi: res_S vanishes, S inside Bs|m(K+S+A+B)|");
  QVector fix_scaled = rs.fixed_part / Rat(m);
  return phi_common(sc, b, rs, fix_scaled, m);
}

PhiResult phi_asymptotic(const AdjointScenario& sc, const QVector& b) {
  check_scenario(sc);
  TorusDivisor d = adjoint_divisor(sc, b);
  Polytope p = section_polytope(sc.fan, d);
  std::vector<LinCon> tight = {{to_rat(sc.fan.rays[sc.s]), -d(sc.s), true}};
  Polytope face = p.is_empty() ? Polytope::empty(sc.fan.dim) : p.intersect(tight);
  if (face.is_empty())
    throw std::domain_error("phi_asymptotic: S inside the stable base locus");

  RestrictedSystem rs;
  rs.star = star_restriction(sc.fan, sc.s);
  rs.zero = false;
  const int k = static_cast<int>(rs.star.ray_origin.size());
  QVector fix(k);
  Int k0 = common_denominator(d);
  for (const QVector& v : face.vrep()) k0 = lcm(k0, common_denominator(v));
  for (int j = 0; j < k; ++j) {
    int rho = rs.star.ray_origin[j];
    std::vector<LinCon> cons;
    for (const HalfSpace& h : face.hrep()) cons.push_back({h.normal, h.offset, false});
    LpResult lp = lp_minimize(to_rat(sc.fan.rays[rho]), cons);
    if (lp.status != LpStatus::Optimal)
      throw std::logic_error("phi_asymptotic: LP not optimal");
    fix(j) = lp.value + d(rho);
  }
  rs.fixed_part = fix;
  return phi_common(sc, b, rs, fix, k0);
}

}  // namespace adjring
