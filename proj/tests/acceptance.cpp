// Acceptance gate: one pass/fail line per criterion. Exit status is the
// number of failed criteria.

#include "adjring/dioph.hpp"
#include "adjring/monoid.hpp"
#include "adjring/rings.hpp"
#include "adjring/scenario.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace adjring;

namespace {

int g_failures = 0;
std::ostringstream g_why;

void expect(bool ok, const std::string& what) {
  if (!ok) g_why << "    " << what << "\n";
}

using Clock = std::chrono::steady_clock;

double run(int idx, const std::string& name, void (*body)(),
           double budget_s) {
  g_why.str("");
  auto t0 = Clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    std::ostringstream os;
    os << "over budget: " << secs << "s > " << budget_s << "s";
    expect(false, os.str());
  }
  bool ok = g_why.str().empty();
  if (!ok) ++g_failures;
  std::printf("%2d. %-48s %s (%.2fs)\n", idx, name.c_str(),
              ok ? "PASS" : "FAIL", secs);
  if (!ok) std::fputs(g_why.str().c_str(), stdout);
  return secs;
}

QVector qv(std::initializer_list<Rat> xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

ZVector zv(std::initializer_list<Int> xs) {
  ZVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Int& x : xs) v(i++) = x;
  return v;
}

TorusDivisor ray_div(const Fan& f, int rho, const Rat& c = Rat(1)) {
  TorusDivisor d =
      QVector::Constant(static_cast<Eigen::Index>(f.rays.size()), Rat(0));
  d(rho) = c;
  return d;
}

constexpr int kE = 1;  // the -1 curve on F1 is the ray (0,1)

const char* kCatalog[] = {"P1",  "P2",  "P1xP1", "F1",  "F2",
                         "F3",  "dP1", "dP2",   "dP3", "P3"};

// 1. Hilbert bases of the wedge cones against brute force.
void gordan() {
  for (int k = 1; k <= 6; ++k) {
    auto t0 = Clock::now();
    Cone c = Cone::from_generators(
        2, {qv({Rat(1), Rat(0)}), qv({Rat(1), Rat(k)})});
    HilbertBasis hb = hilbert_basis(c);
    expect(hb.elements.size() == static_cast<size_t>(k + 1),
           "wedge k=" + std::to_string(k) + ": wrong basis size");

    // brute force: lattice points with first coordinate <= 2, reduced
    std::set<std::vector<Int>> pts;
    for (Int x1(0); x1 <= 2; ++x1)
      for (Int x2(0); x2 <= 2 * k; ++x2)
        if (x2 <= k * x1 && !(x1 == 0 && x2 == 0))
          pts.insert({x1, x2});
    std::set<std::vector<Int>> basis;
    for (const auto& h : pts) {
      bool reducible = false;
      for (const auto& g : pts) {
        if (g == h) continue;
        Int r1 = h[0] - g[0], r2 = h[1] - g[1];
        if (r1 < 0 || r2 < 0 || r2 > k * r1) continue;
        if (r1 == 0 && r2 == 0) continue;
        reducible = true;  // h = g + (cone point)
        break;
      }
      if (!reducible) basis.insert(h);
    }
    std::set<std::vector<Int>> got;
    for (const ZVector& e : hb.elements) got.insert({e(0), e(1)});
    expect(got == basis,
           "wedge k=" + std::to_string(k) + ": basis mismatch");
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    expect(secs < 1.0, "wedge k=" + std::to_string(k) + ": over 1s");
  }
}

// 2. The approximation guarantees on random instances.
void diophantine() {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-8, 8), den(1, 4), kpick(1, 6);
  std::uniform_int_distribution<int> epick(0, 2);
  const Rat epses[3] = {Rat(1), rat(1, 2), rat(1, 50)};
  int done = 0;
  while (done < 100) {
    long d = std::vector<long>{2, 3}[done % 2];
    int dim = 1 + done % 3;
    std::vector<QVector> pts;
    for (int i = 0; i < dim + 2; ++i) {
      QVector v(dim);
      for (int j = 0; j < dim; ++j) v(j) = rat(num(rng), den(rng));
      pts.push_back(v);
    }
    Polytope p = Polytope::from_vrep(dim, pts);
    if (p.is_empty() || p.vrep().size() < 2) continue;
    Quad theta = (sqrt_of(d) - Quad(1)) / Quad(2);
    const QVector& v0 = p.vrep()[0];
    const QVector& v1 = p.vrep()[1];
    QuadVector x(dim);
    for (int j = 0; j < dim; ++j)
      x(j) = Quad(v0(j)) + theta * Quad(v1(j) - v0(j));
    Int k(kpick(rng));
    Rat eps = epses[epick(rng)];
    ApproximationResult r = approximate_in_polytope(p, x, k, eps);

    expect(!r.points.empty(), "empty approximation");
    Quad wsum(0);
    QuadVector combo = QuadVector::Constant(dim, Quad(0));
    Face face = p.face_of(x);
    const Polytope& carrier = *face.carrier;
    for (const ApproxPoint& pt : r.points) {
      expect(pt.weight > Quad(0), "nonpositive weight");
      wsum += pt.weight;
      for (int i = 0; i < dim; ++i) combo(i) += pt.weight * Quad(pt.x(i));
      expect(pt.k % k == 0, "k_i not divisible by k");
      Int scale = pt.k / k;
      for (int i = 0; i < dim; ++i)
        expect(Rat(Rat(scale) * pt.x(i)).get_den() == 1,
               "(k_i/k)x_i not integral");
      QuadVector diff(dim);
      for (int i = 0; i < dim; ++i) diff(i) = x(i) - Quad(pt.x(i));
      expect(sup_norm(diff) < Quad(Rat(eps / Rat(pt.k))),
             "error bound violated");
      expect(carrier.contains(pt.x), "x_i off the minimal face");
    }
    expect(wsum == Quad(1), "weights do not sum to 1");
    for (int i = 0; i < dim; ++i)
      expect(combo(i) == x(i), "convex combination misses x");
    ++done;
  }
}

// 3. Lower envelopes of random convex sample sets.
void pwa_suite() {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int dim = 1 + trial % 2;
    // a convex function: max of three affine maps
    std::vector<AffineMap> maps;
    for (int t = 0; t < 3; ++t) {
      AffineMap m;
      m.grad = QVector(dim);
      for (int j = 0; j < dim; ++j) m.grad(j) = rat(coef(rng), den(rng));
      m.offset = rat(coef(rng), den(rng));
      maps.push_back(m);
    }
    auto fval = [&](const QVector& x) {
      Rat best = apply(maps[0], x);
      for (size_t t = 1; t < maps.size(); ++t)
        best = std::max(best, apply(maps[t], x));
      return best;
    };
    // samples on an integer grid, lifted to {last = 1}
    std::vector<std::pair<QVector, Rat>> samples;
    std::vector<QVector> lifted;
    Rat c(0);
    for (int a = -2; a <= 2; ++a) {
      for (int b = -2; b <= 2; ++b) {
        if (dim == 1 && b != 0) continue;
        QVector x(dim + 1);
        x(0) = a;
        if (dim == 2) x(1) = b;
        x(dim) = 1;
        Rat fx = fval(QVector(x.head(dim)));
        c = std::max(c, Rat(abs(fx.get_num()), fx.get_den()));
        samples.push_back({x, fx});
        lifted.push_back(x);
      }
    }
    c += 1;
    Polytope p = Polytope::from_vrep(dim + 1, lifted);
    PiecewiseAffineFn f = lower_envelope_extension(p, samples, c);
    expect(!f.cells.empty(), "no cells");
    for (const auto& [x, fx] : samples)
      expect(evaluate(f, x) == fx, "envelope misses a sample");
    Decomposition dec = decomposition(f);
    expect(dec.convex, "convexity certificate failed");
    // convexity spot check at midpoints
    for (size_t i = 0; i + 1 < samples.size(); i += 3) {
      QVector mid = (samples[i].first + samples[i + 1].first) / 2;
      expect(2 * evaluate(f, mid) <=
                 samples[i].second + samples[i + 1].second,
             "midpoint convexity failed");
    }
  }
}

// 4. The local polytope criterion at vertices, plus the circle control.
void polytope_criterion() {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> numd(-12, 12), dend(1, 6), step(-15, 15);
  int done = 0;
  while (done < 100) {
    int dim = 1 + done % 3;
    std::vector<QVector> pts;
    for (int i = 0; i < dim + 3; ++i) {
      QVector p(dim);
      for (int j = 0; j < dim; ++j) p(j) = rat(numd(rng), dend(rng));
      pts.push_back(p);
    }
    Polytope p = Polytope::from_vrep(dim, pts);
    if (p.is_empty() || p.affine_dim() < 1) continue;
    int per_vertex =
        500 / std::max<int>(1, static_cast<int>(p.vrep().size()));
    for (const QVector& x : p.vrep()) {
      Rat delta = p.local_delta(x);
      for (int s = 0; s < per_vertex; ++s) {
        QVector y(dim);
        bool same = true;
        for (int j = 0; j < dim; ++j) {
          y(j) = x(j) + delta * rat(step(rng), 16);
          if (y(j) != x(j)) same = false;
        }
        if (same) continue;
        if (p.contains(y)) continue;  // both sides of the implication hold
        // max t with x + t(y-x) in p; criterion: t stays at 0
        std::vector<LinCon> cons;
        for (const HalfSpace& h : p.hrep()) {
          QVector n(1);
          n(0) = h.normal.dot(y - x);
          cons.push_back({n, h.offset - h.normal.dot(x), false});
        }
        QVector lo(1), hi(1);
        lo(0) = 1;
        cons.push_back({lo, Rat(0), false});
        hi(0) = -1;
        cons.push_back({hi, Rat(-1), false});
        QVector obj(1);
        obj(0) = -1;
        LpResult r = lp_minimize(obj, cons);
        expect(r.status == LpStatus::Optimal && -r.value == 0,
               "open segment meets p but endpoint is outside");
      }
    }
    ++done;
  }

  // hulls of 16, 32, 64 rational circle points: delta at the fresh
  // vertices shrinks as the family approaches the disc
  Rat prev(-1);
  for (int m : {8, 16, 32}) {
    std::vector<QVector> pts;
    std::vector<QVector> fresh;
    for (int j = -m; j < m; ++j) {
      Rat u = rat(j, m);
      Rat w = 1 + u * u;
      QVector p = qv({Rat((1 - u * u) / w), Rat(2 * u / w)});
      pts.push_back(p);
      if (j % 2 != 0) fresh.push_back(p);
    }
    Polytope hull = Polytope::from_vrep(2, pts);
    expect(hull.vrep().size() == static_cast<size_t>(2 * m),
           "circle points are not all extreme");
    Rat worst(0);
    for (const QVector& v : fresh)
      worst = std::max(worst, hull.local_delta(v));
    if (prev >= 0)
      expect(worst < prev, "fresh-vertex delta did not shrink");
    prev = worst;
  }
}

// 5. Nakayama's sigma on the fan catalog.
void nakayama() {
  Fan f1 = fan_hirzebruch(1);
  TorusDivisor af1 = qv({Rat(1), Rat(1), Rat(1), Rat(1)});
  ZariskiData ze = sigma_decomposition(f1, ray_div(f1, kE), af1);
  expect(ze.sigma(kE) == 1, "sigma_E(E) != 1");

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(0, 4), den(1, 2), cut(0, 2);
  int done = 0;
  for (int fi = 0; done < 30; fi = (fi + 1) % 10) {
    Fan f = fan_preset(kCatalog[fi]);
    FanReport rep = validate_fan(f);
    if (!rep.support_function) continue;
    TorusDivisor a1 = *rep.support_function;
    TorusDivisor a2 = Rat(3) * a1 + ray_div(f, 0);
    if (!positivity(f, a2).ample) a2 = Rat(8) * a1 + ray_div(f, 0);
    expect(positivity(f, a2).ample, "second reference not ample");

    const int n = static_cast<int>(f.rays.size());
    TorusDivisor d(n);
    for (int i = 0; i < n; ++i) d(i) = rat(num(rng), den(rng));
    ZariskiData z = sigma_decomposition(f, d, a1);
    expect(sigma_decomposition(f, d, a2).sigma == z.sigma,
           "sigma depends on the ample reference");
    expect(sigma_decomposition(f, TorusDivisor(Rat(2) * d), a1).sigma ==
               QVector(Rat(2) * z.sigma),
           "sigma not homogeneous");
    TorusDivisor d2(n);
    for (int i = 0; i < n; ++i) d2(i) = rat(num(rng), den(rng));
    QVector both = sigma_decomposition(f, TorusDivisor(d + d2), a1).sigma;
    QVector sum = z.sigma + sigma_decomposition(f, d2, a1).sigma;
    for (int i = 0; i < n; ++i)
      expect(both(i) <= sum(i), "sigma not convex");
    // chop off 0 <= F <= N_sigma
    TorusDivisor fcut(n);
    for (int i = 0; i < n; ++i) fcut(i) = z.n_sigma(i) * rat(cut(rng), 2);
    ZariskiData zf = sigma_decomposition(f, TorusDivisor(d - fcut), a1);
    expect(zf.n_sigma == QVector(z.n_sigma - fcut),
           "N_sigma(D-F) != N_sigma(D)-F");
    ++done;
  }
}

// 6. Stable base locus equals Bs of the reported multiple and of 5x it.
void stable_bs() {
  std::mt19937_64 rng(3);
  for (const char* name : kCatalog) {
    Fan f = fan_preset(name);
    bool small = f.dim >= 3;
    std::uniform_int_distribution<int> num(small ? -1 : -2, small ? 2 : 4);
    std::uniform_int_distribution<int> den(1, small ? 2 : 3);
    int done = 0;
    while (done < 30) {
      TorusDivisor d(static_cast<Eigen::Index>(f.rays.size()));
      for (Eigen::Index i = 0; i < d.size(); ++i)
        d(i) = rat(num(rng), den(rng));
      StableBaseLocus sbl = stable_base_locus(f, d);
      if (sbl.everything) continue;
      for (int k : {1, 5}) {
        TorusDivisor mult = Rat(k) * Rat(sbl.q0) * d;
        expect(base_locus(f, mult) == sbl.cones,
               std::string(name) + ": Bs|kq0 D| mismatch at k=" +
                   std::to_string(k));
      }
      ++done;
    }
  }
}

// 7. Adjoint polytopes: hand-derived intervals and B-membership.
void adjoint() {
  Fan p2 = fan_p2();
  auto scenario = [&](const Rat& amp) {
    AdjointScenario sc;
    sc.fan = p2;
    sc.s = 1;
    sc.v = {0};
    sc.a = ray_div(p2, 2, amp);
    return sc;
  };
  AdjointPolytopes half = adjoint_polytopes(scenario(rat(5, 2)));
  expect(half.e.vrep() == std::vector<QVector>{qv({rat(1, 2)}), qv({Rat(1)})},
         "A=(5/2)H: E != [1/2,1]");
  AdjointPolytopes full = adjoint_polytopes(scenario(Rat(4)));
  expect(full.e.vrep() == std::vector<QVector>{qv({Rat(0)}), qv({Rat(1)})},
         "A=4H: E != [0,1]");
  AdjointPolytopes none = adjoint_polytopes(scenario(rat(1, 2)));
  expect(none.e.is_empty(), "A=(1/2)H: E not empty");
  for (const AdjointPolytopes* ap : {&half, &full}) {
    for (const QVector& v : ap->e.vrep())
      for (Eigen::Index i = 0; i < v.size(); ++i)
        (void)v(i);  // rational by type; exactness is structural
  }

  // B-polytope vs direct membership in the stable base locus on F1
  Fan f1 = fan_hirzebruch(1);
  AdjointScenario sc;
  sc.fan = f1;
  sc.s = kE;
  sc.v = {0, 3};
  sc.a = qv({Rat(1), Rat(1), Rat(1), Rat(1)});
  AdjointPolytopes ap = adjoint_polytopes(sc);
  TorusDivisor base = canonical_divisor(f1) + sc.a + ray_div(f1, sc.s);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num8(0, 8);
  for (int trial = 0; trial < 50; ++trial) {
    QVector b = trial < 25 ? qv({rat(trial % 5, 4), rat(trial / 5, 4)})
                           : qv({rat(num8(rng), 8), rat(num8(rng), 8)});
    TorusDivisor d = base;
    d(0) += b(0);
    d(3) += b(1);
    bool in_b;
    if (!positivity(f1, d).pseudoeffective) {
      in_b = false;  // B(D) is everything
    } else {
      StableBaseLocus sbl = stable_base_locus(f1, d);
      in_b = !sbl.everything;
      for (const auto& c : sbl.cones)
        if (c == std::vector<int>{sc.s}) in_b = false;
    }
    expect(ap.b.contains(b) == in_b, "B-polytope membership mismatch");
  }
}

// 8. Finite generation at desk scale.
void finite_generation() {
  Fan p2 = fan_p2();
  SectionRing rh = section_ring(p2, {ray_div(p2, 0)});
  GeneratorSet gh = minimal_generators(rh, 8);
  expect(gh.elements.size() == 3, "R(P2;H): generator count != 3");
  for (const Monomial& m : gh.elements)
    expect(m.deg == zv({1}), "R(P2;H): generator off degree 1");
  expect(verify_generation(rh, gh.elements, 8).generated,
         "R(P2;H): verify_generation failed at bound 8");

  Fan f1 = fan_hirzebruch(1);
  SectionRing rc = section_ring(f1, {ray_div(f1, 0), ray_div(f1, kE)});
  GeneratorSet gc = minimal_generators(rc, 8);
  expect(gc.elements.size() == 4, "F1 ring: generator count != 4");
  expect(verify_generation(rc, gc.elements, 8).generated,
         "F1 ring: verify_generation failed at bound 8");

  // descent, hypothesis (i) machine-checked inside
  CoxPiece ph;
  ph.s = 0;
  ph.monoid.generators = {zv({1})};
  ph.monoid.rank = 1;
  ph.sigma = {zv({1}), zv({0, 0})};
  ph.restricted_gens = {{zv({1}), zv({-1, 0})}, {zv({1}), zv({-1, 1})}};
  GeneratorSet dh = cox_descent_generators(rh, {ph}, 1, 8);
  expect(dh.verdict, "P2 descent does not generate");

  CoxPiece nef_side;
  nef_side.s = 0;
  nef_side.monoid.generators = {zv({1, 0}), zv({1, 1})};
  nef_side.monoid.rank = 2;
  nef_side.sigma = {zv({1, 0}), zv({0, 0})};
  nef_side.restricted_gens = {{zv({1, 0}), zv({-1, 0})},
                              {zv({1, 1}), zv({-1, -1})},
                              {zv({1, 1}), zv({-1, 0})}};
  CoxPiece e_side;
  e_side.s = kE;
  e_side.monoid.generators = {zv({0, 1}), zv({1, 1})};
  e_side.monoid.rank = 2;
  e_side.sigma = {zv({0, 1}), zv({0, 0})};
  e_side.restricted_gens = {{zv({1, 1}), zv({-1, -1})}};
  GeneratorSet dc = cox_descent_generators(rc, {nef_side, e_side}, 2, 8);
  expect(dc.verdict, "F1 descent does not generate");
}

// 9. The Fix function across the E-wall on F1.
void fix_fn() {
  Fan f1 = fan_hirzebruch(1);
  std::vector<QVector> seg = {qv({Rat(0), Rat(1), Rat(0), Rat(0)}),
                              qv({Rat(2), Rat(1), Rat(0), Rat(0)})};
  Polytope p = Polytope::from_vrep(4, seg);
  FixFunction ff = fix_function(f1, p, Int(120));
  expect(ff.per_ray[kE].cells.size() == 2, "mult_E Fix: cell count != 2");
  expect(ff.k.has_value() && *ff.k <= 120, "no uniform k <= 120");

  auto d_at = [](const Rat& t) { return qv({t, Rat(1), Rat(0), Rat(0)}); };
  // the breakpoint is rational and both cells agree there
  expect(evaluate_fix(ff, kE, d_at(1)) == 0, "breakpoint value");
  expect(evaluate_fix(ff, kE, d_at(1 - rat(1, 64))) == rat(1, 64),
         "left slope at the breakpoint");
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(0, 32);
  for (int trial = 0; trial < 50; ++trial) {
    Rat t = rat(num(rng), 16);
    Rat want = std::max(Rat(0), Rat(1 - t));
    expect(evaluate_fix(ff, kE, d_at(t)) == want,
           "pointwise o_E mismatch at a random point");
  }
  // validate the multiple formula for the found k at m <= 60
  Int k = *ff.k;
  for (int trial = 0; trial < 10; ++trial) {
    Rat t = rat(num(rng) % 8, 4);
    for (Int m = k; m <= 60; m += k) {
      TorusDivisor md = Rat(m) * d_at(t);
      if (!is_integral(md)) continue;
      LinearSystem ls = global_sections(f1, md);
      if (ls.points.empty()) continue;
      expect(ls.fixed_part(kE) == Rat(m) * evaluate_fix(ff, kE, d_at(t)),
             "Fix(D) != (1/m)Fix|mD|");
    }
  }
}

// 10. Byte-identical CLI reports for the demo scenario.
void determinism() {
#if defined(CLI_BIN) && defined(DEMO_SCENARIO)
  std::string dir = "/tmp/adjring_acceptance";
  int mkrc = std::system(("mkdir -p " + dir).c_str());
  expect(WEXITSTATUS(mkrc) == 0, "mkdir failed");
  std::string bin = CLI_BIN;
  std::string scn = DEMO_SCENARIO;
  for (const char* tag : {"a", "b"}) {
    int rc = std::system(
        (bin + " --scenario " + scn + " --out " + dir + "/" + tag + ".json")
            .c_str());
    expect(WEXITSTATUS(rc) == 0, "CLI run failed");
  }
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  std::string a = slurp(dir + "/a.json");
  expect(!a.empty(), "empty report");
  expect(a == slurp(dir + "/b.json"), "reports differ between runs");
#else
  expect(false, "CLI binary location not configured");
#endif
}

}  // namespace

int main() {
  run(1, "Gordan wedge cones vs brute force", gordan, 6.0);
  run(2, "Diophantine approximation suite, 100 random", diophantine, 5.0);
  run(3, "lower envelopes, 50 random convex samples", pwa_suite, 5.0);
  run(4, "local polytope criterion + circle control", polytope_criterion, 0);
  run(5, "Nakayama sigma suite on the catalog", nakayama, 10.0);
  run(6, "stable base locus vs Bs of multiples", stable_bs, 0);
  run(7, "adjoint polytopes: intervals + membership", adjoint, 0);
  run(8, "finite generation and descent", finite_generation, 30.0);
  run(9, "Fix function across the E-wall", fix_fn, 0);
  run(10, "CLI determinism on the demo scenario", determinism, 0);
  if (g_failures == 0) std::printf("all criteria passed\n");
  return g_failures;
}
