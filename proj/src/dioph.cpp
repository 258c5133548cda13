#include "adjring/dioph.hpp"

#include <optional>
#include <stdexcept>

namespace adjring {

ConvergentList convergents(const Quad& alpha, int count) {
  if (count < 1) throw std::invalid_argument("convergents: count must be >= 1");
  ConvergentList out;
  Quad a = alpha;
  Int p1(1), p2(0), q1(0), q2(1);
  for (int n = 0; n < count; ++n) {
    Int an = a.floor();
    Int p = an * p1 + p2;
    Int q = an * q1 + q2;
    Rat c(p, q);
    c.canonicalize();
    out.values.push_back(c);
    if (a == Quad(Rat(an))) {
      out.finite = true;
      break;
    }
    a = Quad(1) / (a - Quad(Rat(an)));
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  return out;
}

ApproximationResult approximate_in_polytope(const Polytope& p,
                                            const QuadVector& x, const Int& k,
                                            const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("approximate_in_polytope: eps <= 0");
  if (k <= 0) throw std::invalid_argument("approximate_in_polytope: k <= 0");
  if (!p.contains(x))
    throw std::domain_error("approximate_in_polytope: point outside polytope");

  const int n = p.dim();
  QVector u(n), w(n);
  long d = 0;
  for (int i = 0; i < n; ++i) {
    u(i) = x(i).a();
    w(i) = x(i).b();
    if (x(i).d() != 0) d = x(i).d();
  }

  bool rational = true;
  for (int i = 0; i < n; ++i)
    if (w(i) != 0) rational = false;

  if (rational) {
    Int c = common_denominator(u);
    ApproxPoint pt{u, Int(k * c), Quad(1)};
    return {{pt}};
  }

  int j = 0;
  while (w(j) == 0) ++j;
  Quad alpha(u(j), w(j), d);
  Rat wmax = sup_norm(w);

  Face face = p.face_of(x);
  const Polytope& carrier = *face.carrier;

  // Walk the continued fraction of the j-th coordinate; successive
  // convergents alternate sides, and the error bound eventually wins
  // against the k_i growth because the auxiliary denominators c_i stay
  // bounded while |alpha - p_i/q_i| < 1/q_i^2.
  struct Candidate {
    QVector x;
    Rat t;
    Int k;
  };
  std::optional<Candidate> below, above;
  Quad a = alpha;
  Int p1(1), p2(0), q1(0), q2(1);
  for (int iter = 0; iter < 300; ++iter) {
    Int an = a.floor();
    Int pc = an * p1 + p2;
    Int qc = an * q1 + q2;
    Rat t(pc, qc);
    t.canonicalize();
    a = Quad(1) / (a - Quad(Rat(an)));
    p2 = p1;
    p1 = pc;
    q2 = q1;
    q1 = qc;

    QVector xi = u + ((t - u(j)) / w(j)) * w;
    Int qden = t.get_den();
    Int ci = common_denominator(QVector(Rat(qden) * xi));
    Int ki = k * qden * ci;
    // a priori convergent bound: |alpha - p/q| < 1/q^2, scaled to the
    // sup-norm along the segment direction
    Rat guaranteed = Rat(1) / Rat(qden * qden) * (wmax / abs_rat(w(j)));
    if (!(guaranteed < eps / Rat(ki))) continue;
    if (!carrier.contains(xi)) continue;
    if (Quad(t) < alpha)
      below = Candidate{xi, t, ki};
    else
      above = Candidate{xi, t, ki};
    if (below && above) break;
  }
  if (!below || !above)
    throw std::runtime_error(
        "approximate_in_polytope: no bracketing pair found");

  // x = lam*below + (1-lam)*above along the segment
  Quad lam = (Quad(above->t) - alpha) / Quad(above->t - below->t);
  ApproximationResult res;
  res.points.push_back({below->x, below->k, lam});
  res.points.push_back({above->x, above->k, Quad(1) - lam});
  return res;
}

}  // namespace adjring
