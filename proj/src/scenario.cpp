#include "adjring/scenario.hpp"

#include "adjring/monoid.hpp"
#include "adjring/toric.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace adjring {

namespace {

struct Context {
  bool has_fan = false;
  Fan fan;
  std::map<std::string, TorusDivisor> divisors;
  long field_d = 2;
  ScenarioOptions opt;
};

const Fan& need_fan(const Context& ctx) {
  if (!ctx.has_fan) throw ScenarioError("scenario declares no fan");
  return ctx.fan;
}

TorusDivisor divisor_arg(const Context& ctx, const Json& task,
                         const std::string& key) {
  if (!task.contains(key))
    throw ScenarioError("task is missing \"" + key + "\"");
  const Json& j = task.at(key);
  if (j.is_string()) {
    auto it = ctx.divisors.find(j.get<std::string>());
    if (it == ctx.divisors.end())
      throw ScenarioError("unknown divisor name " + j.get<std::string>());
    return it->second;
  }
  return qvec_from(j);
}

std::vector<TorusDivisor> divisor_list(const Context& ctx, const Json& task,
                                       const std::string& key) {
  if (!task.contains(key) || !task.at(key).is_array())
    throw ScenarioError("task needs a \"" + key + "\" array");
  std::vector<TorusDivisor> out;
  for (const Json& j : task.at(key)) {
    if (j.is_string()) {
      auto it = ctx.divisors.find(j.get<std::string>());
      if (it == ctx.divisors.end())
        throw ScenarioError("unknown divisor name " + j.get<std::string>());
      out.push_back(it->second);
    } else {
      out.push_back(qvec_from(j));
    }
  }
  return out;
}

Polytope polytope_arg(const Json& j) {
  if (!j.is_object() || !j.contains("vrep"))
    throw ScenarioError("expected a polytope as {\"vrep\": [[..]]}");
  std::vector<QVector> pts;
  for (const Json& row : j.at("vrep")) pts.push_back(qvec_from(row));
  if (pts.empty()) throw ScenarioError("polytope needs at least one vertex");
  return Polytope::from_vrep(static_cast<int>(pts[0].size()), pts);
}

Json cones_json(const std::vector<std::vector<int>>& cones) {
  Json j = Json::array();
  for (const auto& c : cones) j.push_back(c);
  return j;
}

Json linear_system_json(const LinearSystem& ls) {
  Json j;
  j["h0"] = ls.points.size();
  Json pts = Json::array();
  for (const ZVector& u : ls.points) pts.push_back(zvec_json(u));
  j["points"] = std::move(pts);
  j["fixed_part"] = qvec_json(ls.fixed_part);
  j["mobile_part"] = qvec_json(ls.mobile_part);
  return j;
}

SectionRing ring_arg(const Context& ctx, const Json& task) {
  return section_ring(need_fan(ctx), divisor_list(ctx, task, "divisors"));
}

Json generator_rows(const SectionRing& r, const GeneratorSet& gs) {
  Json rows = Json::array();
  for (const ZVector& m : multidegrees_up_to(r, gs.bound)) {
    bool zero = true;
    for (Eigen::Index i = 0; i < m.size(); ++i)
      if (m(i) != 0) zero = false;
    if (zero) continue;
    for (const ZVector& u : graded_piece(r, m)) {
      bool gen = false;
      for (const Monomial& g : gs.elements)
        if (g.deg == m && g.point == u) gen = true;
      Json row;
      row["multidegree"] = zvec_json(m);
      row["point"] = zvec_json(u);
      row["is_generator"] = gen;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Json run_task(const Context& ctx, const std::string& name, const Json& task) {
  Json out;
  if (name == "validate-fan") {
    FanReport rep = validate_fan(need_fan(ctx));
    out["smooth"] = rep.smooth;
    out["complete"] = rep.complete;
    out["projective"] = rep.projective;
    Json dets = Json::array();
    for (const Int& d : rep.determinants) dets.push_back(int_str(d));
    out["determinants"] = std::move(dets);
    out["unpaired_facets"] = cones_json(rep.unpaired_facets);
    out["support_function"] =
        rep.support_function ? qvec_json(*rep.support_function) : Json();
  } else if (name == "h0" || name == "fix") {
    TorusDivisor d = floor_div(divisor_arg(ctx, task, "divisor"));
    out = linear_system_json(global_sections(need_fan(ctx), d));
  } else if (name == "base-locus") {
    TorusDivisor d = floor_div(divisor_arg(ctx, task, "divisor"));
    out["cones"] = cones_json(base_locus(need_fan(ctx), d));
  } else if (name == "stable-base-locus") {
    StableBaseLocus b =
        stable_base_locus(need_fan(ctx), divisor_arg(ctx, task, "divisor"));
    out["everything"] = b.everything;
    out["cones"] = cones_json(b.cones);
    out["q0"] = int_str(b.q0);
  } else if (name == "positivity") {
    Positivity p = positivity(need_fan(ctx), divisor_arg(ctx, task, "divisor"));
    out["pseudoeffective"] = p.pseudoeffective;
    out["big"] = p.big;
    out["nef"] = p.nef;
    out["ample"] = p.ample;
  } else if (name == "sigma" || name == "nsigma") {
    ZariskiData z =
        sigma_decomposition(need_fan(ctx), divisor_arg(ctx, task, "divisor"),
                            divisor_arg(ctx, task, "ample"));
    if (name == "sigma") {
      out["sigma"] = qvec_json(z.sigma);
    } else {
      out["n_sigma"] = qvec_json(z.n_sigma);
      out["positive_part"] = qvec_json(z.positive_part);
    }
  } else if (name == "adjoint-polytopes") {
    AdjointScenario sc;
    sc.fan = need_fan(ctx);
    sc.s = task.at("s").get<int>();
    sc.v = task.at("v").get<std::vector<int>>();
    sc.a = divisor_arg(ctx, task, "ample");
    AdjointPolytopes ap = adjoint_polytopes(sc);
    out["l"] = polytope_json(ap.l);
    out["e"] = polytope_json(ap.e);
    out["b"] = polytope_json(ap.b);
  } else if (name == "phi") {
    AdjointScenario sc;
    sc.fan = need_fan(ctx);
    sc.s = task.at("s").get<int>();
    sc.v = task.at("v").get<std::vector<int>>();
    sc.a = divisor_arg(ctx, task, "ample");
    QVector b = qvec_from(task.at("b"));
    PhiResult pr = task.contains("m")
                       ? phi(sc, b, int_from(task.at("m")))
                       : phi_asymptotic(sc, b);
    out["value"] = qvec_json(pr.value);
    out["k0"] = int_str(pr.k0);
  } else if (name == "hilbert-basis") {
    std::vector<QVector> gens;
    for (const Json& row : task.at("generators")) gens.push_back(qvec_from(row));
    if (gens.empty()) throw ScenarioError("hilbert-basis needs generators");
    HilbertBasis hb = hilbert_basis(
        Cone::from_generators(static_cast<int>(gens[0].size()), gens));
    Json elems = Json::array();
    for (const ZVector& e : hb.elements) elems.push_back(zvec_json(e));
    out["elements"] = std::move(elems);
  } else if (name == "diophantine") {
    Polytope p = polytope_arg(task.at("polytope"));
    const Json& xj = task.at("x");
    QuadVector x(static_cast<Eigen::Index>(xj.size()));
    Eigen::Index i = 0;
    for (const Json& e : xj) x(i++) = quad_from(e, ctx.field_d);
    ApproximationResult res = approximate_in_polytope(
        p, x, int_from(task.at("k")), rat_from(task.at("eps")));
    Json pts = Json::array();
    for (const ApproxPoint& ap : res.points) {
      Json pj;
      pj["x"] = qvec_json(ap.x);
      pj["k"] = int_str(ap.k);
      pj["weight"] = quad_json(ap.weight);
      pts.push_back(std::move(pj));
    }
    out["points"] = std::move(pts);
  } else if (name == "ring-generators") {
    SectionRing r = ring_arg(ctx, task);
    GeneratorSet gs = minimal_generators(r, rat_from(task.at("bound")));
    out["rows"] = generator_rows(r, gs);
    out["generator_count"] = gs.elements.size();
    out["saturated"] = gs.verdict;
  } else if (name == "verify-generation") {
    SectionRing r = ring_arg(ctx, task);
    Rat bound = rat_from(task.at("bound"));
    GeneratorSet gs = minimal_generators(r, bound);
    GenerationVerdict v = verify_generation(r, gs.elements, bound);
    out["generated"] = v.generated;
    out["counterexample"] =
        v.counterexample ? monomial_json(*v.counterexample) : Json();
  } else if (name == "fix-function") {
    Polytope p = polytope_arg(task.at("polytope"));
    Int kmax = task.contains("kmax") ? int_from(task.at("kmax")) : ctx.opt.kmax;
    FixFunction ff = fix_function(need_fan(ctx), p, kmax);
    out["k"] = ff.k ? Json(int_str(*ff.k)) : Json();
    Json per = Json::array();
    for (const PiecewiseAffineFn& f : ff.per_ray) per.push_back(pwa_json(f));
    out["per_ray"] = std::move(per);
  } else if (name == "veronese") {
    SectionRing r = ring_arg(ctx, task);
    const Json& lj = task.at("lattice");
    ZMatrix l(r.grading.rank, static_cast<Eigen::Index>(lj.size()));
    Eigen::Index col = 0;
    for (const Json& cj : lj) l.col(col++) = zvec_from(cj);
    SectionRing v = veronese_ring(r, l);
    GeneratorSet gs = minimal_generators(v, rat_from(task.at("bound")));
    Json elems = Json::array();
    for (const Monomial& m : gs.elements) elems.push_back(monomial_json(m));
    out["elements"] = std::move(elems);
    out["saturated"] = gs.verdict;
  } else if (name == "cox-descent") {
    SectionRing r = ring_arg(ctx, task);
    std::vector<CoxPiece> pieces;
    for (const Json& pj : task.at("pieces")) {
      CoxPiece pc;
      pc.s = pj.at("s").get<int>();
      pc.monoid.rank = r.grading.rank;
      for (const Json& g : pj.at("monoid")) {
        pc.monoid.generators.push_back(zvec_from(g));
      }
      pc.sigma = {zvec_from(pj.at("sigma").at("deg")),
                  zvec_from(pj.at("sigma").at("point"))};
      if (pj.contains("restricted_gens"))
        for (const Json& g : pj.at("restricted_gens"))
          pc.restricted_gens.push_back(
              {zvec_from(g.at("deg")), zvec_from(g.at("point"))});
      pieces.push_back(std::move(pc));
    }
    GeneratorSet gs =
        cox_descent_generators(r, pieces, rat_from(task.at("threshold")),
                               rat_from(task.at("bound")));
    Json elems = Json::array();
    for (const Monomial& m : gs.elements) elems.push_back(monomial_json(m));
    out["elements"] = std::move(elems);
    out["verdict"] = gs.verdict;
  } else {
    throw ScenarioError("unknown task " + name);
  }
  return out;
}

void csv_flatten(const Json& j, const std::string& prefix,
                 std::ostringstream& os, int index,
                 const std::string& task) {
  if (j.is_object() || j.is_array()) {
    if (j.empty()) return;
    int k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      std::string key = j.is_object() ? it.key() : std::to_string(k);
      csv_flatten(*it, prefix.empty() ? key : prefix + "/" + key, os, index,
                  task);
    }
    return;
  }
  os << index << ',' << task << ',' << prefix << ',';
  if (j.is_string()) {
    os << j.get<std::string>();
  } else if (j.is_boolean()) {
    os << (j.get<bool>() ? "true" : "false");
  } else if (j.is_null()) {
    os << "null";
  } else {
    os << j.dump();
  }
  os << '\n';
}

}  // namespace

Report run_scenario(const Json& scenario, const ScenarioOptions& opt) {
  if (!scenario.is_object()) throw ScenarioError("scenario must be an object");
  Context ctx;
  ctx.opt = opt;
  if (scenario.contains("fan")) {
    const Json& fj = scenario.at("fan");
    try {
      if (fj.contains("preset")) {
        ctx.fan = fan_preset(fj.at("preset").get<std::string>());
      } else {
        ctx.fan.dim = fj.at("dim").get<int>();
        for (const Json& r : fj.at("rays")) ctx.fan.rays.push_back(zvec_from(r));
        for (const Json& c : fj.at("max_cones"))
          ctx.fan.max_cones.push_back(c.get<std::vector<int>>());
      }
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(e.what());
    }
    ctx.has_fan = true;
  }
  if (scenario.contains("field_d"))
    ctx.field_d = scenario.at("field_d").get<long>();
  if (scenario.contains("divisors")) {
    for (auto it = scenario.at("divisors").begin();
         it != scenario.at("divisors").end(); ++it)
      ctx.divisors[it.key()] = qvec_from(it.value());
  }

  Report rep;
  if (!scenario.contains("tasks")) return rep;
  int index = 0;
  for (const Json& task : scenario.at("tasks")) {
    if (!task.is_object() || !task.contains("task"))
      throw ScenarioError("each task needs a \"task\" name");
    std::string name = task.at("task").get<std::string>();
    Json entry;
    entry["index"] = index++;
    entry["task"] = name;
    try {
      Json result = run_task(ctx, name, task);
      entry["ok"] = true;
      entry["result"] = std::move(result);
    } catch (const ScenarioError&) {
      throw;  // schema problems abort the run
    } catch (const CoxHypothesisError& e) {
      entry["ok"] = false;
      entry["error"] = e.what();
      entry["witness"] = zvec_json(e.witness);
      rep.ok = false;
    } catch (const std::exception& e) {
      entry["ok"] = false;
      entry["error"] = e.what();
      rep.ok = false;
    }
    rep.tasks.push_back(std::move(entry));
  }
  return rep;
}

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") {
    Json j;
    j["ok"] = r.ok;
    j["tasks"] = r.tasks;
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "index,task,field,value\n";
    for (const Json& t : r.tasks) {
      int index = t.at("index").get<int>();
      std::string name = t.at("task").get<std::string>();
      csv_flatten(t.contains("result") ? t.at("result") : t.at("error"), "",
                  os, index, name);
    }
    return os.str();
  }
  throw ScenarioError("unknown format " + format);
}

}  // namespace adjring
