#include "adjring/serialize.hpp"

#include <stdexcept>

namespace adjring {

std::string int_str(const Int& n) { return n.get_str(); }

Json rat_json(const Rat& x) { return rat_str(x); }

Json quad_json(const Quad& x) {
  Json j;
  j["a"] = rat_str(x.a());
  j["b"] = rat_str(x.b());
  j["d"] = x.d();
  return j;
}

Json qvec_json(const QVector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(rat_str(v(i)));
  return j;
}

Json zvec_json(const ZVector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(int_str(v(i)));
  return j;
}

Json polytope_json(const Polytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json hs = Json::array();
  for (const HalfSpace& h : p.hrep()) {
    Json row;
    row["normal"] = qvec_json(h.normal);
    row["offset"] = rat_str(h.offset);
    hs.push_back(std::move(row));
  }
  j["hrep"] = std::move(hs);
  Json vs = Json::array();
  for (const QVector& v : p.vrep()) vs.push_back(qvec_json(v));
  j["vrep"] = std::move(vs);
  return j;
}

Json pwa_json(const PiecewiseAffineFn& f) {
  Json j;
  j["domain"] = polytope_json(f.domain);
  Json cells = Json::array();
  for (const PwaCell& c : f.cells) {
    Json cj;
    Json vs = Json::array();
    for (const QVector& v : c.cell.vrep()) vs.push_back(qvec_json(v));
    cj["vrep"] = std::move(vs);
    cj["grad"] = qvec_json(c.map.grad);
    cj["offset"] = rat_str(c.map.offset);
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return j;
}

Json monomial_json(const Monomial& m) {
  Json j;
  j["deg"] = zvec_json(m.deg);
  j["point"] = zvec_json(m.point);
  return j;
}

Int int_from(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer (number or string)");
}

Rat rat_from(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw std::invalid_argument("expected a rational \"p/q\" string");
}

Quad quad_from(const Json& j, long default_d) {
  if (j.is_string() || j.is_number_integer()) return Quad(rat_from(j));
  if (!j.is_object())
    throw std::invalid_argument("expected a quadratic field element");
  Rat a = j.contains("a") ? rat_from(j.at("a")) : Rat(0);
  Rat b = j.contains("b") ? rat_from(j.at("b")) : Rat(0);
  long d = j.contains("d") ? j.at("d").get<long>() : default_d;
  if (b == 0) return Quad(a);
  return Quad(a, b, d);
}

QVector qvec_from(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a vector");
  QVector v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const Json& e : j) v(i++) = rat_from(e);
  return v;
}

ZVector zvec_from(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an integer vector");
  ZVector v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const Json& e : j) v(i++) = int_from(e);
  return v;
}

}  // namespace adjring
