#ifndef ADJRING_SERIALIZE_HPP
#define ADJRING_SERIALIZE_HPP

#include "adjring/dioph.hpp"
#include "adjring/pwa.hpp"
#include "adjring/rings.hpp"

#include <json.hpp>

#include <string>

namespace adjring {

// Insertion-ordered JSON so reports have stable field ordering and two
// runs of the same scenario are byte-identical.
using Json = nlohmann::ordered_json;

// All numbers travel as exact strings: rationals "p/q" (or "p"),
// integers in decimal.
std::string int_str(const Int& n);
Json rat_json(const Rat& x);
Json quad_json(const Quad& x);
Json qvec_json(const QVector& v);
Json zvec_json(const ZVector& v);
Json polytope_json(const Polytope& p);
Json pwa_json(const PiecewiseAffineFn& f);
Json monomial_json(const Monomial& m);

Int int_from(const Json& j);
Rat rat_from(const Json& j);
// default_d supplies the scenario's quadratic field when the element
// does not carry its own "d".
Quad quad_from(const Json& j, long default_d);
QVector qvec_from(const Json& j);
ZVector zvec_from(const Json& j);

}  // namespace adjring

#endif
