#pragma once

#include <json.hpp>

#include "eckardt/arith/multi_poly.hpp"
#include "eckardt/arith/rat.hpp"
#include "eckardt/arith/rat_matrix.hpp"
#include "eckardt/invariants.hpp"
#include "eckardt/lines.hpp"
#include "eckardt/pentahedron.hpp"
#include "eckardt/singular.hpp"

namespace eckardt {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rat& r);
/// Accepts "p/q" strings and JSON integers. Throws InvalidInput.
Rat rat_from_json(const Json& j);

/// [{exponents: [...], coeff: "p/q"}, ...], leading (grlex-largest) term first.
Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, std::size_t num_vars);

Json to_json(const RatMatrix& m);
Json to_json(const SylvesterPoint& s);  // {"sylvester": [...]}
Json to_json(const ModuliPoint& p);     // {"moduli": [...], "weights": [1,2,3,4,5]}
SylvesterPoint sylvester_from_json(const Json& j);
ModuliPoint moduli_from_json(const Json& j);

Json to_json(const PentVertex& v);
Json stabilizer_summary(const PermSubgroup& g);
Json to_json(const LinearComponent& c);
Json to_json(const MultiplicityReport& r);

Json to_json(const Complex& c);  // [re, im]
Json to_json(const CVec4& v);
Json to_json(const ComplexLine& l);
Json to_json(const EckardtCluster& c);
Json to_json(const TrackerConfig& cfg);

}  // namespace eckardt
