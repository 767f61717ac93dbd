#include "eckardt/serialize.hpp"

#include "eckardt/errors.hpp"

namespace eckardt {

namespace {

std::array<Rat, 5> five_rats(const Json& arr, const char* what) {
  if (!arr.is_array() || arr.size() != 5) throw InvalidInput(std::string(what) + " must be an array of 5 rationals");
  std::array<Rat, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = rat_from_json(arr[i]);
  return out;
}

}  // namespace

Json to_json(const Rat& r) { return r.to_string(); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw InvalidInput("expected a rational string or an integer, got " + j.dump());
}

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out.push_back({{"exponents", it->first}, {"coeff", to_json(it->second)}});
  }
  return out;
}

MultiPoly poly_from_json(const Json& j, std::size_t num_vars) {
  if (!j.is_array()) throw InvalidInput("polynomial must be a JSON array of terms");
  MultiPoly p(num_vars);
  for (const auto& term : j) {
    const auto e = term.at("exponents").get<Exponents>();
    if (e.size() != num_vars) throw InvalidInput("exponent vector length mismatch");
    p.add_term(e, rat_from_json(term.at("coeff")));
  }
  return p;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const SylvesterPoint& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(to_json(c));
  return {{"sylvester", a}};
}

Json to_json(const ModuliPoint& p) {
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(to_json(c));
  return {{"moduli", a}, {"weights", kModuliWeights}};
}

SylvesterPoint sylvester_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sylvester")) throw InvalidInput("expected an object with a \"sylvester\" array");
  return SylvesterPoint(five_rats(j.at("sylvester"), "sylvester"));
}

ModuliPoint moduli_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("moduli")) throw InvalidInput("expected an object with a \"moduli\" array");
  if (j.contains("weights") && j.at("weights") != Json(kModuliWeights)) {
    throw InvalidInput("moduli weights must be [1,2,3,4,5]");
  }
  return ModuliPoint(five_rats(j.at("moduli"), "moduli"));
}

Json to_json(const PentVertex& v) {
  Json z = Json::array();
  for (const auto& c : v.z()) z.push_back(to_json(c));
  Json x = Json::array();
  for (const auto& c : v.p3()) x.push_back(to_json(c));
  return {{"name", v.name()}, {"indices", {v.i, v.j}}, {"z", z}, {"p3", x}};
}

Json stabilizer_summary(const PermSubgroup& g) {
  Json hist = Json::object();
  for (const auto& [order, count] : g.order_histogram()) hist[std::to_string(order)] = count;
  return {{"order", g.order()}, {"abelian", g.is_abelian()}, {"element_orders", hist}};
}

Json to_json(const LinearComponent& c) {
  return {{"kind", to_string(c.kind())},
          {"indices", c.indices()},
          {"name", c.name()},
          {"equations", to_json(c.equations())},
          {"parametrization", to_json(c.parametrization())}};
}

Json to_json(const MultiplicityReport& r) {
  Json diffs = Json::array();
  for (const auto& [i, j] : r.vanishing_differences) diffs.push_back("a" + std::to_string(j) + "-a" + std::to_string(i));
  Json orders = Json::array();
  for (const auto& o : r.direction_orders) orders.push_back(o ? Json(*o) : Json(nullptr));
  return {{"point", to_json(r.point)["sylvester"]},
          {"family", to_string(classify_family(r.point))},
          {"zero_coordinates", r.zero_coordinates},
          {"vanishing_factors", diffs},
          {"multiplicity", r.multiplicity},
          {"ordinary", r.ordinary ? Json(*r.ordinary) : Json(nullptr)},
          {"taylor_order", r.taylor_order ? Json(*r.taylor_order) : Json(nullptr)},
          {"direction_orders", orders},
          {"directions_agree", r.directions_agree}};
}

Json to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const CVec4& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const ComplexLine& l) {
  Json pl = Json::array();
  for (Eigen::Index i = 0; i < l.plucker.size(); ++i) pl.push_back(to_json(l.plucker(i)));
  return {{"points", {to_json(l.p), to_json(l.q)}}, {"plucker", pl}};
}

Json to_json(const EckardtCluster& c) {
  return {{"point", to_json(c.point)}, {"lines", c.lines}, {"spread", c.spread}, {"surface_residual", c.surface_residual}};
}

Json to_json(const TrackerConfig& cfg) {
  Json j = {{"paths", cfg.paths},
            {"initial_step", cfg.initial_step},
            {"max_step", cfg.max_step},
            {"min_step", cfg.min_step},
            {"track_tol", cfg.track_tol},
            {"corrector_tol", cfg.corrector_tol},
            {"divergence_norm", cfg.divergence_norm},
            {"endgame_start", cfg.endgame_start},
            {"dedup_tol", cfg.dedup_tol},
            {"residual_tol", cfg.residual_tol},
            {"seed", cfg.seed},
            {"max_attempts", cfg.max_attempts}};
  if (cfg.gamma) j["gamma"] = to_json(*cfg.gamma);
  return j;
}

}  // namespace eckardt
