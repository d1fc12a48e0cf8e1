#include "rpm/serialize.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rpm {

Json to_json(const HeightPath& path) {
  Json h = Json::array();
  for (Height x : path.heights()) h.push_back(x);
  return {{"L", path.size()}, {"family", to_string(path.family())}, {"heights", h}};
}

HeightPath path_from_json(const Json& j) {
  const auto family = parse_family(j.at("family").get<std::string>());
  if (!family) throw std::invalid_argument("unknown family " + j.at("family").dump());
  return HeightPath(*family, j.at("heights").get<std::vector<Height>>());
}

Json to_json(const Summary& s) {
  return {{"S", s.S.get_str()}, {"m", s.m.get_str()}, {"M", s.M.get_str()}, {"mult_m", s.mult_m},
          {"mult_M", s.mult_M}};
}

Json to_json(const StationaryState& state) {
  Json paths = Json::array();
  for (std::size_t i = 0; i < state.size(); ++i) {
    Json h = Json::array();
    for (Height x : state.space()[i].heights()) h.push_back(x);
    paths.push_back({{"heights", h}, {"weight", state.weights()[i].get_str()}});
  }
  return {{"model", to_string(state.model())},
          {"L", state.L()},
          {"family", to_string(state.space().family())},
          {"c", state.spec().c},
          {"cbar", state.spec().cbar},
          {"summary", to_json(summarize(state))},
          {"paths", paths}};
}

StationaryState state_from_json(const Json& j) {
  const auto model = parse_model(j.at("model").get<std::string>());
  if (!model) throw std::invalid_argument("unknown model " + j.at("model").dump());
  const int L = j.at("L").get<int>();
  auto space = std::make_shared<const PathSpace>(family_of(*model), L);
  std::vector<Integer> weights(space->size());
  std::vector<bool> seen(space->size(), false);
  for (const Json& e : j.at("paths")) {
    const auto heights = e.at("heights").get<std::vector<Height>>();
    const auto idx = space->index_of(HeightPath(space->family(), heights));
    if (!idx || seen[*idx]) throw std::invalid_argument("path list does not match the family");
    seen[*idx] = true;
    weights[*idx] = Integer(e.at("weight").get<std::string>());
  }
  for (bool s : seen) {
    if (!s) throw std::invalid_argument("path list does not cover the family");
  }
  return StationaryState(ModelSpec::of(*model, L), std::move(space), std::move(weights));
}

Json to_json(const DetailedStats& d, Model model, int L) {
  Json s = Json::object(), m = Json::object();
  for (const auto& [N, v] : d.S_LN) s[std::to_string(N)] = v.get_str();
  for (const auto& [N, v] : d.M_LN) m[std::to_string(N)] = v.get_str();
  Json out{{"model", to_string(model)}, {"L", L}, {"S_LN", s}, {"M_LN", m}};
  if (model == Model::B) {
    Json sigma = Json::array();
    for (const auto& [key, v] : d.Sigma_LNM) sigma.push_back({{"N", key.first}, {"M", key.second}, {"value", v.get_str()}});
    out["Sigma_LNM"] = sigma;
  }
  return out;
}

Json to_json(const Orbit& orbit, const StationaryState* state) {
  Json members = Json::array();
  Integer sum = 0;
  for (const HeightPath& p : orbit.members) {
    Json h = Json::array();
    for (Height x : p.heights()) h.push_back(x);
    Json e{{"heights", h}};
    if (state) {
      const Integer& w = state->weight(p);
      e["weight"] = w.get_str();
      sum += w;
    }
    members.push_back(e);
  }
  Json out{{"generator", to_json(orbit.generator)},
           {"level", orbit.level},
           {"side", to_string(orbit.side)},
           {"eligible", orbit.eligible_count},
           {"size", orbit.members.size()},
           {"members", members}};
  if (state) out["sum"] = sum.get_str();
  return out;
}

Json to_json(const VerificationReport& report) {
  Json models = Json::array();
  for (Model m : report.models) models.push_back(to_string(m));
  Json inst = Json::array();
  for (const Instance& i : report.instances) {
    Json e{{"label", i.label}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"pass", i.pass}};
    if (i.informational) e["informational"] = true;
    inst.push_back(e);
  }
  return {{"id", report.id},         {"models", models},
          {"L_min", report.L_min},   {"L_max", report.L_max},
          {"pass", report.passed()}, {"failures", report.failures()},
          {"notes", report.notes},   {"instances", inst}};
}

Json to_json(const std::vector<RelationCheck>& checks) {
  Json out = Json::array();
  for (const RelationCheck& c : checks) {
    out.push_back({{"relation", c.relation}, {"point", c.point}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
  }
  return out;
}

Json to_json(const SimResult& r) {
  Json hist = Json::object();
  for (const auto& [size, n] : r.avalanches) hist[std::to_string(size)] = n;
  Json rel = std::isfinite(r.distance.max_rel_err) ? Json(r.distance.max_rel_err) : Json(nullptr);
  return {{"model", to_string(r.model)}, {"L", r.L},           {"steps", r.steps},
          {"burn_in", r.burn_in},        {"seed", r.seed},     {"rng", r.rng},
          {"tv", r.distance.tv},         {"max_rel_err", rel}, {"counts", r.counts},
          {"exact", r.exact},            {"avalanches", hist}};
}

Json to_json(const std::vector<AsmRow>& rows) {
  Json out = Json::array();
  for (const AsmRow& r : rows) {
    Json e{{"n", r.n}, {"A", r.A.get_str()}, {"AHT", r.AHT.get_str()}};
    e["AV"] = r.AV ? Json(r.AV->get_str()) : Json(nullptr);
    e["AVH"] = r.AVH ? Json(r.AVH->get_str()) : Json(nullptr);
    out.push_back(e);
  }
  return out;
}

std::string state_csv(const StationaryState& state) {
  std::ostringstream out;
  out << "index,heights,weight\n";
  for (std::size_t i = 0; i < state.size(); ++i) {
    out << i << ",\"" << state.space()[i].str() << "\"," << state.weights()[i].get_str() << '\n';
  }
  return out.str();
}

std::string asm_csv(const std::vector<AsmRow>& rows) {
  std::ostringstream out;
  out << "n,A,AV,AVH,AHT\n";
  for (const AsmRow& r : rows) {
    out << r.n << ',' << r.A.get_str() << ',' << (r.AV ? r.AV->get_str() : "") << ','
        << (r.AVH ? r.AVH->get_str() : "") << ',' << r.AHT.get_str() << '\n';
  }
  return out.str();
}

std::string histogram_csv(const SimResult& r) {
  std::ostringstream out;
  out << "desorbed,count\n";
  for (const auto& [size, n] : r.avalanches) out << size << ',' << n << '\n';
  return out.str();
}

std::string checks_csv(const std::vector<RelationCheck>& checks) {
  std::ostringstream out;
  out << "relation,point,lhs,rhs,pass\n";
  for (const RelationCheck& c : checks) {
    out << '"' << c.relation << "\",\"" << c.point << "\"," << c.lhs << ',' << c.rhs << ','
        << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

Json output_schema() {
  const Json bigint{{"type", "string"}, {"pattern", "^-?[0-9]+$"}};
  const Json rational{{"type", "string"}, {"pattern", "^-?[0-9]+(/[0-9]+)?$"}};
  const Json heights{{"type", "array"}, {"items", {{"type", "integer"}}}};
  const Json path{{"type", "object"},
                  {"properties", {{"L", {{"type", "integer"}}}, {"family", {{"type", "string"}}}, {"heights", heights}}}};
  return {
      {"enumerate", {{"type", "array"}, {"items", path}}},
      {"stationary",
       {{"type", "object"},
        {"properties",
         {{"model", {{"enum", {"A", "B", "C"}}}},
          {"L", {{"type", "integer"}}},
          {"family", {{"type", "string"}}},
          {"c", {{"type", "integer"}}},
          {"cbar", {{"type", "integer"}}},
          {"summary",
           {{"type", "object"},
            {"properties", {{"S", bigint}, {"m", bigint}, {"M", bigint}, {"mult_m", {{"type", "integer"}}},
                            {"mult_M", {{"type", "integer"}}}}}}},
          {"paths",
           {{"type", "array"},
            {"items", {{"type", "object"}, {"properties", {{"heights", heights}, {"weight", bigint}}}}}}}}}}},
      {"detailed",
       {{"type", "object"},
        {"properties",
         {{"S_LN", {{"type", "object"}, {"additionalProperties", bigint}}},
          {"M_LN", {{"type", "object"}, {"additionalProperties", bigint}}},
          {"Sigma_LNM", {{"type", "array"}, {"items", {{"type", "object"}, {"properties", {{"value", bigint}}}}}}}}}}},
      {"orbits",
       {{"type", "array"},
        {"items",
         {{"type", "object"},
          {"properties",
           {{"generator", path},
            {"level", {{"type", "integer"}}},
            {"side", {{"enum", {"left", "right"}}}},
            {"eligible", {{"type", "integer"}}},
            {"size", {{"type", "integer"}}},
            {"members", {{"type", "array"}}},
            {"sum", bigint}}}}}}},
      {"hexagon", {{"type", "object"}, {"properties", {{"window", {{"type", "object"}}}, {"values", {{"type", "object"}, {"additionalProperties", rational}}}, {"checks", {{"type", "array"}}}}}}},
      {"poly", {{"type", "object"}, {"properties", {{"family", {{"enum", {"F", "G"}}}}, {"polynomials", {{"type", "object"}, {"additionalProperties", {{"type", "string"}}}}}}}}},
      {"asm", {{"type", "object"}, {"properties", {{"table", {{"type", "array"}}}, {"identities", {{"type", "array"}}}}}}},
      {"verify",
       {{"type", "array"},
        {"items",
         {{"type", "object"},
          {"properties",
           {{"id", {{"type", "string"}}},
            {"pass", {{"type", "boolean"}}},
            {"failures", {{"type", "integer"}}},
            {"instances",
             {{"type", "array"},
              {"items",
               {{"type", "object"},
                {"properties", {{"label", {{"type", "string"}}}, {"lhs", rational}, {"rhs", rational},
                                {"pass", {{"type", "boolean"}}}, {"informational", {{"type", "boolean"}}}}}}}}}}}}}}},
      {"simulate",
       {{"type", "object"},
        {"properties",
         {{"rng", {{"type", "string"}}},
          {"tv", {{"type", "number"}}},
          {"max_rel_err", {{"type", {"number", "null"}}}},
          {"counts", {{"type", "array"}, {"items", {{"type", "integer"}}}}},
          {"avalanches", {{"type", "object"}, {"additionalProperties", {{"type", "integer"}}}}}}}}},
  };
}

}  // namespace rpm
