#include "weyltrunc/serialize.hpp"

#include "weyltrunc/errors.hpp"

namespace weyltrunc {

Json to_json(const Weight& x) {
  Json a = Json::array();
  for (auto c : x.coords()) a.push_back(c);
  return a;
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("weight must be a JSON array of integers");
  std::vector<std::int64_t> coords;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw ConfigError("weight coordinates must be integers");
    coords.push_back(c.get<std::int64_t>());
  }
  return Weight(std::span<const std::int64_t>(coords));
}

Json to_json(const WeylElement& w) {
  Json a = Json::array();
  for (auto s : w.word()) a.push_back(static_cast<int>(s) + 1);
  return a;
}

Json to_json(const VerificationReport& r, bool with_timing) {
  Json j;
  j["check_id"] = r.check_id;
  j["passed"] = r.passed;
  if (!r.asserted) j["asserted"] = false;
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  j["counts"] = counts;
  Json cx = Json::array();
  for (const auto& tuple : r.counterexamples) {
    Json t = Json::array();
    for (const auto& w : tuple) t.push_back(to_json(w));
    cx.push_back(t);
  }
  j["counterexamples"] = cx;
  j["elapsed_ms"] = (with_timing && r.elapsed_ms) ? Json(*r.elapsed_ms) : Json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.checks.empty()) {
    Json subs = Json::array();
    for (const auto& c : r.checks) subs.push_back(to_json(c, with_timing));
    j["checks"] = subs;
  }
  return j;
}

Json describe(const RootSystem& rs) {
  Json j;
  j["type"] = std::string(1, rs.spec().type_letter);
  j["rank"] = rs.rank();
  Json cartan = Json::array();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < rs.rank(); ++k) row.push_back(rs.cartan(i, k));
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  Json roots = Json::array();
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    Json r;
    r["weight"] = to_json(rs.positive_roots()[k]);
    r["simple_root_coefficients"] = rs.root_coefficients(k);
    r["short"] = rs.is_short(k);
    roots.push_back(r);
  }
  j["positive_roots"] = roots;
  j["rho"] = to_json(rs.rho());
  j["alpha0"] = to_json(rs.alpha0());
  j["coxeter_number"] = rs.coxeter_number();
  j["weyl_order"] = rs.weyl_order();
  return j;
}

}  // namespace weyltrunc
