#include "mwlat/io/report.hpp"

#include "mwlat/error.hpp"
#include "mwlat/io/parse.hpp"

namespace mwlat {

using nlohmann::json;

namespace {

json type_list(const std::vector<KodairaType>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back(t.name());
  return a;
}

json points_json(const std::vector<FFPoint>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Integer integer_from(const json& j, const char* what) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw ParseError(std::string("GModule: ") + what + " must be an integer");
}

}  // namespace

json element_json(const NFElement& a) {
  json out = json::array();
  for (const auto& q : a.rep()) out.push_back(to_string(q));
  return out;
}

json model_json(const WeierstrassModel& m) {
  auto coeffs = [](const HomPoly& h) {
    json a = json::array();
    for (long i = 0; i <= h.degree(); ++i) a.push_back(element_json(h.coeff(i)));
    return a;
  };
  return {{"text", m.to_string()},
          {"affine", m.affine_string()},
          {"field", field_spec_string(m.field())},
          {"d", m.d()},
          {"f", coeffs(m.f())},
          {"g", coeffs(m.g())}};
}

json fiber_configuration_json(const FiberConfiguration& c, long rho) {
  json fibers = json::array();
  for (const auto& f : c.fibers)
    fibers.push_back({{"place", f.place.to_string()},
                      {"degree", f.degree()},
                      {"type", f.type.name()},
                      {"v_f", f.v_f == kInfiniteValuation ? json("inf") : json(f.v_f)},
                      {"v_g", f.v_g == kInfiniteValuation ? json("inf") : json(f.v_g)},
                      {"v_delta", f.v_delta},
                      {"components", f.components}});
  return {{"fibers", fibers},
          {"summary", c.to_string()},
          {"total_delta_degree", c.total_delta_degree},
          {"trivial_lattice_excess", c.trivial_lattice_excess()},
          {"rho", rho},
          {"rank", shioda_tate_rank(c, rho)}};
}

json configuration_json(const Configuration& c) {
  return {{"at_zero", c.at_zero.name()}, {"at_infinity", c.at_infinity.name()}, {"remaining", type_list(c.remaining)}};
}

json base_change_json(const BaseChangeReport& r) {
  json transitions = json::array();
  for (const auto& t : r.transitions)
    transitions.push_back({{"place", t.before.place.to_string()},
                           {"before", t.before.type.name()},
                           {"after", t.after.name()},
                           {"copies", t.copies}});
  return {{"p", r.p},
          {"before", model_json(r.before)},
          {"pulled_back", r.pulled_back.to_string()},
          {"after", model_json(r.after)},
          {"config_before", r.config_before.to_string()},
          {"config_after", r.config_after.to_string()},
          {"epsilon", r.epsilon},
          {"steps_zero", r.steps_zero},
          {"steps_infinity", r.steps_infinity},
          {"degree_before", r.degree_before},
          {"degree_after", r.degree_after},
          {"l_stable", r.l_stable},
          {"transitions", transitions}};
}

json h1_json(const H1Result& h) {
  json f = json::array();
  for (const auto& d : h.invariant_factors) f.push_back(d.get_str());
  return {{"invariant_factors", f}, {"order", h.order().get_str()}, {"text", h.to_string()}};
}

json verdict_json(const StabilityVerdict& v) {
  return {{"rank_before", v.rank_before}, {"rank_after", v.rank_after}, {"p", v.p},
          {"jump", v.jump},               {"rank_stable", v.rank_stable}, {"consistent", v.consistent}};
}

json family_json(const FamilyReport& r) {
  return {{"count", r.count},
          {"expected_count", r.expected_count},
          {"shape_violations", r.shape_violations},
          {"off_curve", r.off_curve},
          {"sigma_fixed", r.sigma_fixed},
          {"ok", r.ok()},
          {"points", points_json(r.points)}};
}

json configuration_table_json(const RationalClassification& c) {
  auto row_json = [](const ConfigRow& r) {
    return json{{"row", r.number},
                {"any_p", r.any_p},
                {"p", r.any_p ? json(nullptr) : json(r.p)},
                {"p_label", r.p_label()},
                {"configuration", configuration_json(r.config)},
                {"epsilon", r.epsilon},
                {"realization", r.realization},
                {"isotrivial", r.isotrivial}};
  };
  json rows = json::array(), extra = json::array();
  for (const auto& r : c.rows) rows.push_back(row_json(r));
  for (const auto& r : c.extra) extra.push_back(row_json(r));
  return {{"rows", rows}, {"extra", extra}, {"candidates", c.candidates},
          {"rejected", static_cast<long>(c.rejected.size())}};
}

json summary_table_json(const std::vector<SummaryRow>& rows) {
  json out = json::array();
  for (const auto& s : rows)
    out.push_back({{"row", s.row.number},
                   {"p_label", s.row.p_label()},
                   {"primes", s.primes},
                   {"configuration", configuration_json(s.row.config)},
                   {"model_before", s.model_before},
                   {"model_after", s.model_after},
                   {"config_after", configuration_json(s.config_after)},
                   {"rank_before", s.rank_before},
                   {"rank_after", s.rank_after},
                   {"verdict", verdict_json(s.verdict)},
                   {"kernel", h1_json(s.kernel)},
                   {"kernel_method", s.kernel_method}});
  return out;
}

GModule gmodule_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("GModule: expected a JSON object");
  for (const char* key : {"n", "rank", "sigma"})
    if (!j.contains(key)) throw ParseError(std::string("GModule: missing field '") + key + "'");
  GModule m;
  const Integer n = integer_from(j["n"], "n");
  const Integer rank = integer_from(j["rank"], "rank");
  if (n < 1 || !n.fits_slong_p()) throw ParseError("GModule: n must be a positive integer");
  if (rank < 0 || !rank.fits_slong_p()) throw ParseError("GModule: rank must be nonnegative");
  m.n = n.get_si();
  m.rank = static_cast<std::size_t>(rank.get_si());
  if (j.contains("torsion")) {
    if (!j["torsion"].is_array()) throw ParseError("GModule: torsion must be an array");
    for (const auto& t : j["torsion"]) {
      Integer d = integer_from(t, "torsion order");
      if (d < 2) throw ParseError("GModule: torsion orders must be at least 2");
      m.torsion.push_back(d);
    }
  }
  const std::size_t k = m.generators();
  const json& s = j["sigma"];
  if (!s.is_array() || s.size() != k) throw ParseError("GModule: sigma must have " + std::to_string(k) + " rows");
  m.sigma = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!s[i].is_array() || s[i].size() != k)
      throw ParseError("GModule: sigma row " + std::to_string(i) + " must have " + std::to_string(k) + " entries");
    for (std::size_t c = 0; c < k; ++c) m.sigma(i, c) = integer_from(s[i][c], "sigma entry");
  }
  return m;
}

}  // namespace mwlat
