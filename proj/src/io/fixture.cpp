#include "mwlat/io/fixture.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"
#include "mwlat/error.hpp"
#include "mwlat/io/parse.hpp"

#ifndef MWLAT_SOURCE_DIR
#define MWLAT_SOURCE_DIR "."
#endif

namespace mwlat {

namespace {

using nlohmann::json;

NFElement element(const json& j, const FieldPtr& field) {
  if (!j.is_array() || j.size() != field->degree())
    throw FixtureError("coefficient vector must have " + std::to_string(field->degree()) + " entries");
  Coeffs c;
  for (const auto& e : j) c.push_back(parse_rational(e.get<std::string>()));
  return NFElement(field, std::move(c));
}

Poly poly(const json& j, const FieldPtr& field) {
  std::vector<NFElement> cs;
  for (const auto& e : j) cs.push_back(element(e, field));
  return Poly(field, std::move(cs));
}

RatFunc ratfunc(const json& j, const FieldPtr& field) {
  Poly num = poly(j.at("num"), field);
  if (!j.contains("den")) return RatFunc(std::move(num));
  return RatFunc(std::move(num), poly(j.at("den"), field));
}

FFPoint point(const json& j, const FieldPtr& field) {
  return FFPoint::affine(ratfunc(j.at("x"), field), ratfunc(j.at("y"), field));
}

}  // namespace

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("fixture not found: " + path.string());
  try {
    const json j = json::parse(in);
    const FieldPtr field = parse_field_spec(j.at("field").get<std::string>());
    WeierstrassModel model = parse_model(j.at("model").get<std::string>(), field);
    const long p = j.at("p").get<long>();
    NFElement zeta = parse_element(j.at("zeta").get<std::string>(), field);
    GeneratorFamily fam{j.at("seed").at("name").get<std::string>(), point(j.at("seed"), field), {},
                        j.at("expected_count").get<long>(), j.at("shape").get<long>()};
    for (const auto& r : j.at("recipes")) fam.recipes.push_back({r.at("name"), r.at("expr")});
    if (fam.expected_count <= 0) throw FixtureError("expected_count must be positive");
    if (!on_curve(model, fam.seed)) throw FixtureError("seed " + fam.seed_name + " is not on " + model.affine_string());
    std::optional<FFPoint> tr;
    if (j.contains("expected_trace")) {
      tr = point(j.at("expected_trace"), field);
      if (!on_curve(model, *tr)) throw FixtureError("expected trace is not on " + model.affine_string());
    }
    Fixture fx{j.at("name").get<std::string>(), field, std::move(model), p, std::move(zeta), std::move(fam), std::move(tr)};
    fx.action();  // zeta and weights
    return fx;
  } catch (const FixtureError&) {
    throw;
  } catch (const std::exception& e) {
    throw FixtureError(path.filename().string() + ": " + e.what());
  }
}

std::filesystem::path fixture_directory() {
  if (const char* env = std::getenv("MWLAT_FIXTURE_DIR")) return env;
  return std::filesystem::path(MWLAT_SOURCE_DIR) / "data" / "fixtures";
}

Fixture load_named_fixture(const std::string& name) { return load_fixture(fixture_directory() / (name + ".json")); }

}  // namespace mwlat
