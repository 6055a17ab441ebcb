#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mwlat/mordell_weil.hpp"

namespace mwlat {

// A generator family shipped as JSON: field tower, model, seed section and recipes.
struct Fixture {
  std::string name;
  FieldPtr field;
  WeierstrassModel model;
  long p = 0;
  NFElement zeta;
  GeneratorFamily family;
  std::optional<FFPoint> expected_trace;

  GaloisSectionAction action() const { return GaloisSectionAction(model, p, zeta); }
};

// Parses and validates (seed on the curve, zeta of order p). Throws FixtureError.
Fixture load_fixture(const std::filesystem::path& path);
// Looks up NAME.json under MWLAT_FIXTURE_DIR, then the source tree's data/fixtures.
Fixture load_named_fixture(const std::string& name);
std::filesystem::path fixture_directory();

}  // namespace mwlat
