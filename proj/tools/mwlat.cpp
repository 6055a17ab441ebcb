#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mwlat/bounds.hpp"
#include "mwlat/error.hpp"
#include "mwlat/io/fixture.hpp"
#include "mwlat/io/parse.hpp"
#include "mwlat/io/report.hpp"
#include "mwlat/tables.hpp"

using namespace mwlat;
using nlohmann::json;

namespace {

struct Options {
  std::string model;
  std::string field;
  long rho = 10;
  long p = 5;
  std::string gmodule_file;
  std::string scenario;
  long copies = 1;
  std::string fixture;
  bool json_out = false;
  bool deep = false;
};

struct Output {
  json inputs = json::object();
  json results = json::object();
  std::string text;
};

std::string fiber_text(const FiberConfiguration& c) {
  std::ostringstream out;
  for (const auto& f : c.fibers)
    out << "  " << f.place.to_string() << ": " << f.type.name() << " (v(f), v(g), v(D)) = ("
        << (f.v_f == kInfiniteValuation ? "inf" : std::to_string(f.v_f)) << ", "
        << (f.v_g == kInfiniteValuation ? "inf" : std::to_string(f.v_g)) << ", " << f.v_delta << ")"
        << (f.degree() > 1 ? " x" + std::to_string(f.degree()) : "") << "\n";
  return out.str();
}

Output analyze(const Options& o) {
  const WeierstrassModel m = parse_model(o.model, parse_field_spec(o.field));
  const FiberConfiguration c = fiber_configuration(m);
  Output out;
  out.inputs = {{"model", o.model}, {"field", o.field}, {"rho", o.rho}};
  out.results = {{"model", model_json(m)}, {"configuration", fiber_configuration_json(c, o.rho)}};
  out.text = m.to_string() + "\nd = " + std::to_string(m.d()) + "\nfibers: " + c.to_string() + "\n" +
             fiber_text(c) + "rank (rho = " + std::to_string(o.rho) + "): " +
             std::to_string(shioda_tate_rank(c, o.rho)) + "\n";
  return out;
}

Output base_change(const Options& o) {
  const WeierstrassModel m = parse_model(o.model, parse_field_spec(o.field));
  const BaseChangeReport r = analyze_base_change(m, o.p);
  Output out;
  out.inputs = {{"model", o.model}, {"field", o.field}, {"p", o.p}};
  out.results = base_change_json(r);
  std::ostringstream t;
  t << "before: " << r.before.to_string() << "  [" << r.config_before.to_string() << "]\n"
    << "pulled back: " << r.pulled_back.to_string() << "\n"
    << "minimal: " << r.after.to_string() << "  [" << r.config_after.to_string() << "]\n"
    << "steps at 0: " << r.steps_zero << ", at inf: " << r.steps_infinity << "\n"
    << "deg L: " << r.degree_before << " -> " << r.degree_after << ", epsilon = " << r.epsilon << "\n"
    << "L-stable: " << (r.l_stable ? "yes" : "no") << "\n";
  for (const auto& tr : r.transitions)
    t << "  " << tr.before.place.to_string() << ": " << tr.before.type.name() << " -> " << tr.after.name()
      << (tr.copies > 1 ? " x" + std::to_string(tr.copies) : "") << "\n";
  out.text = t.str();
  return out;
}

Output classify(const Options&) {
  const RationalClassification c = enumerate_rational_L_stable();
  Output out;
  out.results = configuration_table_json(c);
  out.text = format_configuration_table(c);
  return out;
}

Output wc_kernel(const Options& o) {
  Output out;
  H1Result h;
  if (!o.gmodule_file.empty()) {
    std::ifstream in(o.gmodule_file);
    if (!in) throw ParseError("cannot open " + o.gmodule_file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(o.gmodule_file + ": " + e.what());
    }
    out.inputs = {{"gmodule", j}};
    h = h1_cyclic(gmodule_from_json(j));
  } else if (o.scenario == "regular" || o.scenario == "cyclotomic") {
    out.inputs = {{"scenario", o.scenario}, {"p", o.p}, {"copies", o.copies}};
    if (o.copies < 1) throw ParseError("--copies must be positive");
    const auto k = static_cast<std::size_t>(o.copies);
    h = h1_cyclic(o.scenario == "regular" ? GModule::regular(o.p, k) : GModule::cyclotomic(o.p, k));
  } else if (o.scenario.rfind("row", 0) == 0) {
    const auto rows = summary_table(enumerate_rational_L_stable());
    long n = 0;
    try {
      n = std::stol(o.scenario.substr(3));
    } catch (const std::exception&) {
    }
    if (n < 1 || n > static_cast<long>(rows.size())) throw ParseError("unknown scenario '" + o.scenario + "'");
    const SummaryRow& s = rows[static_cast<std::size_t>(n - 1)];
    out.inputs = {{"scenario", o.scenario}};
    out.results["verdict"] = verdict_json(s.verdict);
    out.results["method"] = s.kernel_method;
    h = s.kernel;
  } else {
    throw ParseError("wc-kernel needs a GModule JSON file or --scenario");
  }
  out.results["kernel"] = h1_json(h);
  out.text = "H^1 = " + h.to_string() + "\n";
  return out;
}

Output verify_generators(const Options& o) {
  const Fixture fx = load_named_fixture(o.fixture);
  const auto act = fx.action();
  const FamilyReport r = verify_generator_family(fx.model, fx.family, act);
  Output out;
  out.inputs = {{"fixture", o.fixture}, {"deep", o.deep}};
  out.results = family_json(r);
  std::ostringstream t;
  t << fx.model.to_string() << " over " << field_spec_string(fx.field) << ", p = " << fx.p << "\n"
    << "distinct points: " << r.count << " (expected " << r.expected_count << ")\n"
    << "shape violations: " << r.shape_violations << ", off curve: " << r.off_curve
    << ", sigma-fixed: " << r.sigma_fixed << "\n";
  bool trace_ok = true;
  if (fx.expected_trace) {
    const FFPoint tr = trace(fx.model, act, fx.family.seed);
    trace_ok = tr == *fx.expected_trace;
    out.results["trace"] = {{"value", tr.to_string()}, {"expected", fx.expected_trace->to_string()}, {"ok", trace_ok}};
    t << "trace of seed: " << tr.to_string() << (trace_ok ? "" : " (expected " + fx.expected_trace->to_string() + ")")
      << "\n";
  }
  out.text = t.str();
  if (!r.ok() || !trace_ok) {
    std::cout << out.text;
    throw FixtureError("fixture " + fx.name + " failed verification");
  }
  return out;
}

Output tables(const Options&) {
  const RationalClassification c = enumerate_rational_L_stable();
  const auto rows = summary_table(c);
  Output out;
  out.results = {{"table1", configuration_table_json(c)}, {"table2", summary_table_json(rows)}};
  out.text = "L-stable pairs\n" + format_configuration_table(c) + "\nranks and Weil-Chatelet kernels\n" +
             format_summary_table(rows);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational elliptic surfaces under cyclic base change"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Emit a JSON report");
  app.add_flag("--deep", o.deep, "Run long verifications");

  auto* an = app.add_subcommand("analyze", "Fiber configuration and Mordell-Weil rank");
  an->add_option("model", o.model, "y^2 = x^3 + F x + G")->required();
  an->add_option("--field", o.field, "Field tower, e.g. \"z: z^4 + z^3 + z^2 + z + 1\"");
  an->add_option("--rho", o.rho, "Picard number")->check(CLI::PositiveNumber);

  auto* bc = app.add_subcommand("base-change", "Cyclic base change ramified over 0 and infinity");
  bc->add_option("model", o.model, "y^2 = x^3 + F x + G")->required();
  bc->add_option("--field", o.field, "Field tower");
  bc->add_option("--p", o.p, "Prime degree")->required();

  app.add_subcommand("classify", "L-stable configurations on rational surfaces");

  auto* wc = app.add_subcommand("wc-kernel", "H^1 of a cyclic group");
  wc->add_option("gmodule", o.gmodule_file, "GModule JSON {n, rank, torsion, sigma}");
  wc->add_option("--scenario", o.scenario, "row1..row8, regular or cyclotomic");
  wc->add_option("--p", o.p, "Group order for regular and cyclotomic");
  wc->add_option("--copies", o.copies, "Number of summands");

  auto* vg = app.add_subcommand("verify-generators", "Count an explicit generator family");
  vg->add_option("--fixture", o.fixture, "Fixture name under data/fixtures")->required();

  app.add_subcommand("tables", "Both summary tables");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--json", o.json_out, "Emit a JSON report");
    sub->add_flag("--deep", o.deep, "Run long verifications");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Output out;
    if (command == "analyze") out = analyze(o);
    else if (command == "base-change") out = base_change(o);
    else if (command == "classify") out = classify(o);
    else if (command == "wc-kernel") out = wc_kernel(o);
    else if (command == "verify-generators") out = verify_generators(o);
    else out = tables(o);
    if (o.json_out)
      std::cout << json{{"command", command}, {"inputs", out.inputs}, {"results", out.results}}.dump(2) << "\n";
    else
      std::cout << out.text;
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
