#include "mwlat/tables.hpp"

#include <sstream>

#include "mwlat/error.hpp"
#include "mwlat/io/fixture.hpp"
#include "mwlat/io/parse.hpp"

namespace mwlat {

namespace {

constexpr long kRho = 10;

// Trace-zero points sigma^0 Q - sigma^i Q, which span the augmentation ideal.
std::vector<SigmaCombination> augmentation_basis(long p) {
  std::vector<SigmaCombination> out;
  for (long i = 1; i < p; ++i) {
    SigmaCombination c(static_cast<std::size_t>(p), 0);
    c[0] = 1;
    c[static_cast<std::size_t>(i)] = -1;
    out.push_back(c);
  }
  return out;
}

const char* fixture_for(long p) {
  if (p == 5) return "ell34_p5";
  if (p == 7) return "ell7_p7";
  return nullptr;
}

std::string pad(const std::string& s, std::size_t width) {
  std::size_t len = 0;
  for (unsigned char ch : s) len += (ch & 0xC0) != 0x80;
  return s + std::string(width > len ? width - len : 0, ' ');
}

std::string render(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> w(cells.front().size(), 0);
  for (const auto& r : cells)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    std::string line;
    for (std::size_t i = 0; i < cells[k].size(); ++i) line += (i ? "  " : "") + pad(cells[k][i], w[i]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
    if (k == 0) {
      std::size_t total = 0;
      for (auto x : w) total += x;
      out << std::string(total + 2 * (w.size() - 1), '-') << "\n";
    }
  }
  return out.str();
}

std::string remaining_text(const Configuration& c) {
  std::string s;
  for (const auto& t : c.remaining) s += (s.empty() ? "" : " + ") + t.name();
  return s.empty() ? "-" : s;
}

}  // namespace

std::vector<SummaryRow> summary_table(const RationalClassification& c) {
  std::vector<SummaryRow> out;
  for (const auto& row : c.rows) {
    SummaryRow s;
    s.row = row;
    s.primes = row.any_p ? representative_primes() : std::vector<long>{row.p};
    const WeierstrassModel m = parse_model(row.realization);
    s.model_before = m.to_string();
    s.rank_before = shioda_tate_rank(fiber_configuration(m), kRho);
    for (std::size_t i = 0; i < s.primes.size(); ++i) {
      const BaseChangeReport r = analyze_base_change(m, s.primes[i]);
      if (!r.l_stable) throw MathError("row " + std::to_string(row.number) + " is not L-stable at p = " +
                                       std::to_string(s.primes[i]));
      const long after = shioda_tate_rank(r.config_after, kRho);
      if (i == 0) {
        s.model_after = r.after.to_string();
        s.config_after = Configuration::from(r.config_after);
        s.rank_after = after;
      } else if (after != s.rank_after) {
        throw MathError("row " + std::to_string(row.number) + ": rank after base change depends on p");
      }
    }
    const long p = s.primes.front();
    s.verdict = check_rank_stability(s.rank_before, s.rank_after, p);
    if (!s.verdict.consistent) throw MathError("rank jump not divisible by p - 1: " + s.verdict.to_string());
    if (s.verdict.rank_stable) {
      s.kernel_method = "rank-stable";
    } else if (s.rank_before == 0) {
      s.kernel = wc_kernel_extremal(s.rank_after, p);
      s.kernel_method = "extremal";
    } else {
      const char* name = fixture_for(p);
      if (!name) throw MathError("no generator fixture for p = " + std::to_string(p));
      const Fixture fx = load_named_fixture(name);
      const Configuration fixture_config = Configuration::from(fiber_configuration(fx.model));
      if (!(fixture_config.canonical() == s.config_after.canonical()))
        throw FixtureError("fixture " + fx.name + " has configuration " + fixture_config.to_string() +
                           ", expected " + s.config_after.to_string());
      s.kernel = wc_kernel_from_points(fx.model, fx.action(), fx.family.seed, augmentation_basis(p), kRho);
      s.kernel_method = "points";
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string format_configuration_table(const RationalClassification& c) {
  std::vector<std::vector<std::string>> cells{{"row", "p", "over 0", "over inf", "remaining", "epsilon", "model"}};
  for (const auto& r : c.rows)
    cells.push_back({std::to_string(r.number), r.p_label(), r.config.at_zero.name(), r.config.at_infinity.name(),
                     remaining_text(r.config), std::to_string(r.epsilon), r.realization});
  std::string out = render(cells);
  for (const auto& r : c.extra)
    out += "also L-stable for " + r.p_label() + ": " + r.config.to_string() + (r.isotrivial ? " (isotrivial)" : "") +
           ", " + r.realization + "\n";
  return out;
}

std::string format_summary_table(const std::vector<SummaryRow>& rows) {
  std::vector<std::vector<std::string>> cells{
      {"row", "p", "over 0", "over inf", "remaining", "rank E(K)", "rank E(K')", "ker WC -> WC"}};
  for (const auto& s : rows)
    cells.push_back({std::to_string(s.row.number), s.row.p_label(), s.row.config.at_zero.name(),
                     s.row.config.at_infinity.name(), remaining_text(s.row.config), std::to_string(s.rank_before),
                     std::to_string(s.rank_after), s.kernel.to_string()});
  return render(cells);
}

}  // namespace mwlat
