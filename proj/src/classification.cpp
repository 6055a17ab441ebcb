#include "mwlat/classification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "mwlat/error.hpp"
#include "mwlat/io/parse.hpp"
#include "mwlat/parallel.hpp"

namespace mwlat {

namespace {

using K = KodairaType::Kind;

long excess(const KodairaType& t) { return t.components() - 1; }

bool is_istar_positive(const KodairaType& t) { return t.kind() == K::IStar && t.n() > 0; }

struct CatalogEntry {
  int number;
  const char* zero;
  const char* infinity;
  std::vector<const char*> remaining;
  const char* model;
};

// Realizations; row 8 is written with II at 0 as in the source equation.
const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c{
      {1, "IV*", "IV", {}, "y^2 = x^3 + t0^4 t1^2"},
      {2, "III*", "III", {}, "y^2 = x^3 - t0^3 t1 x"},
      {3, "II*", "II", {}, "y^2 = x^3 + t0^5 t1"},
      {4, "II*", "I0", {"II"}, "y^2 = x^3 - t0^6 + t0^5 t1"},
      {5, "II*", "I0", {"I1", "I1"}, "y^2 = x^3 - t0^4 x + t0^5 t1"},
      {6, "II*", "I1", {"I1"}, "y^2 = x^3 - 3 t0^4 x + 2 t0^6 + t0^5 t1"},
      {7, "IV*", "III", {"I1"}, "y^2 = x^3 - t0^3 t1 x + t0^4 t1^2"},
      {8, "III*", "II", {"I1"}, "y^2 = x^3 - t0 t1^3 x + t0 t1^5"},
      {0, "I0*", "I0*", {}, "y^2 = x^3 - t0^2 t1^2 x + t0^3 t1^3"},
  };
  return c;
}

Configuration entry_config(const CatalogEntry& e) {
  Configuration c{KodairaType::parse(e.zero), KodairaType::parse(e.infinity), {}};
  for (const char* r : e.remaining) c.remaining.push_back(KodairaType::parse(r));
  return c;
}

const CatalogEntry* find_entry(const Configuration& c) {
  const Configuration canon = c.canonical();
  for (const auto& e : catalog())
    if (entry_config(e) == canon) return &e;
  return nullptr;
}

// Nonincreasing (by `heavier`) multisets of singular types with total v(Delta) = budget.
void multisets(long budget, const std::vector<KodairaType>& types, std::size_t from, std::vector<KodairaType>& cur,
               const std::function<void(const std::vector<KodairaType>&)>& emit) {
  if (budget == 0) {
    emit(cur);
    return;
  }
  for (std::size_t i = from; i < types.size(); ++i) {
    if (types[i].v_delta() > budget) continue;
    cur.push_back(types[i]);
    multisets(budget - types[i].v_delta(), types, i, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------- Configuration

Configuration Configuration::from(const FiberConfiguration& c) {
  Configuration out;
  if (auto z = c.at_zero()) out.at_zero = z->type;
  if (auto i = c.at_infinity()) out.at_infinity = i->type;
  out.remaining = c.remaining();
  return out;
}

Configuration Configuration::canonical() const {
  Configuration c = *this;
  if (heavier(c.at_infinity, c.at_zero)) std::swap(c.at_zero, c.at_infinity);
  std::sort(c.remaining.begin(), c.remaining.end(), heavier);
  return c;
}

long Configuration::epsilon() const {
  long s = 0;
  for (const auto& t : remaining) s += t.v_delta();
  return s;
}

long Configuration::total_delta() const { return at_zero.v_delta() + at_infinity.v_delta() + epsilon(); }

long Configuration::trivial_lattice_excess() const {
  long s = excess(at_zero) + excess(at_infinity);
  for (const auto& t : remaining) s += excess(t);
  return s;
}

long Configuration::singular_count() const {
  return (at_zero.is_singular() ? 1 : 0) + (at_infinity.is_singular() ? 1 : 0) + static_cast<long>(remaining.size());
}

long Configuration::additive_count() const {
  long n = (at_zero.is_additive() ? 1 : 0) + (at_infinity.is_additive() ? 1 : 0);
  for (const auto& t : remaining) n += t.is_additive() ? 1 : 0;
  return n;
}

std::string Configuration::to_string() const {
  std::string rest;
  for (const auto& t : remaining) rest += (rest.empty() ? "" : " + ") + t.name();
  return at_zero.name() + " | " + at_infinity.name() + " | " + (rest.empty() ? "-" : rest);
}

// ---------------------------------------------------------------- rational surfaces

const std::vector<long>& representative_primes() {
  static const std::vector<long> p{5, 7, 11, 13};
  return p;
}

std::optional<std::string> rational_rejection_reason(const Configuration& c, long p) {
  if (c.total_delta() != 12) return "total discriminant degree is not 12";
  if (c.trivial_lattice_excess() > 8) return "Shioda-Tate: sum(m_v - 1) > 8";
  const long eps = c.epsilon();
  if (p * eps > 12) return "p * epsilon > 12";
  std::vector<KodairaType> all{c.at_zero, c.at_infinity};
  all.insert(all.end(), c.remaining.begin(), c.remaining.end());
  if (std::any_of(all.begin(), all.end(), is_istar_positive)) return "fiber of type I_n* with n >= 1";
  if (c.singular_count() < 2) return "fewer than 2 singular fibers";
  if (c.singular_count() == 2 && c.additive_count() < 2) return "two singular fibers, not both additive";
  if (c.additive_count() == 1) {
    auto it = std::find_if(all.begin(), all.end(), [](const KodairaType& t) { return t.is_additive(); });
    if (it->kind() != K::IIStar || p != 5) return "single additive fiber must be II* with p = 5";
  }
  auto has = [&](K k) { return std::any_of(all.begin(), all.end(), [&](const KodairaType& t) { return t.kind() == k; }); };
  if (has(K::IVStar) && has(K::II)) return "IV* + II";

  const KodairaType a = transition_type(c.at_zero, p, true).type;
  const KodairaType b = transition_type(c.at_infinity, p, true).type;
  const long total = a.v_delta() + b.v_delta() + p * eps;
  if (total != 12) return "not L-stable: v0' + vinf' + p*epsilon = " + std::to_string(total);
  long after_excess = excess(a) + excess(b);
  for (const auto& t : c.remaining) after_excess += p * excess(t);
  if (after_excess > 8) return "Shioda-Tate fails after base change";
  return std::nullopt;
}

RationalClassification enumerate_rational_L_stable() {
  const auto all_types = KodairaType::all_up_to(12);
  std::vector<KodairaType> singular;
  for (const auto& t : all_types)
    if (t.is_singular()) singular.push_back(t);
  std::sort(singular.begin(), singular.end(), heavier);

  std::vector<Configuration> candidates;
  for (const auto& a : all_types)
    for (const auto& b : all_types) {
      if (heavier(b, a)) continue;
      const long budget = 12 - a.v_delta() - b.v_delta();
      if (budget < 0) continue;
      std::vector<KodairaType> cur;
      multisets(budget, singular, 0, cur,
                [&](const std::vector<KodairaType>& rest) { candidates.push_back({a, b, rest}); });
    }

  RationalClassification out;
  out.candidates = static_cast<long>(candidates.size());
  std::vector<std::pair<Configuration, std::vector<long>>> survivors;
  for (const auto& c : candidates) {
    std::vector<long> primes;
    for (long p : representative_primes()) {
      if (auto why = rational_rejection_reason(c, p))
        out.rejected.push_back({c, p, *why});
      else
        primes.push_back(p);
    }
    if (!primes.empty()) survivors.emplace_back(c, primes);
  }

  std::vector<std::optional<ConfigRow>> rows(survivors.size());
  std::vector<std::vector<Rejection>> late(survivors.size());
  parallel_for(survivors.size(), [&](std::size_t i) {
    const auto& [c, primes] = survivors[i];
    ConfigRow row;
    row.config = c;
    row.epsilon = c.epsilon();
    row.any_p = primes == representative_primes();
    if (!row.any_p) {
      if (primes.size() != 1) throw MathError("unexpected prime set for " + c.to_string());
      row.p = primes[0];
    }
    const CatalogEntry* e = find_entry(c);
    if (!e) throw MathError("no realization for surviving configuration " + c.to_string());
    row.number = e->number;
    row.realization = e->model;
    const WeierstrassModel m = realize_configuration(c);
    row.isotrivial = m.is_isotrivial();
    const std::vector<long> checks = row.any_p ? std::vector<long>{5, 7, 11} : std::vector<long>{row.p};
    for (long p : checks)
      if (!analyze_base_change(m, p).l_stable) late[i].push_back({c, p, "realization is not L-stable"});
    if (late[i].empty()) rows[i] = row;
  });
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    for (auto& r : late[i]) out.rejected.push_back(std::move(r));
    if (!rows[i]) continue;
    (rows[i]->number > 0 ? out.rows : out.extra).push_back(*rows[i]);
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const ConfigRow& a, const ConfigRow& b) { return a.number < b.number; });
  return out;
}

WeierstrassModel realize_configuration(const Configuration& c) {
  const CatalogEntry* e = find_entry(c);
  if (!e) throw MathError("configuration " + c.to_string() + " is not in the realization catalog");
  WeierstrassModel m = parse_model(e->model);
  const Configuration got = Configuration::from(fiber_configuration(m)).canonical();
  if (!(got == c.canonical()))
    throw MathError("realization has configuration " + got.to_string() + ", expected " + c.canonical().to_string());
  return m;
}

// ---------------------------------------------------------------- K3 surfaces

std::optional<std::string> k3_rejection_reason(const KodairaType& a, const KodairaType& b, long p) {
  const long eps = 24 - a.v_delta() - b.v_delta();
  if (eps < 0) return "total discriminant degree exceeds 24";
  if (p * eps > 24) return "p * epsilon > 24";
  for (const auto& t : {a, b}) {
    if (t.is_multiplicative() && p * t.n() > 24) return "pm > 24";
    if (is_istar_positive(t) && 6 + p * t.n() > 24) return "6 + pn > 24";
  }
  if (excess(a) + excess(b) > 18) return "Shioda-Tate: rho > 20";
  const KodairaType a2 = transition_type(a, p, true).type, b2 = transition_type(b, p, true).type;
  const long total = a2.v_delta() + b2.v_delta() + p * eps;
  if (total != 24) return "not L-stable: v0' + vinf' + p*epsilon = " + std::to_string(total);
  return std::nullopt;
}

K3Classification classify_k3_L_stable() {
  static const std::vector<long> primes{5, 7, 11, 13, 17, 19, 23};
  const auto types = KodairaType::all_up_to(24);
  K3Classification out;
  for (const auto& a : types)
    for (const auto& b : types) {
      if (heavier(b, a) || a.v_delta() + b.v_delta() > 24) continue;
      for (long p : primes) {
        K3Candidate cand{a, b, p, 24 - a.v_delta() - b.v_delta(), ""};
        if (auto why = k3_rejection_reason(a, b, p)) {
          cand.reason = *why;
          out.rejected.push_back(std::move(cand));
        } else {
          out.accepted.push_back(std::move(cand));
        }
      }
    }
  if (out.accepted.size() != 1) throw MathError("K3 search did not isolate a unique constraint set");
  out.p = out.accepted[0].p;
  out.at_zero = out.accepted[0].at_zero;
  out.at_infinity = out.accepted[0].at_infinity;
  return out;
}

}  // namespace mwlat
