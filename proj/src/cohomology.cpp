#include "mwlat/cohomology.hpp"

#include <numeric>

#include "mwlat/base_change.hpp"
#include "mwlat/error.hpp"

namespace mwlat {

namespace {

// Reduces a vector of M's coordinates: torsion entries mod their order.
bool is_zero_in(const GModule& m, const std::vector<Integer>& v) {
  for (std::size_t i = 0; i < m.rank; ++i)
    if (v[i] != 0) return false;
  for (std::size_t i = 0; i < m.torsion.size(); ++i)
    if (v[m.rank + i] % m.torsion[i] != 0) return false;
  return true;
}

IntMatrix power(const IntMatrix& a, long e) {
  IntMatrix r = IntMatrix::identity(a.rows());
  for (long i = 0; i < e; ++i) r = r * a;
  return r;
}

}  // namespace

void GModule::validate() const {
  const std::size_t k = generators();
  if (n < 1) throw MathError("G-module: group order must be positive");
  if (sigma.rows() != k || sigma.cols() != k) throw MathError("G-module: sigma must be a square matrix of size rank + torsion");
  for (const auto& d : torsion)
    if (d < 2) throw MathError("G-module: torsion invariant factors must be at least 2");
  for (std::size_t j = rank; j < k; ++j) {
    for (std::size_t i = 0; i < rank; ++i)
      if (sigma(i, j) != 0) throw MathError("G-module: sigma must map torsion into torsion");
    for (std::size_t i = 0; i < torsion.size(); ++i)
      if ((torsion[j - rank] * sigma(rank + i, j)) % torsion[i] != 0)
        throw MathError("G-module: sigma is incompatible with the torsion orders");
  }
  const IntMatrix diff = power(sigma, n) - IntMatrix::identity(k);
  for (std::size_t j = 0; j < k; ++j)
    if (!is_zero_in(*this, diff.column(j))) throw MathError("G-module: sigma^n is not the identity");
}

GModule GModule::regular(long n, std::size_t copies) {
  const std::size_t b = static_cast<std::size_t>(n);
  GModule m{n, b * copies, {}, IntMatrix(b * copies, b * copies)};
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < b; ++i) m.sigma(c * b + (i + 1) % b, c * b + i) = 1;
  return m;
}

GModule GModule::cyclotomic(long p, std::size_t copies) {
  const std::size_t b = static_cast<std::size_t>(p - 1);
  GModule m{p, b * copies, {}, IntMatrix(b * copies, b * copies)};
  for (std::size_t c = 0; c < copies; ++c) {
    const std::size_t o = c * b;
    for (std::size_t i = 0; i + 1 < b; ++i) m.sigma(o + i + 1, o + i) = 1;
    for (std::size_t i = 0; i < b; ++i) m.sigma(o + i, o + b - 1) = -1;
  }
  return m;
}

GModule GModule::trivial(long n, std::size_t rank) { return GModule{n, rank, {}, IntMatrix::identity(rank)}; }

Integer H1Result::order() const {
  Integer o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

std::string H1Result::to_string() const {
  if (invariant_factors.empty()) return "0";
  bool all_equal = true;
  for (const auto& d : invariant_factors) all_equal = all_equal && d == invariant_factors.front();
  if (all_equal && invariant_factors.size() > 1)
    return "(Z/" + invariant_factors.front().get_str() + ")^" + std::to_string(invariant_factors.size());
  std::string out;
  for (const auto& d : invariant_factors) out += (out.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
  return out;
}

H1Result h1_cyclic(const GModule& m) {
  m.validate();
  const std::size_t k = m.generators();
  const std::size_t s = m.torsion.size();
  if (k == 0) return {};
  // Relations of M as columns.
  IntMatrix rel(k, s);
  for (std::size_t i = 0; i < s; ++i) rel(m.rank + i, i) = m.torsion[i];

  IntMatrix norm(k, k);
  IntMatrix p = IntMatrix::identity(k);
  for (long i = 0; i < m.n; ++i) {
    norm = norm + p;
    p = p * m.sigma;
  }
  // Preimage in Z^k of ker N: project the kernel of [N | -rel].
  IntMatrix minus_rel(k, s);
  for (std::size_t i = 0; i < s; ++i) minus_rel(m.rank + i, i) = -m.torsion[i];
  const IntMatrix ker_full = integer_kernel(hconcat(norm, minus_rel));
  IntMatrix kernel(k, ker_full.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ker_full.cols(); ++j) kernel(i, j) = ker_full(i, j);

  // Preimage of the (sigma - 1)-image: its generators together with the relations.
  const IntMatrix image = hconcat(m.sigma - IntMatrix::identity(k), rel);

  // Coordinates of the image generators in a basis of the kernel lattice.
  const SmithForm sk = smith_normal_form(kernel);
  const std::size_t r = sk.rank();
  const IntMatrix uy = sk.u * image;
  IntMatrix coords(r, image.cols());
  for (std::size_t j = 0; j < image.cols(); ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      if (i < r) {
        if (uy(i, j) % sk.d[i] != 0) throw MathError("h1_cyclic: (sigma - 1) M is not inside ker N");
        coords(i, j) = uy(i, j) / sk.d[i];
      } else if (uy(i, j) != 0) {
        throw MathError("h1_cyclic: (sigma - 1) M is not inside ker N");
      }
    }
  }
  const SmithForm sq = smith_normal_form(coords);
  if (sq.rank() != r) throw MathError("h1_cyclic: quotient has a free part");
  H1Result out;
  for (const auto& d : sq.d)
    if (d > 1) out.invariant_factors.push_back(d);
  for (const auto& d : out.invariant_factors)
    if (Integer(m.n) % d != 0) throw MathError("h1_cyclic: invariant factor " + d.get_str() + " does not divide n");
  return out;
}

long wc_kernel_rank_extremal(long rank_after, long p) {
  if (!is_prime(p) || p < 5 || p > 23) throw MathError("wc_kernel_rank_extremal: p must be a prime in [5, 23]");
  if (rank_after < 0) throw MathError("wc_kernel_rank_extremal: negative rank");
  if (rank_after % (p - 1) != 0)
    throw MathError("rank " + std::to_string(rank_after) + " is not divisible by p - 1 = " + std::to_string(p - 1));
  return rank_after / (p - 1);
}

H1Result wc_kernel_extremal(long rank_after, long p) {
  H1Result out;
  out.invariant_factors.assign(static_cast<std::size_t>(wc_kernel_rank_extremal(rank_after, p)), Integer(p));
  return out;
}

std::vector<long> coboundary_solve(const std::vector<long>& a) {
  if (std::accumulate(a.begin(), a.end(), 0L) != 0) throw MathError("coboundary_solve: coefficients must sum to zero");
  const std::size_t n = a.size();
  std::vector<long> b(n, 0);
  for (std::size_t l = 0; l + 1 < n; ++l) b[l + 1] = a[l] + b[l];
  for (std::size_t l = 0; l < n; ++l)
    if (b[(l + 1) % n] - b[l] != a[l]) throw MathError("coboundary_solve: cyclic difference check failed");
  return b;
}

std::string StabilityVerdict::to_string() const {
  if (rank_stable) return "rank-stable (" + std::to_string(rank_before) + " -> " + std::to_string(rank_after) + "), kernel 0";
  std::string s = "rank jump " + std::to_string(jump) + " (" + std::to_string(rank_before) + " -> " +
                  std::to_string(rank_after) + ")";
  if (consistent) return s + " = " + std::to_string(p - 1) + " * " + std::to_string(jump / (p - 1));
  return s + ", not divisible by p - 1 = " + std::to_string(p - 1) + ": inconsistent";
}

StabilityVerdict check_rank_stability(long rank_before, long rank_after, long p) {
  if (rank_after < rank_before) throw MathError("check_rank_stability: rank cannot drop after base change");
  StabilityVerdict v{rank_before, rank_after, p, rank_after - rank_before, rank_after == rank_before, true};
  v.consistent = v.jump % (p - 1) == 0;
  return v;
}

H1Result wc_kernel_from_points(const WeierstrassModel& m, const GaloisSectionAction& act, const FFPoint& seed,
                               const std::vector<SigmaCombination>& trace_kernel_points, long rho) {
  const long p = act.p();
  require_on_curve(m, seed, "seed");
  if (shioda_tate_rank(fiber_configuration(m), rho) != p)
    throw MathError("wc_kernel_from_points: the sigma-orbit of the seed cannot be a basis (rank differs from p)");
  const FFPoint tr = trace(m, act, seed);
  if (!has_no_torsion_up_to(m, tr)) throw MathError("wc_kernel_from_points: trace of the seed is torsion");
  for (const auto& c : trace_kernel_points) {
    if (static_cast<long>(c.size()) != p) throw MathError("wc_kernel_from_points: combination length differs from p");
    const FFPoint a = combination_point(m, act, seed, c);
    if (!trace(m, act, a).is_zero()) throw MathError("wc_kernel_from_points: point has nonzero trace");
    // a = (1 - sigma) C with C = sum b_l sigma^(l-1) seed.
    const std::vector<long> b = coboundary_solve(c);
    SigmaCombination shifted(c.size(), 0);
    for (std::size_t l = 0; l < b.size(); ++l) shifted[(l + b.size() - 1) % b.size()] = b[l];
    const FFPoint cpt = combination_point(m, act, seed, shifted);
    if (add_points(m, cpt, negate(act.apply(cpt))) != a)
      throw MathError("wc_kernel_from_points: coboundary check failed");
  }
  return h1_cyclic(GModule::regular(p));
}

}  // namespace mwlat
