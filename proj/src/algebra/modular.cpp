#include "mwlat/algebra/modular.hpp"

#include <random>

#include "mwlat/error.hpp"

namespace mwlat {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // low degree first, trimmed

u64 mulm(u64 a, u64 b, u64 p) { return a * b % p; }
u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 subm(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 7, 61}) {
    u64 x = powm(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulm(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mod(ModPoly a, const ModPoly& m, u64 p) {
  const u64 inv = invm(m.back(), p);
  while (a.size() >= m.size()) {
    const u64 c = mulm(a.back(), inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t j = 0; j < m.size(); ++j) a[shift + j] = subm(a[shift + j], mulm(c, m[j], p), p);
    a.pop_back();
    trim(a);
  }
  return a;
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
  trim(r);
  return mod(std::move(r), m, p);
}

ModPoly make_monic(ModPoly a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = invm(a.back(), p);
  for (auto& c : a) c = mulm(c, inv, p);
  return a;
}

ModPoly gcdm(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

// (x + shift)^e mod m
ModPoly pow_linear(u64 shift, u64 e, const ModPoly& m, u64 p) {
  ModPoly base = mod({shift % p, 1}, m, p), r{1};
  r = mod(r, m, p);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

ModPoly divexact(ModPoly a, const ModPoly& b, u64 p) {
  const u64 inv = invm(b.back(), p);
  ModPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    const u64 c = mulm(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = subm(a[shift + j], mulm(c, b[j], p), p);
    a.pop_back();
  }
  return q;
}

void split_roots(const ModPoly& f, u64 p, std::mt19937_64& rng, std::vector<u64>& out) {
  if (f.size() == 2) {
    out.push_back(subm(0, mulm(f[0], invm(f[1], p), p), p));
    return;
  }
  for (;;) {
    ModPoly h = pow_linear(rng() % p, (p - 1) / 2, f, p);
    if (h.empty()) h = {p - 1};
    else h[0] = subm(h[0], 1, p);
    trim(h);
    ModPoly g = gcdm(f, h, p);
    if (g.size() > 1 && g.size() < f.size()) {
      split_roots(g, p, rng, out);
      split_roots(make_monic(divexact(f, g, p), p), p, rng, out);
      return;
    }
  }
}

// All roots when f (monic, squarefree or not) splits into distinct linear factors.
std::optional<std::vector<u64>> distinct_roots(const ModPoly& f, u64 p) {
  const std::size_t n = f.size() - 1;
  ModPoly xp = pow_linear(0, p, f, p);  // x^p mod f
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = subm(xp[1], 1, p);
  trim(xp);
  if (!xp.empty()) return std::nullopt;  // f does not divide x^p - x
  std::vector<u64> roots;
  std::mt19937_64 rng(p);
  split_roots(f, p, rng, roots);
  if (roots.size() != n) return std::nullopt;
  return roots;
}

std::optional<u64> reduce(const Rational& q, u64 p) {
  const u64 den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  return mulm(mpz_fdiv_ui(q.get_num_mpz_t(), p), invm(den, p), p);
}

std::optional<std::vector<std::vector<u64>>> invert(std::vector<std::vector<u64>> a, u64 p) {
  const std::size_t n = a.size();
  std::vector<std::vector<u64>> inv(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) return std::nullopt;
    std::swap(a[r], a[c]);
    std::swap(inv[r], inv[c]);
    const u64 s = invm(a[c][c], p);
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = mulm(a[c][j], s, p);
      inv[c][j] = mulm(inv[c][j], s, p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const u64 f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = subm(a[i][j], mulm(f, a[c][j], p), p);
        inv[i][j] = subm(inv[i][j], mulm(f, inv[c][j], p), p);
      }
    }
  }
  return inv;
}

// Basis images for every embedding of `field` into F_p, or nullopt if some level does not split.
std::optional<std::vector<std::vector<u64>>> embeddings(const NumberField& field, u64 p) {
  if (field.is_rationals()) return std::vector<std::vector<u64>>{{1}};
  auto below = embeddings(*field.base(), p);
  if (!below) return std::nullopt;
  const std::size_t n = field.relative_degree();
  std::vector<std::vector<u64>> out;
  for (const auto& e : *below) {
    ModPoly m(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
      u64 acc = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        auto r = reduce(field.modulus()[j][i], p);
        if (!r) return std::nullopt;
        acc = addm(acc, mulm(*r, e[i], p), p);
      }
      m[j] = acc;
    }
    auto roots = distinct_roots(m, p);
    if (!roots) return std::nullopt;
    for (u64 g : *roots) {
      std::vector<u64> basis(field.degree());
      u64 gp = 1;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < e.size(); ++i) basis[i + e.size() * j] = mulm(e[i], gp, p);
        gp = mulm(gp, g, p);
      }
      out.push_back(std::move(basis));
    }
  }
  return out;
}

// Image of a under embedding e; nullopt if a denominator vanishes mod p.
std::optional<ModPoly> image(const Poly& a, const std::vector<u64>& e, u64 p) {
  ModPoly out(a.coeffs().size(), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto& rep = a.coeffs()[k].rep();
    u64 acc = 0;
    for (std::size_t i = 0; i < rep.size(); ++i) {
      if (sgn(rep[i]) == 0) continue;
      auto r = reduce(rep[i], p);
      if (!r) return std::nullopt;
      acc = addm(acc, mulm(*r, e[i], p), p);
    }
    out[k] = acc;
  }
  return out;
}

// a/b with |a|, |b| <= sqrt(m/2) and a = u b mod m.
std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m) {
  Integer r0 = m, r1 = u, s0 = 0, s1 = 1;
  Integer bound = sqrt(Integer(m / 2));
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  Integer g = gcd(s1, m);
  if (g != 1) return std::nullopt;
  Rational q(r1, s1);
  q.canonicalize();
  return q;
}

}  // namespace

std::shared_ptr<const ModularPrime> modular_prime(const NumberField& field, std::size_t index) {
  std::lock_guard<std::mutex> lock(field.primes_mu_);
  if (field.prime_cursor_ == 0) field.prime_cursor_ = (u64{1} << 31) - 1;
  while (field.primes_.size() <= index) {
    if (field.prime_cursor_ < 1000) throw MathError("no split prime found for the field tower");
    const u64 p = field.prime_cursor_;
    field.prime_cursor_ -= 2;
    if (!is_prime(p)) continue;
    auto emb = embeddings(field, p);
    if (!emb) continue;
    auto inv = invert(*emb, p);
    if (!inv) continue;
    auto mp = std::make_shared<ModularPrime>();
    mp->p = p;
    mp->basis = std::move(*emb);
    mp->inverse = std::move(*inv);
    field.primes_.push_back(std::move(mp));
  }
  return field.primes_[index];
}

std::optional<Poly> modular_gcd(const Poly& a, const Poly& b) {
  const FieldPtr& field = a.field();
  const std::size_t n = field->degree();
  constexpr std::size_t kMaxPrimes = 256;
  long deg = -1;
  std::vector<std::vector<Integer>> acc;  // acc[j][i]: flat coordinate i of coefficient j
  Integer modulus = 1;
  std::size_t used = 0;
  for (std::size_t idx = 0; idx < kMaxPrimes; ++idx) {
    const auto mp = modular_prime(*field, idx);
    const u64 p = mp->p;
    std::vector<ModPoly> g;
    bool ok = true;
    for (const auto& e : mp->basis) {
      auto ia = image(a, e, p), ib = image(b, e, p);
      if (!ia || !ib || ia->back() == 0 || ib->back() == 0) {
        ok = false;
        break;
      }
      g.push_back(gcdm(std::move(*ia), std::move(*ib), p));
      if (g.back().size() != g.front().size()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const long d = static_cast<long>(g.front().size()) - 1;
    if (d == 0) return Poly::constant(NFElement(field, 1));
    if (deg >= 0 && d > deg) continue;  // unlucky prime
    if (deg < 0 || d < deg) {
      deg = d;
      acc.assign(static_cast<std::size_t>(d + 1), std::vector<Integer>(n, 0));
      modulus = 1;
      used = 0;
    }
    // Flat coordinates mod p, then CRT into acc.
    const Integer P(static_cast<unsigned long>(p));
    const Integer minv = [&] {
      Integer r;
      mpz_invert(r.get_mpz_t(), Integer(modulus % P).get_mpz_t(), P.get_mpz_t());
      return r;
    }();
    for (std::size_t j = 0; j <= static_cast<std::size_t>(deg); ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        u64 v = 0;
        for (std::size_t e = 0; e < n; ++e) v = addm(v, mulm(mp->inverse[i][e], g[e][j], p), p);
        Integer& x = acc[j][i];
        Integer diff = (Integer(static_cast<unsigned long>(v)) - x) % P;
        if (diff < 0) diff += P;
        Integer t = diff * minv % P;
        x += modulus * t;
      }
    }
    modulus *= P;
    ++used;
    // Try to lift.
    std::vector<NFElement> cs;
    bool lifted = true;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(deg) && lifted; ++j) {
      Coeffs c(n);
      for (std::size_t i = 0; i < n && lifted; ++i) {
        auto q = rational_reconstruct(acc[j][i], modulus);
        if (!q) lifted = false;
        else c[i] = *q;
      }
      cs.emplace_back(field, std::move(c));
    }
    if (!lifted) continue;
    Poly cand(field, std::move(cs));
    if (cand.degree() == deg && cand.is_monic() && divides(cand, a) && divides(cand, b)) return cand;
  }
  return std::nullopt;
}

}  // namespace mwlat
