#include "threefold/gf.hpp"

#include <algorithm>
#include <stdexcept>

#include "threefold/errors.hpp"

namespace threefold {

namespace fppoly {

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly add(const FpPoly& a, const FpPoly& b, uint32_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = fp_add(r[i], b[i], p);
  trim(r);
  return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, uint32_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = fp_sub(r[i], b[i], p);
  trim(r);
  return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = fp_add(r[i + j], fp_mul(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

FpPoly scale(const FpPoly& a, uint32_t c, uint32_t p) {
  c %= p;
  if (c == 0) return {};
  FpPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_mul(a[i], c, p);
  return r;
}

void divrem(const FpPoly& a, const FpPoly& b, uint32_t p, FpPoly& q, FpPoly& r) {
  if (b.empty()) throw std::domain_error("fppoly divrem by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  uint32_t lead_inv = fp_inv(b.back(), p);
  while (r.size() >= b.size()) {
    size_t shift = r.size() - b.size();
    uint32_t c = fp_mul(r.back(), lead_inv, p);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      r[shift + i] = fp_sub(r[shift + i], fp_mul(c, b[i], p), p);
    trim(r);
    if (r.empty()) break;
  }
  trim(q);
}

FpPoly mod(const FpPoly& a, const FpPoly& b, uint32_t p) {
  FpPoly q, r;
  divrem(a, b, p, q, r);
  return r;
}

FpPoly monic(FpPoly f, uint32_t p) {
  trim(f);
  if (f.empty() || f.back() == 1) return f;
  return scale(f, fp_inv(f.back(), p), p);
}

FpPoly gcd(FpPoly a, FpPoly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

FpPoly derivative(const FpPoly& f, uint32_t p) {
  if (f.size() <= 1) return {};
  FpPoly r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i)
    r[i - 1] = fp_mul(f[i], static_cast<uint32_t>(i % p), p);
  trim(r);
  return r;
}

FpPoly powmod(const FpPoly& base, uint64_t e, const FpPoly& m, uint32_t p) {
  FpPoly r{1};
  FpPoly b = mod(base, m, p);
  while (e) {
    if (e & 1) r = mod(mul(r, b, p), m, p);
    b = mod(mul(b, b, p), m, p);
    e >>= 1;
  }
  return r;
}

FpPoly compose_mod(const FpPoly& a, const FpPoly& b, const FpPoly& m, uint32_t p) {
  // Horner
  FpPoly r{};
  for (size_t i = a.size(); i-- > 0;) {
    r = mod(mul(r, b, p), m, p);
    if (a[i]) r = add(r, FpPoly{a[i]}, p);
  }
  return r;
}

bool is_squarefree(const FpPoly& f, uint32_t p) {
  FpPoly d = derivative(f, p);
  if (d.empty()) return deg(f) <= 0;
  return deg(gcd(f, d, p)) == 0;
}

namespace {

// X^{p^i} mod f for i = 1..count
std::vector<FpPoly> frobenius_powers(const FpPoly& f, uint32_t p, int count) {
  std::vector<FpPoly> out;
  FpPoly x{0, 1};
  FpPoly xp = powmod(x, p, f, p);
  out.push_back(xp);
  for (int i = 1; i < count; ++i)
    out.push_back(compose_mod(out.back(), xp, f, p));
  return out;
}

}  // namespace

bool is_irreducible(const FpPoly& f, uint32_t p) {
  int n = deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  FpPoly x{0, 1};
  auto frob = frobenius_powers(f, p, n);
  // X^{p^n} == X mod f
  if (sub(frob[n - 1], x, p) != FpPoly{}) return false;
  // gcd(X^{p^{n/r}} - X, f) = 1 for prime r | n
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool r_prime = true;
    for (int d = 2; d * d <= r; ++d)
      if (r % d == 0) { r_prime = false; break; }
    if (!r_prime) continue;
    FpPoly g = gcd(sub(frob[n / r - 1], x, p), f, p);
    if (deg(g) != 0) return false;
  }
  return true;
}

namespace {

// equal-degree splitting of a squarefree product of degree-d irreducibles
void edf(const FpPoly& f, int d, uint32_t p, Rng& rng, std::vector<FpPoly>& out) {
  if (deg(f) == d) {
    out.push_back(monic(f, p));
    return;
  }
  for (int attempt = 0; attempt < 256; ++attempt) {
    FpPoly a(deg(f), 0);
    for (auto& c : a) c = rng.field(p);
    trim(a);
    if (deg(a) < 1) continue;
    FpPoly g = gcd(a, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      edf(g, d, p, rng, out);
      FpPoly q, r;
      divrem(f, g, p, q, r);
      edf(q, d, p, rng, out);
      return;
    }
    // w = a^{(p^d - 1)/2}: via a^{sum p^i} then ^(p-1)/2
    FpPoly v = mod(a, f, p);
    if (d > 1) {
      auto frob = frobenius_powers(f, p, d - 1);
      FpPoly acc = v;
      for (int i = 0; i < d - 1; ++i)
        acc = mod(mul(acc, compose_mod(v, frob[i], f, p), p), f, p);
      v = acc;
    }
    FpPoly w = powmod(v, (p - 1) / 2, f, p);
    FpPoly g2 = gcd(sub(w, FpPoly{1}, p), f, p);
    if (deg(g2) > 0 && deg(g2) < deg(f)) {
      edf(g2, d, p, rng, out);
      FpPoly q, r;
      divrem(f, g2, p, q, r);
      edf(q, d, p, rng, out);
      return;
    }
  }
  throw std::runtime_error("edf: splitting failed");
}

}  // namespace

std::vector<FpPoly> factor_squarefree(FpPoly f, uint32_t p, uint64_t seed) {
  f = monic(f, p);
  std::vector<FpPoly> out;
  if (deg(f) <= 0) return out;
  Rng rng(derive_seed(seed, "edf"));
  FpPoly x{0, 1};
  FpPoly rest = f;
  // distinct-degree then equal-degree
  for (int d = 1; deg(rest) > 0 && d <= deg(rest); ++d) {
    if (2 * d > deg(rest)) break;
    // X^{p^d} mod rest
    FpPoly w = x;
    for (int i = 0; i < d; ++i) w = powmod(w, p, rest, p);
    FpPoly g = gcd(sub(w, x, p), rest, p);
    if (deg(g) > 0) {
      edf(g, d, p, rng, out);
      FpPoly q, r;
      divrem(rest, g, p, q, r);
      rest = q;
    }
  }
  if (deg(rest) > 0) out.push_back(monic(rest, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint32_t> roots_in_fp(const FpPoly& f, uint32_t p, uint64_t seed) {
  auto factors = factor_squarefree(f, p, seed);
  std::vector<uint32_t> roots;
  for (const auto& g : factors) {
    if (deg(g) != 1) throw std::runtime_error("roots_in_fp: nonlinear factor");
    roots.push_back(fp_neg(g[0], p));  // monic: X + g0
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

FpPoly random_monic(int degree, uint32_t p, Rng& rng) {
  FpPoly f(degree + 1, 0);
  f[degree] = 1;
  for (int i = 0; i < degree; ++i) f[i] = rng.field(p);
  return f;
}

FpPoly irreducible_poly(int degree, uint32_t p, uint64_t seed) {
  if (degree == 1) return FpPoly{0, 1};  // w - 0: F_p itself
  for (uint64_t attempt = 0; attempt < 4096; ++attempt) {
    Rng rng(derive_seed(seed, "irr", attempt));
    FpPoly f = random_monic(degree, p, rng);
    if (is_irreducible(f, p)) return f;
  }
  throw std::runtime_error("irreducible_poly: search failed");
}

}  // namespace fppoly

GFCtx::GFCtx(uint32_t p_, FpPoly modulus_) : p(p_), modulus(std::move(modulus_)) {
  fppoly::trim(modulus);
  k = fppoly::deg(modulus);
  if (k < 1) throw bad_arguments_error("GFCtx: bad modulus");
}

std::shared_ptr<const GFCtx> GFCtx::make(uint32_t p, int k, uint64_t seed) {
  return std::make_shared<const GFCtx>(p, fppoly::irreducible_poly(k, p, seed));
}

GFElem GFField::add(const Elem& a, const Elem& b) const {
  Elem r(ctx->k);
  for (int i = 0; i < ctx->k; ++i) r[i] = fp_add(a[i], b[i], ctx->p);
  return r;
}

GFElem GFField::sub(const Elem& a, const Elem& b) const {
  Elem r(ctx->k);
  for (int i = 0; i < ctx->k; ++i) r[i] = fp_sub(a[i], b[i], ctx->p);
  return r;
}

GFElem GFField::neg(const Elem& a) const {
  Elem r(ctx->k);
  for (int i = 0; i < ctx->k; ++i) r[i] = fp_neg(a[i], ctx->p);
  return r;
}

GFElem GFField::mul(const Elem& a, const Elem& b) const {
  FpPoly prod = fppoly::mul(FpPoly(a.begin(), a.end()), FpPoly(b.begin(), b.end()), ctx->p);
  FpPoly red = fppoly::mod(prod, ctx->modulus, ctx->p);
  Elem r(ctx->k, 0);
  for (size_t i = 0; i < red.size(); ++i) r[i] = red[i];
  return r;
}

GFElem GFField::inv(const Elem& a) const {
  // extended Euclid over F_p[w]
  FpPoly r0 = ctx->modulus, r1(a.begin(), a.end());
  fppoly::trim(r1);
  if (r1.empty()) throw std::domain_error("GF inverse of zero");
  FpPoly t0{}, t1{1};
  while (!r1.empty()) {
    FpPoly q, rem;
    fppoly::divrem(r0, r1, ctx->p, q, rem);
    FpPoly t2 = fppoly::sub(t0, fppoly::mul(q, t1, ctx->p), ctx->p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (fppoly::deg(r0) != 0) throw std::domain_error("GF inverse: not invertible");
  FpPoly res = fppoly::scale(t0, fp_inv(r0[0], ctx->p), ctx->p);
  Elem out(ctx->k, 0);
  for (size_t i = 0; i < res.size(); ++i) out[i] = res[i];
  return out;
}

GFElem GFField::pow(Elem a, uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

namespace {

// univariate polynomials over GF, ascending coefficients
using GP = std::vector<GFElem>;

void gp_trim(const GFField& F, GP& f) {
  while (!f.empty() && F.is_zero(f.back())) f.pop_back();
}

int gp_deg(const GP& f) { return static_cast<int>(f.size()) - 1; }

GP gp_sub(const GFField& F, const GP& a, const GP& b) {
  GP r(std::max(a.size(), b.size()), F.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  gp_trim(F, r);
  return r;
}

GP gp_mul(const GFField& F, const GP& a, const GP& b) {
  if (a.empty() || b.empty()) return {};
  GP r(a.size() + b.size() - 1, F.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  gp_trim(F, r);
  return r;
}

void gp_divrem(const GFField& F, const GP& a, const GP& b, GP& q, GP& r) {
  r = a;
  gp_trim(F, r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, F.zero());
  GFElem lead_inv = F.inv(b.back());
  while (r.size() >= b.size()) {
    size_t shift = r.size() - b.size();
    GFElem c = F.mul(r.back(), lead_inv);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
    gp_trim(F, r);
    if (r.empty()) break;
  }
}

GP gp_mod(const GFField& F, const GP& a, const GP& b) {
  GP q, r;
  gp_divrem(F, a, b, q, r);
  return r;
}

GP gp_monic(const GFField& F, GP f) {
  gp_trim(F, f);
  if (f.empty()) return f;
  GFElem inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, inv);
  return f;
}

GP gp_gcd(const GFField& F, GP a, GP b) {
  gp_trim(F, a);
  gp_trim(F, b);
  while (!b.empty()) {
    GP r = gp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return gp_monic(F, a);
}

GP gp_powmod(const GFField& F, const GP& base, uint64_t e, const GP& m) {
  GP r{F.one()};
  GP b = gp_mod(F, base, m);
  while (e) {
    if (e & 1) r = gp_mod(F, gp_mul(F, r, b), m);
    b = gp_mod(F, gp_mul(F, b, b), m);
    e >>= 1;
  }
  return r;
}

// z -> z^p mod m: coefficient Frobenius composed with X -> X^p
GP gp_frobenius(const GFField& F, const GP& z, const GP& xp, const GP& m) {
  GP r{};
  for (size_t i = z.size(); i-- > 0;) {
    r = gp_mod(F, gp_mul(F, r, xp), m);
    GFElem c = F.frobenius(z[i]);
    if (r.empty()) r.push_back(c);
    else r[0] = F.add(r[0], c);
    gp_trim(F, r);
  }
  return r;
}

}  // namespace

GFElem find_root(const FpPoly& h, const GFField& F, uint64_t seed) {
  const uint32_t p = F.ctx->p;
  GP U;
  for (auto c : h) U.push_back(F.from_fp(c));
  U = gp_monic(F, U);
  if (gp_deg(U) < 1) throw std::runtime_error("find_root: constant input");

  Rng rng(derive_seed(seed, "gf-root"));
  int guard = 0;
  while (gp_deg(U) > 1) {
    if (++guard > 512) throw std::runtime_error("find_root: did not converge");
    // y = X + alpha
    GFElem alpha(F.ctx->k);
    for (auto& v : alpha) v = rng.field(p);
    GP y{alpha, F.one()};
    GP g = gp_gcd(F, y, U);
    if (gp_deg(g) > 0 && gp_deg(g) < gp_deg(U)) { U = gp_monic(F, g); continue; }
    GP xp = gp_powmod(F, GP{F.zero(), F.one()}, p, U);
    // v = y^{1 + p + ... + p^{k-1}} mod U
    GP v = gp_mod(F, y, U);
    GP z = v;
    for (int i = 1; i < F.ctx->k; ++i) {
      z = gp_frobenius(F, z, xp, U);
      v = gp_mod(F, gp_mul(F, v, z), U);
    }
    GP w = gp_powmod(F, v, (p - 1) / 2, U);
    GP w1 = gp_sub(F, w, GP{F.one()});
    GP g2 = gp_gcd(F, w1, U);
    if (gp_deg(g2) > 0 && gp_deg(g2) < gp_deg(U)) {
      GP q, r;
      if (2 * gp_deg(g2) <= gp_deg(U)) {
        U = gp_monic(F, g2);
      } else {
        gp_divrem(F, U, g2, q, r);
        U = gp_monic(F, q);
      }
    }
  }
  // root of monic linear X + c
  return F.neg(U[0]);
}

std::string gf_to_string(const GFElem& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

}  // namespace threefold
