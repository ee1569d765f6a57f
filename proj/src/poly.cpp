#include "threefold/poly.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace threefold {

namespace {

struct MonoHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

using Accum = std::unordered_map<Monomial, uint32_t, MonoHash>;

Poly from_accum(Ring r, const Accum& acc, const MonomialOrder& ord) {
  Poly out(r);
  out.t.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) out.t.push_back({m, c});
  std::sort(out.t.begin(), out.t.end(), [&](const Term& a, const Term& b) {
    return ord.cmp(a.m, b.m, r.n) > 0;
  });
  return out;
}

}  // namespace

void Poly::normalize(const MonomialOrder& ord) {
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
    return ord.cmp(a.m, b.m, ring.n) > 0;
  });
  std::vector<Term> out;
  out.reserve(t.size());
  for (const auto& tm : t) {
    if (!out.empty() && out.back().m == tm.m) {
      out.back().c = fp_add(out.back().c, tm.c, ring.p);
    } else {
      out.push_back(tm);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& a) { return a.c == 0; }),
            out.end());
  t = std::move(out);
}

void Poly::make_monic() {
  if (t.empty()) return;
  uint32_t inv = fp_inv(t.front().c, ring.p);
  if (inv == 1) return;
  for (auto& tm : t) tm.c = fp_mul(tm.c, inv, ring.p);
}

Poly Poly::constant(Ring r, uint32_t c) {
  Poly f(r);
  c %= r.p;
  if (c) f.t.push_back({Monomial::one(), c});
  return f;
}

Poly Poly::variable(Ring r, int i) {
  Poly f(r);
  f.t.push_back({Monomial::var(i), 1});
  return f;
}

Poly Poly::from_terms(Ring r, std::vector<Term> terms, const MonomialOrder& ord) {
  Poly f(r);
  f.t = std::move(terms);
  for (auto& tm : f.t) tm.c %= r.p;
  f.normalize(ord);
  return f;
}

bool Poly::operator==(const Poly& o) const {
  if (ring != o.ring || t.size() != o.t.size()) return false;
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i].c != o.t[i].c || t[i].m != o.t[i].m) return false;
  return true;
}

Poly add(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  require_same_ring(f.ring, g.ring);
  Poly out(f.ring);
  out.t.reserve(f.t.size() + g.t.size());
  size_t i = 0, j = 0;
  const int n = f.ring.n;
  const uint32_t p = f.ring.p;
  while (i < f.t.size() && j < g.t.size()) {
    int c = ord.cmp(f.t[i].m, g.t[j].m, n);
    if (c > 0) {
      out.t.push_back(f.t[i++]);
    } else if (c < 0) {
      out.t.push_back(g.t[j++]);
    } else {
      uint32_t s = fp_add(f.t[i].c, g.t[j].c, p);
      if (s) out.t.push_back({f.t[i].m, s});
      ++i; ++j;
    }
  }
  for (; i < f.t.size(); ++i) out.t.push_back(f.t[i]);
  for (; j < g.t.size(); ++j) out.t.push_back(g.t[j]);
  return out;
}

Poly sub(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  return add(f, neg(g), ord);
}

Poly neg(const Poly& f) {
  Poly out = f;
  for (auto& tm : out.t) tm.c = fp_neg(tm.c, f.ring.p);
  return out;
}

Poly scale(const Poly& f, uint32_t c) {
  c %= f.ring.p;
  Poly out(f.ring);
  if (c == 0) return out;
  out.t.reserve(f.t.size());
  for (const auto& tm : f.t) out.t.push_back({tm.m, fp_mul(tm.c, c, f.ring.p)});
  return out;
}

Poly mul_term(const Poly& f, const Monomial& m, uint32_t c) {
  c %= f.ring.p;
  Poly out(f.ring);
  if (c == 0) return out;
  out.t.reserve(f.t.size());
  for (const auto& tm : f.t)
    out.t.push_back({tm.m * m, fp_mul(tm.c, c, f.ring.p)});
  return out;
}

Poly mul(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  require_same_ring(f.ring, g.ring);
  Accum acc;
  acc.reserve(f.t.size() * g.t.size());
  const uint32_t p = f.ring.p;
  for (const auto& a : f.t)
    for (const auto& b : g.t) {
      Monomial m = a.m * b.m;
      uint32_t& slot = acc[m];
      slot = fp_add(slot, fp_mul(a.c, b.c, p), p);
    }
  return from_accum(f.ring, acc, ord);
}

Poly pow(const Poly& f, int e, const MonomialOrder& ord) {
  Poly acc = Poly::constant(f.ring, 1);
  for (int i = 0; i < e; ++i) acc = mul(acc, f, ord);
  return acc;
}

Poly derivative(const Poly& f, int var) {
  Poly out(f.ring);
  for (const auto& tm : f.t) {
    if (tm.m.e[var] == 0) continue;
    uint32_t c = fp_mul(tm.c, tm.m.e[var] % f.ring.p, f.ring.p);
    if (c == 0) continue;
    Term nt;
    nt.m = tm.m;
    nt.m.e[var] -= 1;
    nt.m.deg -= 1;
    nt.c = c;
    out.t.push_back(nt);
  }
  return out;
}

Poly substitute(const Poly& f, const std::vector<Poly>& image, Ring target_ring,
                const MonomialOrder& ord) {
  // cache powers of each image polynomial
  std::vector<std::vector<Poly>> powers(image.size());
  for (size_t i = 0; i < image.size(); ++i)
    powers[i].push_back(Poly::constant(target_ring, 1));
  auto power = [&](size_t i, int e) -> const Poly& {
    while (static_cast<int>(powers[i].size()) <= e)
      powers[i].push_back(mul(powers[i].back(), image[i], ord));
    return powers[i][e];
  };

  Poly out(target_ring);
  for (const auto& tm : f.t) {
    Poly term = Poly::constant(target_ring, tm.c);
    for (int i = 0; i < f.ring.n; ++i)
      if (tm.m.e[i]) term = mul(term, power(i, tm.m.e[i]), ord);
    out = add(out, term, ord);
  }
  return out;
}

Poly linear_change(const Poly& f, const std::vector<std::vector<uint32_t>>& mat,
                   const MonomialOrder& ord) {
  std::vector<Poly> image;
  image.reserve(f.ring.n);
  for (int i = 0; i < f.ring.n; ++i) {
    Poly li(f.ring);
    for (int j = 0; j < f.ring.n; ++j)
      if (mat[i][j] % f.ring.p)
        li.t.push_back({Monomial::var(j), mat[i][j] % f.ring.p});
    li.normalize(ord);
    image.push_back(li);
  }
  return substitute(f, image, f.ring, ord);
}

uint32_t evaluate(const Poly& f, const std::vector<uint32_t>& point) {
  const uint32_t p = f.ring.p;
  uint32_t acc = 0;
  for (const auto& tm : f.t) {
    uint32_t v = tm.c;
    for (int i = 0; i < f.ring.n; ++i)
      for (int k = 0; k < tm.m.e[i]; ++k) v = fp_mul(v, point[i] % p, p);
    acc = fp_add(acc, v, p);
  }
  return acc;
}

static void enum_monomials(int n, int degree, int var, Monomial cur,
                           std::vector<Monomial>& out) {
  if (var == n - 1) {
    cur.e[var] = static_cast<uint8_t>(degree);
    cur.deg = static_cast<uint16_t>(cur.deg + degree);
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    Monomial next = cur;
    next.e[var] = static_cast<uint8_t>(e);
    next.deg = static_cast<uint16_t>(next.deg + e);
    enum_monomials(n, degree - e, var + 1, next, out);
  }
}

std::vector<Monomial> monomials_of_degree(int n, int degree) {
  std::vector<Monomial> out;
  enum_monomials(n, degree, 0, Monomial::one(), out);
  std::sort(out.begin(), out.end(), [n](const Monomial& a, const Monomial& b) {
    return MonomialOrder::grevlex().cmp(a, b, n) > 0;
  });
  return out;
}

Poly random_form(Ring r, int degree, Rng& rng) {
  Poly f(r);
  for (const auto& m : monomials_of_degree(r.n, degree)) {
    uint32_t c = rng.field(r.p);
    if (c) f.t.push_back({m, c});
  }
  f.normalize(MonomialOrder::grevlex());
  return f;
}

std::string to_string(const Poly& f) {
  if (f.t.empty()) return "0";
  std::string out;
  bool first_term = true;
  for (const auto& tm : f.t) {
    if (!first_term) out += " + ";
    first_term = false;
    std::string piece;
    if (tm.c != 1 || tm.m.is_one()) piece = std::to_string(tm.c);
    for (int i = 0; i < f.ring.n; ++i) {
      if (!tm.m.e[i]) continue;
      if (!piece.empty()) piece += "*";
      piece += "x" + std::to_string(i);
      if (tm.m.e[i] > 1) piece += "^" + std::to_string(tm.m.e[i]);
    }
    out += piece;
  }
  return out;
}

}  // namespace threefold
