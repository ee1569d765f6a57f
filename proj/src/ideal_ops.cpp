#include "threefold/ideal_ops.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "threefold/errors.hpp"
#include "threefold/linalg.hpp"

namespace threefold {

namespace {
const MonomialOrder kGrevlex = MonomialOrder::grevlex();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring, J.ring);
  std::vector<Poly> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring, std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring, J.ring);
  std::vector<Poly> gens;
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) gens.push_back(mul(f, g, kGrevlex));
  return Ideal(I.ring, std::move(gens));
}

Ideal ideal_power(const Ideal& I, int k) {
  Ideal acc(I.ring, {Poly::constant(I.ring, 1)});
  for (int i = 0; i < k; ++i) acc = ideal_product(acc, I);
  return acc;
}

Ideal principal_ideal(const Poly& f) { return Ideal(f.ring, {f}); }

Ideal irrelevant_ideal(Ring r) {
  std::vector<Poly> gens;
  for (int i = 0; i < r.n; ++i) gens.push_back(Poly::variable(r, i));
  return Ideal(r, std::move(gens));
}

Poly shift_vars(const Poly& f, Ring target, int shift) {
  Poly out(target);
  out.t.reserve(f.t.size());
  for (const auto& tm : f.t) {
    Term nt;
    nt.c = tm.c;
    nt.m.deg = tm.m.deg;
    for (int i = 0; i < f.ring.n; ++i) nt.m.e[i + shift] = tm.m.e[i];
    out.t.push_back(nt);
  }
  out.normalize(kGrevlex);
  return out;
}

Poly unshift_vars(const Poly& f, Ring target, int shift) {
  Poly out(target);
  out.t.reserve(f.t.size());
  for (const auto& tm : f.t) {
    Term nt;
    nt.c = tm.c;
    nt.m.deg = tm.m.deg;
    for (int i = shift; i < shift + target.n; ++i) nt.m.e[i - shift] = tm.m.e[i];
    out.t.push_back(nt);
  }
  out.normalize(kGrevlex);
  return out;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring, J.ring);
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(I.ring, {});
  Ring big{I.ring.p, I.ring.n + 1};
  Poly t = Poly::variable(big, 0);
  Poly one_minus_t = sub(Poly::constant(big, 1), t, kGrevlex);
  std::vector<Poly> gens;
  for (const auto& f : I.gens()) gens.push_back(mul(t, shift_vars(f, big, 1), kGrevlex));
  for (const auto& g : J.gens())
    gens.push_back(mul(one_minus_t, shift_vars(g, big, 1), kGrevlex));
  MonomialOrder elim = MonomialOrder::block(1);
  auto gb = buchberger(std::move(gens), elim);
  std::vector<Poly> kept;
  for (const auto& g : gb)
    if (std::all_of(g.t.begin(), g.t.end(), [](const Term& tm) { return tm.m.e[0] == 0; }))
      kept.push_back(unshift_vars(g, I.ring, 1));
  return Ideal(I.ring, std::move(kept));
}

Ideal colon_poly(const Ideal& I, const Poly& f) {
  require_same_ring(I.ring, f.ring);
  if (f.is_zero()) return Ideal(I.ring, {Poly::constant(I.ring, 1)});
  Ideal K = intersect(I, principal_ideal(f));
  std::vector<Poly> out;
  std::vector<Poly> divisor{f};
  for (const auto& g : K.gens()) {
    std::vector<Poly> q;
    Poly r = normal_form_with_quotients(g, divisor, kGrevlex, q);
    if (!r.is_zero())
      throw std::logic_error("colon_poly: intersection element not divisible");
    out.push_back(q[0]);
  }
  return Ideal(I.ring, std::move(out));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring, J.ring);
  if (J.is_zero_ideal()) return Ideal(I.ring, {Poly::constant(I.ring, 1)});
  bool first = true;
  Ideal acc(I.ring, {});
  for (const auto& g : J.gens()) {
    Ideal c = colon_poly(I, g);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (int iter = 0; iter < 64; ++iter) {
    Ideal next = colon(cur, J);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
  throw resource_limit_error(64);
}

namespace {

// divide g by the largest power of the last variable dividing it
Poly strip_last_var(const Poly& g, int n) {
  uint8_t k = 255;
  for (const auto& tm : g.t) k = std::min(k, tm.m.e[n - 1]);
  if (k == 0 || g.is_zero()) return g;
  Poly out = g;
  for (auto& tm : out.t) {
    tm.m.e[n - 1] = static_cast<uint8_t>(tm.m.e[n - 1] - k);
    tm.m.deg = static_cast<uint16_t>(tm.m.deg - k);
  }
  return out;
}

// (I : x_{n-1}^∞) from a grevlex basis (reverse-lex saturation trick)
Ideal saturate_last_var(const Ideal& I) {
  const auto& gb = groebner_basis(I, kGrevlex);
  std::vector<Poly> gens;
  gens.reserve(gb.size());
  for (const auto& g : gb) gens.push_back(strip_last_var(g, I.ring.n));
  return Ideal(I.ring, std::move(gens));
}

Ideal saturate_irrelevant_via(const Ideal& I, uint64_t seed) {
  auto mat = random_invertible_matrix(I.ring.n, I.ring.p, seed);
  std::vector<std::vector<uint32_t>> inv;
  invert_matrix(FpField{I.ring.p}, mat, inv);
  Ideal moved = apply_linear_change(I, mat);
  Ideal sat = saturate_last_var(moved);
  Ideal back = apply_linear_change(sat, inv);
  back.saturated = SatFlag::yes;
  return back;
}

}  // namespace

Ideal saturate_irrelevant(const Ideal& I) {
  if (I.saturated == SatFlag::yes) return I;
  if (I.is_zero_ideal()) {
    Ideal out = I;
    out.saturated = SatFlag::yes;
    return out;
  }
  Ideal a = saturate_irrelevant_via(I, derive_seed(0x5afe, "sat-a"));
  Ideal b = saturate_irrelevant_via(I, derive_seed(0x5afe, "sat-b"));
  if (ideal_equal(a, b)) return a;
  Ideal out = saturate(I, irrelevant_ideal(I.ring));
  out.saturated = SatFlag::yes;
  return out;
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop) {
  if (drop.empty()) return I;
  const int n = I.ring.n;
  const int k = static_cast<int>(drop.size());
  // permutation: dropped variables first, the rest in original order
  std::vector<int> perm(n, -1);  // perm[old] = new
  std::vector<bool> dropped(n, false);
  int pos = 0;
  for (int v : drop) {
    if (v < 0 || v >= n) throw bad_arguments_error("eliminate: bad variable index");
    if (dropped[v]) throw bad_arguments_error("eliminate: duplicate variable");
    dropped[v] = true;
  }
  for (int v = 0; v < n; ++v)
    if (dropped[v]) perm[v] = pos++;
  for (int v = 0; v < n; ++v)
    if (!dropped[v]) perm[v] = pos++;

  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const auto& f : I.gens()) {
    Poly g(I.ring);
    g.t.reserve(f.t.size());
    for (const auto& tm : f.t) {
      Term nt;
      nt.c = tm.c;
      nt.m.deg = tm.m.deg;
      for (int i = 0; i < n; ++i) nt.m.e[perm[i]] = tm.m.e[i];
      g.t.push_back(nt);
    }
    g.normalize(kGrevlex);
    gens.push_back(std::move(g));
  }
  auto gb = buchberger(std::move(gens), MonomialOrder::block(k));
  Ring small{I.ring.p, n - k};
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    bool free = std::all_of(g.t.begin(), g.t.end(), [&](const Term& tm) {
      for (int i = 0; i < k; ++i)
        if (tm.m.e[i]) return false;
      return true;
    });
    if (free) kept.push_back(unshift_vars(g, small, k));
  }
  return Ideal(small, std::move(kept));
}

namespace {

Poly poly_det(const std::vector<std::vector<Poly>>& m, std::vector<int> cols, int row,
              Ring ring) {
  if (cols.empty()) return Poly::constant(ring, 1);
  Poly acc(ring);
  for (size_t ci = 0; ci < cols.size(); ++ci) {
    std::vector<int> rest;
    for (size_t cj = 0; cj < cols.size(); ++cj)
      if (cj != ci) rest.push_back(cols[cj]);
    Poly minor = poly_det(m, rest, row + 1, ring);
    Poly term = mul(m[row][cols[ci]], minor, kGrevlex);
    acc = (ci % 2 == 0) ? add(acc, term, kGrevlex) : sub(acc, term, kGrevlex);
  }
  return acc;
}

void combinations(int n, int k, std::vector<int>& cur, int start,
                  const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == k) {
    fn(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, fn);
    cur.pop_back();
  }
}

}  // namespace

Ideal singular_locus_ideal(const Ideal& I, int codim) {
  const int n = I.ring.n;
  const int g = static_cast<int>(I.gens().size());
  if (codim <= 0 || codim > std::min(g, n))
    throw bad_arguments_error("singular_locus_ideal: bad codimension");
  std::vector<std::vector<Poly>> jac(g, std::vector<Poly>(n, Poly(I.ring)));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < n; ++j) jac[i][j] = derivative(I.gens()[i], j);

  std::vector<Poly> gens = I.gens();
  std::vector<int> rows_sel, cols_sel;
  combinations(g, codim, rows_sel, 0, [&](const std::vector<int>& rows) {
    std::vector<std::vector<Poly>> sub(codim, std::vector<Poly>(n, Poly(I.ring)));
    for (int i = 0; i < codim; ++i) sub[i] = jac[rows[i]];
    combinations(n, codim, cols_sel, 0, [&](const std::vector<int>& cols) {
      Poly d = poly_det(sub, cols, 0, I.ring);
      if (!d.is_zero()) gens.push_back(d);
    });
  });
  return Ideal(I.ring, std::move(gens));
}

Ideal jacobian_ideal(const Ideal& I) {
  return singular_locus_ideal(I, static_cast<int>(I.gens().size()));
}

std::vector<std::vector<uint32_t>> random_invertible_matrix(int n, uint32_t p,
                                                            uint64_t seed) {
  FpField F{p};
  for (uint64_t attempt = 0;; ++attempt) {
    Rng rng(derive_seed(seed, "matrix", attempt));
    std::vector<std::vector<uint32_t>> m(n, std::vector<uint32_t>(n));
    for (auto& row : m)
      for (auto& v : row) v = rng.field(p);
    if (rank(F, m) == n) return m;
  }
}

Ideal apply_linear_change(const Ideal& I, const std::vector<std::vector<uint32_t>>& mat) {
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const auto& f : I.gens()) gens.push_back(linear_change(f, mat, kGrevlex));
  return Ideal(I.ring, std::move(gens), I.saturated);
}

Ideal generic_coordinate_change(const Ideal& I, uint64_t seed) {
  auto mat = random_invertible_matrix(I.ring.n, I.ring.p, seed);
  return apply_linear_change(I, mat);
}

std::vector<Poly> graded_piece(const Ideal& I, int k) {
  if (k < 0) return {};
  const Ring r = I.ring;
  auto mons = monomials_of_degree(r.n, k);
  std::unordered_map<Monomial, size_t, MonomialHasher> index;
  index.reserve(mons.size());
  for (size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;

  std::vector<std::vector<uint32_t>> rows;
  for (const auto& g : I.gens()) {
    int dg = g.homogeneous_degree();
    if (dg < 0 || dg > k) continue;
    for (const auto& m : monomials_of_degree(r.n, k - dg)) {
      Poly mg = mul_term(g, m, 1);
      std::vector<uint32_t> row(mons.size(), 0);
      for (const auto& tm : mg.t) row[index.at(tm.m)] = tm.c;
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return {};
  FpField F{r.p};
  int rk = rref(F, rows);
  std::vector<Poly> basis;
  for (int i = 0; i < rk; ++i) {
    Poly f(r);
    for (size_t j = 0; j < mons.size(); ++j)
      if (rows[i][j]) f.t.push_back({mons[j], rows[i][j]});
    f.normalize(kGrevlex);
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace threefold
