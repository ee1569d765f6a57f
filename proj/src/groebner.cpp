#include "threefold/groebner.hpp"

#include <algorithm>
#include <set>

#include "threefold/errors.hpp"

namespace threefold {

namespace {

// reduce h once at its lead term by g; caller guarantees lm(g) | lm(h)
Poly reduce_step(const Poly& h, const Poly& g, const MonomialOrder& ord) {
  Monomial q = g.lm().quotient_into(h.lm());
  uint32_t c = fp_div(h.lc(), g.lc(), h.ring.p);
  return sub(h, mul_term(g, q, c), ord);
}

int find_reducer(const Monomial& m, const std::vector<Poly>& basis) {
  for (size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero() && basis[i].lm().divides(m)) return static_cast<int>(i);
  return -1;
}

}  // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord) {
  for (const auto& b : basis) require_same_ring(f.ring, b.ring);
  Poly h = f;
  h.normalize(ord);
  Poly r(f.ring);
  while (!h.is_zero()) {
    int i = find_reducer(h.lm(), basis);
    if (i >= 0) {
      h = reduce_step(h, basis[i], ord);
    } else {
      r.t.push_back(h.lead());
      h.t.erase(h.t.begin());
    }
  }
  return r;  // terms were emitted in descending order
}

Poly normal_form_with_quotients(const Poly& f, const std::vector<Poly>& basis,
                                const MonomialOrder& ord, std::vector<Poly>& quotients) {
  quotients.assign(basis.size(), Poly(f.ring));
  Poly h = f;
  h.normalize(ord);
  Poly r(f.ring);
  while (!h.is_zero()) {
    int i = find_reducer(h.lm(), basis);
    if (i >= 0) {
      Monomial q = basis[i].lm().quotient_into(h.lm());
      uint32_t c = fp_div(h.lc(), basis[i].lc(), h.ring.p);
      quotients[i] = add(quotients[i], Poly::from_terms(f.ring, {{q, c}}, ord), ord);
      h = sub(h, mul_term(basis[i], q, c), ord);
    } else {
      r.t.push_back(h.lead());
      h.t.erase(h.t.begin());
    }
  }
  return r;
}

Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  require_same_ring(f.ring, g.ring);
  Monomial l = Monomial::lcm(f.lm(), g.lm());
  Poly a = mul_term(f, f.lm().quotient_into(l), fp_inv(f.lc(), f.ring.p));
  Poly b = mul_term(g, g.lm().quotient_into(l), fp_inv(g.lc(), g.ring.p));
  return sub(a, b, ord);
}

std::vector<Poly> interreduce(std::vector<Poly> gens, const MonomialOrder& ord) {
  if (gens.empty()) return gens;
  Ring ring = gens[0].ring;
  for (auto& g : gens) {
    g.normalize(ord);
    g.make_monic();
  }
  std::erase_if(gens, [](const Poly& g) { return g.is_zero(); });

  // drop elements whose lead is divisible by another lead (keep the one with
  // the smaller lead; ties resolved by first occurrence)
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    return ord.cmp(a.lm(), b.lm(), ring.n) < 0;
  });
  std::vector<Poly> minimal;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (m.lm().divides(g.lm())) { redundant = true; break; }
    if (!redundant) minimal.push_back(std::move(g));
  }

  // tail-reduce to a fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Poly r = normal_form(minimal[i], others, ord);
      r.make_monic();
      if (!(r == minimal[i])) {
        changed = true;
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + i);
          --i;
        } else {
          minimal[i] = r;
        }
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return ord.cmp(a.lm(), b.lm(), ring.n) < 0;
  });
  return minimal;
}

namespace {

struct Pair {
  int sugar;
  Monomial lcm;
  int i, j;
};

struct PairLess {
  const MonomialOrder* ord;
  int n;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ord->cmp(a.lcm, b.lcm, n);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

std::vector<Poly> buchberger(std::vector<Poly> gens, const MonomialOrder& ord,
                             const GbOptions& opts) {
  std::erase_if(gens, [](const Poly& g) { return g.is_zero(); });
  if (gens.empty()) return {};
  Ring ring = gens[0].ring;
  for (auto& g : gens) {
    require_same_ring(g.ring, ring);
    g.normalize(ord);
    g.make_monic();
  }
  // deterministic starting order
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    return ord.cmp(a.lm(), b.lm(), ring.n) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const Poly& a, const Poly& b) { return a == b; }),
             gens.end());

  std::vector<Poly> G = gens;
  std::vector<int> sugar;
  sugar.reserve(G.size());
  for (const auto& g : G) sugar.push_back(g.degree());

  PairLess less{&ord, ring.n};
  std::set<Pair, PairLess> pending(less);
  std::set<std::pair<int, int>> pending_idx;

  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(G[i].lm(), G[j].lm());
      int s = std::max(sugar[i] + (l.deg - G[i].lm().deg),
                       sugar[j] + (l.deg - G[j].lm().deg));
      pending.insert({s, l, i, j});
      pending_idx.insert({i, j});
    }
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs(j);

  auto is_pending = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return pending_idx.count({a, b}) > 0;
  };

  size_t pops = 0;
  while (!pending.empty()) {
    if (++pops > opts.max_pairs) throw resource_limit_error(pops);
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    pending_idx.erase({pr.i, pr.j});

    // Buchberger's first criterion
    if (Monomial::coprime(G[pr.i].lm(), G[pr.j].lm())) continue;

    // chain criterion: some k with lt_k | lcm(i,j) and both (i,k), (j,k)
    // already handled
    bool skip = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!G[k].lm().divides(pr.lcm)) continue;
      if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) skip = true;
    }
    if (skip) continue;

    Poly s = s_poly(G[pr.i], G[pr.j], ord);
    Poly r = normal_form(s, G, ord);
    if (r.is_zero()) continue;
    r.make_monic();
    G.push_back(r);
    sugar.push_back(pr.sugar);
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  return interreduce(std::move(G), ord);
}

const std::vector<Poly>& groebner_basis(const Ideal& I, const MonomialOrder& ord,
                                        const GbOptions& opts) {
  if (auto hit = I.cached_basis(ord)) return *hit;
  auto basis = std::make_shared<const std::vector<Poly>>(buchberger(I.gens(), ord, opts));
  I.store_basis(ord, basis);
  return *I.cached_basis(ord);
}

bool contains(const Ideal& I, const Poly& f, const GbOptions& opts) {
  require_same_ring(I.ring, f.ring);
  if (f.is_zero()) return true;
  const auto& gb = groebner_basis(I, MonomialOrder::grevlex(), opts);
  if (gb.empty()) return false;
  return normal_form(f, gb, MonomialOrder::grevlex()).is_zero();
}

bool ideal_contains(const Ideal& outer, const Ideal& inner, const GbOptions& opts) {
  for (const auto& g : inner.gens())
    if (!contains(outer, g, opts)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GbOptions& opts) {
  require_same_ring(I.ring, J.ring);
  const auto& a = groebner_basis(I, MonomialOrder::grevlex(), opts);
  const auto& b = groebner_basis(J, MonomialOrder::grevlex(), opts);
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool is_unit_ideal(const Ideal& I) {
  const auto& gb = groebner_basis(I, MonomialOrder::grevlex());
  return gb.size() == 1 && gb[0].size() == 1 && gb[0].lm().is_one();
}

}  // namespace threefold
