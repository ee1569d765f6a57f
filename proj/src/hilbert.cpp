#include "threefold/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

#include "threefold/errors.hpp"
#include "threefold/groebner.hpp"
#include "threefold/ideal_ops.hpp"

namespace threefold {

namespace {
const MonomialOrder kGrevlex = MonomialOrder::grevlex();

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return MonomialOrder::grevlex().cmp(a, b, kMaxVars) > 0;
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (kept.divides(m)) { redundant = true; break; }
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

std::vector<long long> poly_mul_1_minus_zd(const std::vector<long long>& a, int d) {
  std::vector<long long> out(a.size() + d, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + d] -= a[i];
  }
  return out;
}

std::vector<long long> poly_add(std::vector<long long> a, const std::vector<long long>& b,
                                int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  return a;
}

void trim(std::vector<long long>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens[0].deg == 0) return {0};  // unit ideal

  // pairwise coprime => product of (1 - z^deg)
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!Monomial::coprime(gens[i], gens[j])) coprime = false;
  if (coprime) {
    std::vector<long long> num{1};
    for (const auto& m : gens) num = poly_mul_1_minus_zd(num, m.deg);
    return num;
  }

  // pivot: the most frequent variable
  std::array<int, kMaxVars> freq{};
  for (const auto& m : gens)
    for (int v = 0; v < nvars; ++v)
      if (m.e[v]) ++freq[v];
  int pivot = 0;
  for (int v = 1; v < nvars; ++v)
    if (freq[v] > freq[pivot]) pivot = v;

  // I + (x_pivot)
  std::vector<Monomial> sum_gens{Monomial::var(pivot)};
  for (const auto& m : gens)
    if (m.e[pivot] == 0) sum_gens.push_back(m);

  // I : x_pivot
  std::vector<Monomial> colon_gens;
  colon_gens.reserve(gens.size());
  for (const auto& m : gens) {
    Monomial q = m;
    if (q.e[pivot]) {
      q.e[pivot] -= 1;
      q.deg -= 1;
    }
    colon_gens.push_back(q);
  }

  auto a = hilbert_numerator(std::move(sum_gens), nvars);
  auto b = hilbert_numerator(std::move(colon_gens), nvars);
  auto out = poly_add(std::move(a), b, 1);
  trim(out);
  return out;
}

long long binomial_ll(long long a, int b) {
  if (b < 0 || a < 0 || a < b) return 0;
  __int128 r = 1;
  for (int i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;
  }
  if (r > INT64_MAX) throw std::overflow_error("binomial_ll overflow");
  return static_cast<long long>(r);
}

long long HilbertData::hf(int t) const {
  if (t < 0) return 0;
  long long acc = 0;
  for (size_t i = 0; i < numerator.size() && static_cast<int>(i) <= t; ++i)
    acc += numerator[i] * binomial_ll(t - static_cast<long long>(i) + nvars - 1, nvars - 1);
  return acc;
}

long long HilbertData::hp(int t) const {
  // evaluate the generalized-binomial expansion exactly
  __int128 acc = 0;
  long long fact = 1;
  for (int i = 1; i <= nvars - 1; ++i) fact *= i;
  for (size_t i = 0; i < numerator.size(); ++i) {
    __int128 prod = 1;
    long long a = t - static_cast<long long>(i) + nvars - 1;
    for (int j = 0; j < nvars - 1; ++j) prod *= (a - j);
    acc += static_cast<__int128>(numerator[i]) * prod;
  }
  acc /= fact;
  return static_cast<long long>(acc);
}

namespace {

// expand HP(t) = sum_i num[i] * C(t - i + n - 1, n - 1) into coefficients
std::vector<Rational> hp_coefficients(const std::vector<long long>& num, int n) {
  const int deg = n - 1;
  std::vector<__int128> acc(deg + 1, 0);
  for (size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    // product over j of (t + (n - 1 - i - j)), j = 0..n-2
    std::vector<__int128> poly{1};
    for (int j = 0; j < deg; ++j) {
      long long c = static_cast<long long>(n) - 1 - static_cast<long long>(i) - j;
      std::vector<__int128> next(poly.size() + 1, 0);
      for (size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] += poly[k];
        next[k] += poly[k] * c;
      }
      poly = std::move(next);
    }
    for (size_t k = 0; k < poly.size(); ++k) acc[k] += poly[k] * num[i];
  }
  long long fact = 1;
  for (int i = 1; i <= deg; ++i) fact *= i;
  std::vector<Rational> out;
  for (auto v : acc) {
    // v / fact as an exact rational
    __int128 numv = v;
    long long denv = fact;
    // reduce via gcd in long long range: v fits after reduction by construction
    __int128 a = numv < 0 ? -numv : numv;
    long long b = denv;
    while (b) {
      __int128 tmp = a % b;
      a = b;
      b = static_cast<long long>(tmp);
    }
    long long gg = static_cast<long long>(a == 0 ? 1 : a);
    numv /= gg;
    denv /= gg;
    if (numv > INT64_MAX || numv < INT64_MIN)
      throw std::overflow_error("hp coefficient overflow");
    out.emplace_back(static_cast<long long>(numv), denv);
  }
  while (out.size() > 1 && out.back().num == 0) out.pop_back();
  return out;
}

HilbertData data_from_numerator(std::vector<long long> num, int n) {
  HilbertData hd;
  hd.nvars = n;
  trim(num);
  hd.numerator = std::move(num);
  hd.hp_coeffs = hp_coefficients(hd.numerator, n);

  int top = static_cast<int>(hd.hp_coeffs.size()) - 1;
  while (top > 0 && hd.hp_coeffs[top].num == 0) --top;
  if (hd.hp_coeffs.empty() || (top == 0 && hd.hp_coeffs[0].num == 0)) {
    hd.dim = -1;
    hd.degree = 0;
    hd.pa = 0;
  } else {
    hd.dim = top;
    long long fact = 1;
    for (int i = 1; i <= top; ++i) fact *= i;
    // degree = lead coeff * dim!
    const Rational& lead = hd.hp_coeffs[top];
    hd.degree = lead.num * (fact / lead.den);
    long long hp0 = hd.hp(0);
    if (hd.dim == 0) {
      hd.degree = hp0;
      hd.pa = 0;
    } else if (hd.dim == 1) {
      hd.pa = 1 - hp0;
    } else {
      hd.pa = ((hd.dim % 2) ? -1 : 1) * (hp0 - 1);
    }
  }

  int t0 = std::max(0, static_cast<int>(hd.numerator.size()) - 1 - hd.nvars + 1);
  while (t0 > 0 && hd.hf(t0 - 1) == hd.hp(t0 - 1)) --t0;
  hd.stabilization_degree = t0;
  return hd;
}

}  // namespace

HilbertData hilbert_data_raw(const Ideal& I) {
  const auto& gb = groebner_basis(I, kGrevlex);
  std::vector<Monomial> leads;
  leads.reserve(gb.size());
  for (const auto& g : gb) leads.push_back(g.lm());
  return data_from_numerator(hilbert_numerator(std::move(leads), I.ring.n), I.ring.n);
}

HilbertData hilbert_data(const Ideal& I) {
  if (I.saturated == SatFlag::yes) return hilbert_data_raw(I);
  return hilbert_data_raw(saturate_irrelevant(I));
}

long long graded_dim(const Ideal& I, int k) {
  if (k < 0) return 0;
  Ideal sat = I.saturated == SatFlag::yes ? I : saturate_irrelevant(I);
  HilbertData hd = hilbert_data_raw(sat);
  return binomial_ll(k + I.ring.n - 1, I.ring.n - 1) - hd.hf(k);
}

long long length_of_intersection(const Ideal& I, const Ideal& J) {
  Ideal K = saturate_irrelevant(ideal_sum(I, J));
  HilbertData hd = hilbert_data_raw(K);
  if (hd.dim > 0)
    throw positive_dimensional_error("dim = " + std::to_string(hd.dim));
  if (hd.dim < 0) return 0;
  return hd.degree;
}

Ideal hyperplane_section(const Ideal& I, uint64_t seed, int max_retries) {
  Ideal sat = I.saturated == SatFlag::yes ? I : saturate_irrelevant(I);
  HilbertData hd = hilbert_data_raw(sat);
  const Ring small{I.ring.p, I.ring.n - 1};
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Ideal moved = generic_coordinate_change(sat, derive_seed(seed, "section", attempt));
    std::vector<Poly> cut;
    cut.reserve(moved.gens().size());
    for (const auto& g : moved.gens()) {
      Poly f(small);
      for (const auto& tm : g.t) {
        if (tm.m.e[I.ring.n - 1]) continue;  // substitute x_{n-1} = 0
        Term nt;
        nt.c = tm.c;
        nt.m.deg = tm.m.deg;
        for (int i = 0; i + 1 < I.ring.n; ++i) nt.m.e[i] = tm.m.e[i];
        f.t.push_back(nt);
      }
      f.normalize(kGrevlex);
      if (!f.is_zero()) cut.push_back(std::move(f));
    }
    Ideal section = saturate_irrelevant(Ideal(small, std::move(cut)));
    HilbertData shd = hilbert_data_raw(section);
    if (hd.dim >= 1 && shd.dim == hd.dim - 1 && shd.degree == hd.degree) return section;
    if (hd.dim == 0 && shd.dim == -1) return section;
  }
  throw certificate_error("hyperplane_section",
                          "no generic hyperplane found within retry budget");
}

bool acm_test(const Ideal& I, uint64_t seed) {
  Ideal sat = I.saturated == SatFlag::yes ? I : saturate_irrelevant(I);
  HilbertData hd = hilbert_data_raw(sat);
  if (hd.dim != 1)
    throw bad_arguments_error("acm_test: input is not a curve (dim = " +
                              std::to_string(hd.dim) + ")");
  Ideal section = hyperplane_section(sat, seed);
  HilbertData shd = hilbert_data_raw(section);
  int tmax = std::max(hd.stabilization_degree, shd.stabilization_degree) + 2;
  for (int t = 0; t <= tmax; ++t)
    if (hd.hf(t) - hd.hf(t - 1) != shd.hf(t)) return false;
  return true;
}

long long h1_structure_sheaf(const Ideal& I, int k, uint64_t seed) {
  Ideal sat = I.saturated == SatFlag::yes ? I : saturate_irrelevant(I);
  if (!acm_test(sat, seed))
    throw not_acm_error("h1_structure_sheaf requires an ACM curve");
  HilbertData hd = hilbert_data_raw(sat);
  return hd.hf(k) - hd.hp(k);
}

}  // namespace threefold
