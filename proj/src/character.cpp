#include "threefold/character.hpp"

#include <algorithm>
#include <functional>

#include "threefold/errors.hpp"
#include "threefold/ideal_ops.hpp"

namespace threefold {

long long HVector::total() const {
  long long s = 0;
  for (auto v : h) s += v;
  return s;
}

bool HVector::admissible(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (h.empty() || h[0] != 1) return fail("h(0) != 1");
  long long sigma = *std::max_element(h.begin(), h.end());
  for (size_t j = 0; j < h.size(); ++j) {
    if (h[j] < 0) return fail("negative entry at j=" + std::to_string(j));
    if (static_cast<long long>(j) < sigma && h[j] != static_cast<long long>(j) + 1)
      return fail("h(" + std::to_string(j) + ") != j+1 below sigma");
    if (static_cast<long long>(j) >= sigma - 1 && j + 1 < h.size() && h[j + 1] > h[j])
      return fail("h not non-increasing at j=" + std::to_string(j));
  }
  return true;
}

bool NumericalCharacter::valid(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (n.empty()) return fail("empty character");
  for (size_t i = 0; i + 1 < n.size(); ++i)
    if (n[i] < n[i + 1]) return fail("not non-increasing");
  if (n.back() < static_cast<long long>(n.size()))
    return fail("n_{sigma-1} < sigma");
  return true;
}

std::string NumericalCharacter::str() const {
  std::string s = "(";
  for (size_t i = 0; i < n.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(n[i]);
  }
  return s + ")";
}

Ideal plane_section(const Ideal& I, uint64_t seed) {
  return hyperplane_section(I, seed);
}

HVector h_vector(const Ideal& points_ideal) {
  Ideal sat = points_ideal.saturated == SatFlag::yes ? points_ideal
                                                     : saturate_irrelevant(points_ideal);
  HilbertData hd = hilbert_data_raw(sat);
  if (hd.dim > 0)
    throw bad_arguments_error("h_vector: ideal is not zero-dimensional");
  HVector hv;
  long long prev = 0;
  for (int t = 0;; ++t) {
    long long cur = hd.hf(t);
    hv.h.push_back(cur - prev);
    prev = cur;
    if (t >= hd.stabilization_degree && cur == hd.degree) break;
    if (t > 200) throw bad_arguments_error("h_vector: no stabilization");
  }
  while (!hv.h.empty() && hv.h.back() == 0) hv.h.pop_back();
  return hv;
}

NumericalCharacter character_from_hvector(const HVector& hv) {
  std::string why;
  if (!hv.admissible(&why))
    throw bad_arguments_error("inadmissible h-vector: " + why);
  long long sigma = *std::max_element(hv.h.begin(), hv.h.end());
  NumericalCharacter chi;
  for (long long i = 0; i < sigma; ++i) {
    long long best = -1;
    for (size_t j = 0; j < hv.h.size(); ++j)
      if (hv.h[j] >= i + 1) best = static_cast<long long>(j);
    chi.n.push_back(1 + best);
  }
  return chi;
}

HVector hvector_from_character(const NumericalCharacter& chi) {
  HVector hv;
  long long nmax = chi.n.empty() ? 0 : chi.n[0];
  for (long long j = 0; j < nmax; ++j) {
    long long c = 0;
    for (size_t i = 0; i < chi.n.size(); ++i)
      if (static_cast<long long>(i) <= j && j < chi.n[i]) ++c;
    hv.h.push_back(c);
  }
  return hv;
}

long long genus_of_character(const NumericalCharacter& chi) {
  HVector hv = hvector_from_character(chi);
  long long g = 0;
  for (size_t j = 2; j < hv.h.size(); ++j)
    g += (static_cast<long long>(j) - 1) * hv.h[j];
  return g;
}

ConnectednessReport is_connected(const NumericalCharacter& chi) {
  for (size_t i = 0; i + 1 < chi.n.size(); ++i)
    if (chi.n[i] - chi.n[i + 1] >= 2)
      return {false, static_cast<int>(i)};
  return {true, -1};
}

NumericalCharacter character_of_curve(const Ideal& I, uint64_t seed) {
  std::vector<NumericalCharacter> results;
  for (int s = 0; s < 3; ++s) {
    Ideal section = plane_section(I, derive_seed(seed, "char-seed", s));
    results.push_back(character_from_hvector(h_vector(section)));
  }
  if (results[0] == results[1] && results[1] == results[2]) return results[0];
  throw unstable_character_error(results[0].str() + " vs " + results[1].str() +
                                 " vs " + results[2].str());
}

std::vector<NumericalCharacter> enumerate_characters(int max_sigma, long long max_degree) {
  std::vector<NumericalCharacter> out;
  std::vector<long long> cur;
  std::function<void(int)> rec = [&](int sigma) {
    if (static_cast<int>(cur.size()) == sigma) {
      NumericalCharacter chi{cur};
      long long deg = 0;
      for (size_t i = 0; i < cur.size(); ++i) deg += cur[i] - static_cast<long long>(i);
      if (chi.valid() && deg <= max_degree) out.push_back(chi);
      return;
    }
    long long lo = sigma;  // n_i >= n_{sigma-1} >= sigma
    long long hi = cur.empty() ? max_degree : cur.back();
    for (long long v = lo; v <= hi; ++v) {
      cur.push_back(v);
      // prune: partial sum already too large
      long long deg = 0;
      for (size_t i = 0; i < cur.size(); ++i) deg += cur[i] - static_cast<long long>(i);
      if (deg <= max_degree) rec(sigma);
      cur.pop_back();
    }
  };
  for (int sigma = 1; sigma <= max_sigma; ++sigma) {
    cur.clear();
    rec(sigma);
  }
  return out;
}

}  // namespace threefold
