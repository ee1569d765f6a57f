#ifndef THREEFOLD_HILBERT_HPP
#define THREEFOLD_HILBERT_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "threefold/ideal.hpp"

namespace threefold {

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// Hilbert function, Hilbert polynomial and derived invariants of R/I for a
// saturated homogeneous ideal I.
struct HilbertData {
  int nvars = 0;
  std::vector<long long> numerator;  // Hilbert series numerator over (1-z)^n
  std::vector<Rational> hp_coeffs;   // HP(t), ascending powers of t
  int dim = -1;                      // projective dimension; -1 = empty
  long long degree = 0;
  long long pa = 0;                  // arithmetic genus (see conventions below)
  int stabilization_degree = 0;      // least t with HF(t) = HP(t)

  long long hf(int t) const;  // HF(R/I, t)
  long long hp(int t) const;  // HP evaluated at t

  bool operator==(const HilbertData& o) const {
    return nvars == o.nvars && numerator == o.numerator;
  }
};

// Hilbert series numerator of R/(monomial ideal), pivot recursion.
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, int nvars);

// Hilbert data of R/I without saturating (used internally).
HilbertData hilbert_data_raw(const Ideal& I);

// Hilbert data with p_a semantics: saturates internally if flag != yes.
// Conventions: curves HP(t) = deg·t + 1 - p_a; points degree = HP(0), p_a = 0;
// higher dimension p_a = (-1)^dim (HP(0) - 1); empty scheme dim = -1.
HilbertData hilbert_data(const Ideal& I);

// h^0(I(k)) = C(k+n-1, n-1) - HF(R/I, k); saturates internally; 0 for k < 0.
long long graded_dim(const Ideal& I, int k);

// Degree (length) of the saturated scheme V(I+J); throws
// positive_dimensional_error when dim > 0; empty intersections report 0.
long long length_of_intersection(const Ideal& I, const Ideal& J);

// Saturated ideal of the scheme I ∩ {generic hyperplane}, re-expressed in a
// ring with one variable fewer.  Retries with derived seeds until the
// section length matches the expected degree.
Ideal hyperplane_section(const Ideal& I, uint64_t seed, int max_retries = 5);

// ACM test for a saturated curve ideal: first difference of HF(R/I) equals
// the Hilbert function of the general hyperplane section ring in all degrees.
bool acm_test(const Ideal& I, uint64_t seed = 1);

// h^1(O_B(k)) = HF(R/I,k) - HP(k) for ACM curves; throws not_acm_error.
long long h1_structure_sheaf(const Ideal& I, int k, uint64_t seed = 1);

long long binomial_ll(long long a, int b);

}  // namespace threefold

#endif
