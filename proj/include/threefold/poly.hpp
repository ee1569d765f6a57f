#ifndef THREEFOLD_POLY_HPP
#define THREEFOLD_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "threefold/errors.hpp"
#include "threefold/fp.hpp"
#include "threefold/monomial.hpp"

namespace threefold {

struct Ring {
  uint32_t p = kDefaultPrime;
  int n = 4;

  bool operator==(const Ring& o) const { return p == o.p && n == o.n; }
  bool operator!=(const Ring& o) const { return !(*this == o); }
};

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (a != b)
    throw ring_mismatch_error("p=" + std::to_string(a.p) + ",n=" + std::to_string(a.n) +
                              " vs p=" + std::to_string(b.p) + ",n=" + std::to_string(b.n));
}

struct Term {
  Monomial m;
  uint32_t c = 0;  // nonzero residue mod p
};

// Sparse polynomial over F_p.  Terms are kept sorted strictly descending
// under whichever monomial order the caller passed to normalize(); every
// public kernel entry point re-normalizes its inputs, so mixed-order use is
// safe if slightly wasteful.
class Poly {
 public:
  Ring ring;
  std::vector<Term> t;

  Poly() = default;
  explicit Poly(Ring r) : ring(r) {}

  bool is_zero() const { return t.empty(); }
  size_t size() const { return t.size(); }

  const Term& lead() const { return t.front(); }
  const Monomial& lm() const { return t.front().m; }
  uint32_t lc() const { return t.front().c; }

  // total degree, -1 for the zero polynomial
  int degree() const {
    int d = -1;
    for (const auto& tm : t)
      if (static_cast<int>(tm.m.deg) > d) d = tm.m.deg;
    return d;
  }

  // homogeneous degree, or -1 if zero, or -2 if inhomogeneous
  int homogeneous_degree() const {
    if (t.empty()) return -1;
    int d = t[0].m.deg;
    for (const auto& tm : t)
      if (tm.m.deg != d) return -2;
    return d;
  }

  bool is_homogeneous() const { return homogeneous_degree() != -2; }

  // sort descending under ord, combine duplicates, drop zeros
  void normalize(const MonomialOrder& ord);

  void make_monic();

  static Poly zero(Ring r) { return Poly(r); }
  static Poly constant(Ring r, uint32_t c);
  static Poly variable(Ring r, int i);
  static Poly from_terms(Ring r, std::vector<Term> terms, const MonomialOrder& ord);

  bool operator==(const Poly& o) const;
};

Poly add(const Poly& f, const Poly& g, const MonomialOrder& ord);
Poly sub(const Poly& f, const Poly& g, const MonomialOrder& ord);
Poly neg(const Poly& f);
Poly scale(const Poly& f, uint32_t c);
Poly mul_term(const Poly& f, const Monomial& m, uint32_t c);
Poly mul(const Poly& f, const Poly& g, const MonomialOrder& ord);
Poly pow(const Poly& f, int e, const MonomialOrder& ord);

Poly derivative(const Poly& f, int var);

// substitute x_i -> image[i]; images live in target_ring
Poly substitute(const Poly& f, const std::vector<Poly>& image, Ring target_ring,
                const MonomialOrder& ord);

// linear change of coordinates x_i -> sum_j mat[i][j] x_j (same ring)
Poly linear_change(const Poly& f, const std::vector<std::vector<uint32_t>>& mat,
                   const MonomialOrder& ord);

uint32_t evaluate(const Poly& f, const std::vector<uint32_t>& point);

// random homogeneous form of the given degree (all monomial coefficients random)
Poly random_form(Ring r, int degree, Rng& rng);

// all monomials of the given total degree, in descending grevlex order
std::vector<Monomial> monomials_of_degree(int n, int degree);

std::string to_string(const Poly& f);

}  // namespace threefold

#endif
