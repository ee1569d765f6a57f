#ifndef THREEFOLD_GF_HPP
#define THREEFOLD_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "threefold/fp.hpp"

namespace threefold {

// Dense univariate polynomials over F_p, ascending coefficients, no
// trailing zeros.  Used for eliminants of zero-dimensional schemes and for
// building the extension fields their points live in.
using FpPoly = std::vector<uint32_t>;

namespace fppoly {

void trim(FpPoly& f);
int deg(const FpPoly& f);  // -1 for zero
FpPoly add(const FpPoly& a, const FpPoly& b, uint32_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, uint32_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, uint32_t p);
FpPoly scale(const FpPoly& a, uint32_t c, uint32_t p);
void divrem(const FpPoly& a, const FpPoly& b, uint32_t p, FpPoly& q, FpPoly& r);
FpPoly mod(const FpPoly& a, const FpPoly& b, uint32_t p);
FpPoly gcd(FpPoly a, FpPoly b, uint32_t p);  // monic
FpPoly monic(FpPoly f, uint32_t p);
FpPoly derivative(const FpPoly& f, uint32_t p);
FpPoly powmod(const FpPoly& base, uint64_t e, const FpPoly& m, uint32_t p);
// a(b) mod m
FpPoly compose_mod(const FpPoly& a, const FpPoly& b, const FpPoly& m, uint32_t p);

bool is_squarefree(const FpPoly& f, uint32_t p);
bool is_irreducible(const FpPoly& f, uint32_t p);

// monic irreducible factors of a squarefree monic polynomial (deterministic
// for a fixed seed), sorted canonically
std::vector<FpPoly> factor_squarefree(FpPoly f, uint32_t p, uint64_t seed);

// roots in F_p of a polynomial that splits into distinct linear factors
std::vector<uint32_t> roots_in_fp(const FpPoly& f, uint32_t p, uint64_t seed);

FpPoly random_monic(int degree, uint32_t p, Rng& rng);
FpPoly irreducible_poly(int degree, uint32_t p, uint64_t seed);

}  // namespace fppoly

// The field F_{p^k} = F_p[w]/(modulus).  Elements are fixed-length
// coefficient vectors, which keeps equality and hashing canonical.
class GFCtx {
 public:
  uint32_t p;
  int k;
  FpPoly modulus;  // monic, degree k

  GFCtx(uint32_t p_, FpPoly modulus_);
  static std::shared_ptr<const GFCtx> make(uint32_t p, int k, uint64_t seed);
};

using GFElem = std::vector<uint32_t>;  // length = ctx.k

struct GFField {
  std::shared_ptr<const GFCtx> ctx;
  using Elem = GFElem;

  Elem zero() const { return Elem(ctx->k, 0); }
  Elem one() const {
    Elem e(ctx->k, 0);
    e[0] = 1;
    return e;
  }
  Elem from_fp(uint32_t a) const {
    Elem e(ctx->k, 0);
    e[0] = a % ctx->p;
    return e;
  }
  bool is_zero(const Elem& a) const {
    for (auto v : a)
      if (v) return false;
    return true;
  }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(Elem a, uint64_t e) const;
  Elem frobenius(const Elem& a) const { return pow(a, ctx->p); }
};

// one root in F_{p^K} of an F_p-irreducible polynomial h with deg h | K
GFElem find_root(const FpPoly& h, const GFField& F, uint64_t seed);

std::string gf_to_string(const GFElem& a);

}  // namespace threefold

#endif
