#ifndef THREEFOLD_GROEBNER_HPP
#define THREEFOLD_GROEBNER_HPP

#include <vector>

#include "threefold/ideal.hpp"
#include "threefold/poly.hpp"

namespace threefold {

// Step budget for a single Buchberger run, counted in S-pairs popped.
struct GbOptions {
  size_t max_pairs = 4'000'000;
};

// Remainder of multivariate division of f by basis (full tail reduction).
// No monomial of the result is divisible by any lead monomial of basis.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& ord);

// Division with quotients: f = sum q_i b_i + r.
Poly normal_form_with_quotients(const Poly& f, const std::vector<Poly>& basis,
                                const MonomialOrder& ord, std::vector<Poly>& quotients);

Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord);

// Buchberger with the product and chain criteria and a sugar-degree pair
// queue; returns the unique reduced basis (monic, inter-reduced, sorted by
// ascending lead monomial).  Deterministic for fixed input and order.
std::vector<Poly> buchberger(std::vector<Poly> gens, const MonomialOrder& ord,
                             const GbOptions& opts = {});

// Inter-reduce an arbitrary generating set (not necessarily a GB).
std::vector<Poly> interreduce(std::vector<Poly> gens, const MonomialOrder& ord);

// Reduced Groebner basis of I, computed once per order and cached.
const std::vector<Poly>& groebner_basis(const Ideal& I, const MonomialOrder& ord,
                                        const GbOptions& opts = {});

bool contains(const Ideal& I, const Poly& f, const GbOptions& opts = {});
bool ideal_contains(const Ideal& outer, const Ideal& inner, const GbOptions& opts = {});
bool ideal_equal(const Ideal& I, const Ideal& J, const GbOptions& opts = {});

// true iff the ideal is the whole ring
bool is_unit_ideal(const Ideal& I);

}  // namespace threefold

#endif
