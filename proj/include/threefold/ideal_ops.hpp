#ifndef THREEFOLD_IDEAL_OPS_HPP
#define THREEFOLD_IDEAL_OPS_HPP

#include <vector>

#include "threefold/groebner.hpp"
#include "threefold/ideal.hpp"

namespace threefold {

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int k);
Ideal principal_ideal(const Poly& f);
Ideal irrelevant_ideal(Ring r);

// I ∩ J via a one-auxiliary-variable elimination.
Ideal intersect(const Ideal& I, const Ideal& J);

// (I : f) and (I : J) = {g : g·J ⊆ I}.
Ideal colon_poly(const Ideal& I, const Poly& f);
Ideal colon(const Ideal& I, const Ideal& J);

// (I : J^∞) by iterating colon until stabilization (reduced-GB equality).
Ideal saturate(const Ideal& I, const Ideal& J);

// (I : m^∞) for the irrelevant maximal ideal.  Fast path: seeded generic
// coordinate change plus the reverse-lex last-variable division trick, run
// twice with independent seeds and cross-checked; falls back to the iterated
// colon on disagreement.  Sets saturated_flag = yes.
Ideal saturate_irrelevant(const Ideal& I);

// I ∩ k[remaining vars], re-expressed in the smaller ring.
Ideal eliminate(const Ideal& I, const std::vector<int>& drop);

// I + (c×c minors of the partial-derivative matrix), c = number of
// generators (hypersurfaces and complete intersections).
Ideal jacobian_ideal(const Ideal& I);

// I + (codim×codim minors of the full Jacobian of all generators); the
// Jacobian criterion locus for arbitrary generating sets.
Ideal singular_locus_ideal(const Ideal& I, int codim);

std::vector<std::vector<uint32_t>> random_invertible_matrix(int n, uint32_t p,
                                                            uint64_t seed);
Ideal apply_linear_change(const Ideal& I, const std::vector<std::vector<uint32_t>>& mat);

// Seeded invertible linear substitution (retries internally on a singular
// random matrix); all Hilbert data is invariant.
Ideal generic_coordinate_change(const Ideal& I, uint64_t seed);

// Basis of the degree-k graded piece of I (canonical echelon form).
std::vector<Poly> graded_piece(const Ideal& I, int k);

// Variable re-indexing helpers.
Poly shift_vars(const Poly& f, Ring target, int shift);
Poly unshift_vars(const Poly& f, Ring target, int shift);

}  // namespace threefold

#endif
