#ifndef THREEFOLD_VERIFIER_HPP
#define THREEFOLD_VERIFIER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "threefold/builders.hpp"
#include "threefold/character.hpp"
#include "threefold/hilbert.hpp"

namespace threefold {

// The linear system Sigma = |(d-1)H - B|: six independent forms of degree
// d-1 spanning the graded piece (I_B)_{d-1}.
struct LinearSystem {
  int degree = 0;
  std::vector<Poly> basis;
};

struct SectionConfigReport {
  std::string system;  // "CF1", "CF2", "CF3'", or "none" (Segre)
  bool cf_pass = false;
  int field_degree = 1;  // k of the F_{p^k} the section points live in
  int retries = 0;       // planes discarded before a split section was found
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

struct MapReport {
  int image_degree = 0;
  int sectional_genus = 0;
  std::pair<long long, long long> char_curve{0, 0};  // (degree, pa) of Gamma
  // degree of Gamma ∩ part, with the part's multiplicity in the base scheme
  struct Meet {
    std::string part;
    int multiplicity;
    long long length;
  };
  std::vector<Meet> meets;
  bool degree_identity = false;  // (d-1)·deg Gamma = d + sum mult·meet
  struct {
    bool spanned = false;
    long long h0_dminus1 = 0;
    long long h0_dminus2 = 0;
    bool cf_pass = false;
  } hypotheses;
  SectionConfigReport section_cf;
  std::optional<std::pair<long long, long long>> sectional;  // heavy: (d, d-3)
  std::optional<bool> sectional_smooth;
  std::vector<std::string> errors;
  int retries = 0;  // generality retries spent across the sub-checks
  bool passed = false;
};

// Basis of (I_B)_{d-1}; throws certificate_error("h0 mismatch") if the
// dimension is not 6.
LinearSystem assemble_system(const BaseLocusBundle& bundle);

// Base-scheme equality: saturate(<basis>) = I_B.  On failure *excess (when
// given) receives the saturated base ideal.
bool spannedness_check(const LinearSystem& sys, const BaseLocusBundle& bundle,
                       Ideal* excess = nullptr);

// The free intersection of two seeded-generic members: saturate the
// two-member ideal with respect to I_B, then the irrelevant ideal.
std::pair<Ideal, HilbertData> characteristic_curve(const LinearSystem& sys,
                                                   const BaseLocusBundle& bundle,
                                                   uint64_t seed, int* retries = nullptr);

std::vector<MapReport::Meet> char_meets(const Ideal& gamma, const BaseLocusBundle& bundle);

// Residual points of three seeded-generic members; equals deg X.
long long image_degree(const LinearSystem& sys, const BaseLocusBundle& bundle,
                       uint64_t seed, int* retries = nullptr);

// Image of Gamma under the system (the curve section of X), by graph
// elimination with a Rabinowitsch localization killing the base fibers.
// Returns the ideal in the P^5 coordinate ring and its Hilbert data.
std::pair<Ideal, HilbertData> sectional_curve(const LinearSystem& sys, const Ideal& gamma,
                                              const BaseLocusBundle& bundle, uint64_t seed,
                                              int* retries = nullptr);

// Jacobian-criterion smoothness for a saturated curve ideal (linear forms
// are eliminated first).
bool sectional_smoothness(const Ideal& curve);

// Multiplicity-annotated plane section of B run through the CF checker
// appropriate for the case (CF1 / CF2 / CF3'); Segre has no CF system.
SectionConfigReport section_cf_check(const BaseLocusBundle& bundle, uint64_t seed);

// Full audit of the birationality hypotheses (spannedness, the h^0
// values, the CF section check, and the map invariants); sub-errors are
// collected into the report.
MapReport birationality_audit(const BaseLocusBundle& bundle, uint64_t seed, bool heavy);

}  // namespace threefold

#endif
