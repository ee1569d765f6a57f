#ifndef THREEFOLD_BUILDERS_HPP
#define THREEFOLD_BUILDERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "threefold/hilbert.hpp"
#include "threefold/ideal.hpp"

namespace threefold {

enum class CaseId { segre, delpezzo, castelnuovo, bordiga };

std::string case_name(CaseId c);
CaseId case_from_name(const std::string& name);
int case_degree(CaseId c);  // degree d of the image threefold

struct Certificate {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Provenance {
  uint32_t prime = kDefaultPrime;
  uint64_t seed = 1;
  int retries = 0;
};

// The constructed base locus of one case: the saturated ideal I_B, its
// parts, and the unique degree-(d-2) form through B.
struct BaseLocusBundle {
  CaseId case_id = CaseId::segre;
  int d = 3;
  Ideal IB;
  std::optional<Ideal> IB1;   // curve part B1 (line / line / twisted cubic)
  std::optional<Ideal> IB2;   // part B2 (point / septic / septic)
  std::optional<Ideal> I2B1;  // first infinitesimal neighbourhood of B1
  Poly phi;
  Provenance provenance;
  std::vector<Certificate> certificates;

  bool all_pass() const {
    for (const auto& c : certificates)
      if (!c.pass) return false;
    return true;
  }
};

struct LinkageCertificate {
  int s = 0, t = 0;                      // complete intersection degrees
  long long deg_input = 0, pa_input = 0;
  long long deg_linked = 0, pa_linked = 0;
  bool pass = false;
};

// Liaison: residual of I in the complete intersection (f1, f2), saturated,
// with the degree/genus bookkeeping checked exactly.  A certificate
// mismatch is an error, not a warning.
std::pair<Ideal, LinkageCertificate> link(const Poly& f1, const Poly& f2, const Ideal& I);

BaseLocusBundle build_segre(uint32_t prime, uint64_t seed, int retries = 5);
BaseLocusBundle build_delpezzo(uint32_t prime, uint64_t seed, int retries = 5);
BaseLocusBundle build_castelnuovo(uint32_t prime, uint64_t seed, int retries = 5);
BaseLocusBundle build_bordiga(uint32_t prime, uint64_t seed, int retries = 5);
BaseLocusBundle build_case(CaseId c, uint32_t prime, uint64_t seed, int retries = 5);

// Directory serialization: one ideal file per component plus bundle.json.
void save_bundle(const BaseLocusBundle& bundle, const std::string& dir);
BaseLocusBundle load_bundle(const std::string& dir);

// random nonzero combination of a basis of forms
Poly random_combination(const std::vector<Poly>& basis, Rng& rng);

}  // namespace threefold

#endif
