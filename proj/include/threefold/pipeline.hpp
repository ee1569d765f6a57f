#ifndef THREEFOLD_PIPELINE_HPP
#define THREEFOLD_PIPELINE_HPP

#include <string>
#include <vector>

#include "threefold/builders.hpp"
#include "threefold/verifier.hpp"

namespace threefold {

struct PipelineReport {
  CaseId case_id = CaseId::segre;
  uint32_t prime = kDefaultPrime;
  uint64_t seed = 1;
  int retries_used = 0;
  bool heavy = false;
  std::vector<Certificate> certificates;
  MapReport map;
  HilbertData base_locus_hilbert;
  std::string character;  // "(n0,n1,...)"
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> warnings;
  bool overall_pass = false;
};

// Full pipeline for one case: build -> invariants -> character -> CF ->
// map report.  heavy=false skips sectional_curve / sectional_smoothness.
PipelineReport run_case(CaseId c, uint32_t prime, uint64_t seed, bool heavy,
                        int retries = 5);

// All four cases in parallel worker threads.
std::vector<PipelineReport> run_all(uint32_t prime, uint64_t seed, bool heavy,
                                    int retries = 5);

std::string report_to_json(const PipelineReport& rep);
// identical reports modulo the timings_ms block (used by the determinism test)
std::string report_to_json_without_timings(const PipelineReport& rep);

std::string variety_name(CaseId c);
std::string base_locus_summary(const PipelineReport& rep);

// four-row summary: Variety | Degree | deg Sigma | Base locus summary
std::string report_table(const std::vector<PipelineReport>& reports);

// warning policy for small primes (genericity heuristic)
std::vector<std::string> prime_warnings(uint32_t prime);

}  // namespace threefold

#endif
