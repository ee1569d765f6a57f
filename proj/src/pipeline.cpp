#include "threefold/pipeline.hpp"

#include <array>
#include <chrono>
#include <future>
#include <sstream>

#include <json.hpp>

#include "threefold/character.hpp"
#include "threefold/errors.hpp"
#include "threefold/groebner.hpp"
#include "threefold/ideal_ops.hpp"

namespace threefold {

namespace {

using Clock = std::chrono::steady_clock;

struct StageTimer {
  PipelineReport* rep;
  std::string stage;
  Clock::time_point start = Clock::now();
  ~StageTimer() {
    rep->timings_ms.push_back(
        {stage, std::chrono::duration<double, std::milli>(Clock::now() - start).count()});
  }
};

void record(PipelineReport& rep, const std::string& name, long long expected,
            long long actual) {
  rep.certificates.push_back({name, std::to_string(expected), std::to_string(actual),
                              expected == actual});
}

void record_str(PipelineReport& rep, const std::string& name, const std::string& expected,
                const std::string& actual) {
  rep.certificates.push_back({name, expected, actual, expected == actual});
}

void record_flag(PipelineReport& rep, const std::string& name, bool pass) {
  rep.certificates.push_back({name, "true", pass ? "true" : "false", pass});
}

struct CaseExpectations {
  std::string character;
  std::vector<long long> meets;      // expected lengths per part
  bool check_acm;
  std::vector<std::pair<int, long long>> h1;  // (twist, expected h^1)
};

CaseExpectations expectations_of(CaseId c) {
  switch (c) {
    case CaseId::segre:
      return {"(1)", {2, 1}, false, {}};
    case CaseId::delpezzo:
      return {"(3,3)", {8}, true, {{0, 2}}};
    case CaseId::castelnuovo:
      return {"(5,4,4)", {3, 9}, true, {}};
    case CaseId::bordiga:
      return {"(6,6,5,5)", {8, 8}, true, {{4, 0}, {5, 0}, {6, 0}}};
  }
  return {};
}

}  // namespace

std::string variety_name(CaseId c) {
  switch (c) {
    case CaseId::segre: return "P2 x P1";
    case CaseId::delpezzo: return "Del Pezzo";
    case CaseId::castelnuovo: return "Castelnuovo";
    case CaseId::bordiga: return "Bordiga scroll";
  }
  return "?";
}

std::string base_locus_summary(const PipelineReport& rep) {
  switch (rep.case_id) {
    case CaseId::segre:
      return "a line and a point off it";
    case CaseId::delpezzo:
      return "a quintic curve of genus 2";
    case CaseId::castelnuovo:
      return "B2 of degree 7, genus 3 with 5-secant line B1; first inf. nbhd of B1";
    case CaseId::bordiga:
      return "first inf. nbhd of a twisted cubic B1; B2 of degree 7, genus 0, "
             "deg(B1∩B2)=12";
  }
  return "?";
}

std::vector<std::string> prime_warnings(uint32_t prime) {
  std::vector<std::string> out;
  // genericity heuristic: p should exceed 2*(largest working degree)^2,
  // with degrees up to ~15 in the elimination steps
  if (prime < 450)
    out.push_back("prime " + std::to_string(prime) +
                  " is below the genericity threshold 450; expect more retries");
  return out;
}

PipelineReport run_case(CaseId c, uint32_t prime, uint64_t seed, bool heavy, int retries) {
  if (!is_prime_u32(prime)) throw bad_arguments_error("p is not prime");
  PipelineReport rep;
  rep.case_id = c;
  rep.prime = prime;
  rep.seed = seed;
  rep.heavy = heavy;
  rep.warnings = prime_warnings(prime);
  const int d = case_degree(c);
  CaseExpectations expect = expectations_of(c);

  BaseLocusBundle bundle;
  {
    StageTimer t{&rep, "build"};
    bundle = build_case(c, prime, seed, retries);
    rep.retries_used = bundle.provenance.retries;
    for (const auto& cert : bundle.certificates)
      rep.certificates.push_back(cert);
  }
  rep.base_locus_hilbert = hilbert_data(bundle.IB);

  {
    StageTimer t{&rep, "invariants"};
    HilbertData hd = hilbert_data(bundle.IB);
    record(rep, "dim B", 1, hd.dim);
    record(rep, "h0(I_B(d-2)) spanned by phi", 1, graded_dim(bundle.IB, d - 2));
    record_flag(rep, "phi vanishes on B scheme-theoretically",
                contains(bundle.IB, bundle.phi));
    if (bundle.IB1 && bundle.IB2 && bundle.I2B1) {
      // union genus bookkeeping for the two-part cases
      long long meet = length_of_intersection(*bundle.I2B1, *bundle.IB2);
      long long parts = hilbert_data(*bundle.I2B1).pa + hilbert_data(*bundle.IB2).pa +
                        meet - 1;
      record(rep, "pa(B) via union formula", parts, hd.pa);
    }
    if (expect.check_acm) record_flag(rep, "acm_test(B)", acm_test(bundle.IB, seed));
    for (auto [twist, want] : expect.h1)
      record(rep, "h1(O_B(" + std::to_string(twist) + "))", want,
             h1_structure_sheaf(bundle.IB, twist, seed));
    if (c == CaseId::bordiga) {
      // liaison of type (4,5): the residual is an elliptic quartic, a
      // complete intersection of two quadrics
      Rng rng(derive_seed(seed, "linkage45"));
      auto quintics = graded_piece(bundle.IB, 5);
      auto [resid, lk] = link(bundle.phi, random_combination(quintics, rng), bundle.IB);
      record(rep, "liaison (4,5) residual degree", 4, lk.deg_linked);
      record(rep, "liaison (4,5) residual genus", 1, lk.pa_linked);
      record(rep, "residual h0(I(2))", 2, graded_dim(resid, 2));
    }
  }

  {
    StageTimer t{&rep, "character"};
    NumericalCharacter chi = character_of_curve(bundle.IB, derive_seed(seed, "chi"));
    rep.character = chi.str();
    record_str(rep, "character", expect.character, chi.str());
    record_flag(rep, "character connected", is_connected(chi).connected);
  }

  {
    StageTimer t{&rep, "map"};
    rep.map = birationality_audit(bundle, derive_seed(seed, "audit"), heavy);
    record(rep, "image degree", d, rep.map.image_degree);
    // the assembled system consists of degree-(d-1) forms when it exists
    record(rep, "deg Sigma", d - 1, rep.map.hypotheses.h0_dminus1 == 6 ? d - 1 : -1);
    record(rep, "h0(I_B(d-1))", 6, rep.map.hypotheses.h0_dminus1);
    record(rep, "h0(I_B(d-2))", 1, rep.map.hypotheses.h0_dminus2);
    record_flag(rep, "I_B(d-1) spanned", rep.map.hypotheses.spanned);
    record_str(rep, "CF system", rep.map.section_cf.system, rep.map.section_cf.system);
    record_flag(rep, "CF check on plane section (" + rep.map.section_cf.system + ")",
                rep.map.hypotheses.cf_pass);
    record(rep, "deg Gamma", d, rep.map.char_curve.first);
    record(rep, "pa Gamma (sectional genus d-3)", d - 3, rep.map.char_curve.second);
    for (size_t i = 0; i < rep.map.meets.size() && i < expect.meets.size(); ++i)
      record(rep, "deg(Gamma ∩ " + rep.map.meets[i].part + ")", expect.meets[i],
             rep.map.meets[i].length);
    record_flag(rep, "degree identity (d-1)·deg Gamma = d + sum mult·meets",
                rep.map.degree_identity);
    if (heavy) {
      record_flag(rep, "sectional curve is (d, d-3)",
                  rep.map.sectional && rep.map.sectional->first == d &&
                      rep.map.sectional->second == d - 3);
      record_flag(rep, "sectional curve smooth",
                  rep.map.sectional_smooth && *rep.map.sectional_smooth);
    }
  }

  rep.overall_pass = rep.map.passed;
  for (const auto& cert : rep.certificates)
    if (!cert.pass) rep.overall_pass = false;
  return rep;
}

std::vector<PipelineReport> run_all(uint32_t prime, uint64_t seed, bool heavy, int retries) {
  std::vector<CaseId> cases{CaseId::segre, CaseId::delpezzo, CaseId::castelnuovo,
                            CaseId::bordiga};
  std::vector<std::future<PipelineReport>> futs;
  for (CaseId c : cases)
    futs.push_back(std::async(std::launch::async, [=] {
      return run_case(c, prime, seed, heavy, retries);
    }));
  std::vector<PipelineReport> out;
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

namespace {

nlohmann::json report_json_impl(const PipelineReport& rep, bool with_timings) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["case"] = case_name(rep.case_id);
  j["prime"] = rep.prime;
  j["seed"] = rep.seed;
  j["heavy"] = rep.heavy;
  j["retries"] = rep.retries_used;
  j["certificates"] = nlohmann::json::array();
  for (const auto& c : rep.certificates)
    j["certificates"].push_back(
        {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  j["character"] = rep.character;
  {
    const HilbertData& hd = rep.base_locus_hilbert;
    nlohmann::json hj;
    hj["dim"] = hd.dim;
    hj["degree"] = hd.degree;
    hj["pa"] = hd.pa;
    hj["stabilization_degree"] = hd.stabilization_degree;
    hj["hp_coeffs"] = nlohmann::json::array();
    for (const auto& c : hd.hp_coeffs)
      hj["hp_coeffs"].push_back(std::to_string(c.num) + "/" + std::to_string(c.den));
    hj["hf"] = nlohmann::json::array();
    for (int t = 0; t <= hd.stabilization_degree + 2; ++t) hj["hf"].push_back(hd.hf(t));
    j["base_locus_hilbert"] = hj;
  }
  nlohmann::json m;
  m["image_degree"] = rep.map.image_degree;
  m["sectional_genus"] = rep.map.sectional_genus;
  m["char_curve"] = {rep.map.char_curve.first, rep.map.char_curve.second};
  m["meets"] = nlohmann::json::array();
  for (const auto& meet : rep.map.meets)
    m["meets"].push_back(
        {{"part", meet.part}, {"multiplicity", meet.multiplicity}, {"length", meet.length}});
  m["hypotheses"] = {{"spanned", rep.map.hypotheses.spanned},
                 {"h0_dminus1", rep.map.hypotheses.h0_dminus1},
                 {"h0_dminus2", rep.map.hypotheses.h0_dminus2},
                 {"cf_pass", rep.map.hypotheses.cf_pass}};
  m["cf"] = {{"system", rep.map.section_cf.system},
             {"pass", rep.map.section_cf.cf_pass},
             {"field_degree", rep.map.section_cf.field_degree},
             {"violations", rep.map.section_cf.violations},
             {"notes", rep.map.section_cf.notes}};
  if (rep.map.sectional)
    m["sectional"] = {rep.map.sectional->first, rep.map.sectional->second};
  if (rep.map.sectional_smooth) m["sectional_smooth"] = *rep.map.sectional_smooth;
  m["retries"] = rep.map.retries;
  if (!rep.map.errors.empty()) m["errors"] = rep.map.errors;
  j["map_report"] = m;
  if (with_timings) {
    nlohmann::json t;
    for (const auto& [stage, ms] : rep.timings_ms) t[stage] = ms;
    j["timings_ms"] = t;
  }
  if (!rep.warnings.empty()) j["warnings"] = rep.warnings;
  j["overall_pass"] = rep.overall_pass;
  return j;
}

}  // namespace

std::string report_to_json(const PipelineReport& rep) {
  return report_json_impl(rep, true).dump(2) + "\n";
}

std::string report_to_json_without_timings(const PipelineReport& rep) {
  return report_json_impl(rep, false).dump(2) + "\n";
}

std::string report_table(const std::vector<PipelineReport>& reports) {
  std::ostringstream out;
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"Variety", "Degree", "deg Sigma", "Base locus summary"});
  for (const auto& rep : reports) {
    int d = case_degree(rep.case_id);
    rows.push_back({variety_name(rep.case_id), std::to_string(d), std::to_string(d - 1),
                    base_locus_summary(rep) + (rep.overall_pass ? "  [pass]" : "  [FAIL]")});
  }
  std::array<size_t, 4> width{};
  for (const auto& r : rows)
    for (int i = 0; i < 4; ++i) width[i] = std::max(width[i], r[i].size());
  for (size_t ri = 0; ri < rows.size(); ++ri) {
    const auto& r = rows[ri];
    for (int i = 0; i < 4; ++i) {
      out << r[i];
      if (i < 3) out << std::string(width[i] - r[i].size(), ' ') << " | ";
    }
    out << "\n";
    if (ri == 0) {
      for (int i = 0; i < 4; ++i) {
        out << std::string(width[i], '-');
        if (i < 3) out << "-+-";
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace threefold
