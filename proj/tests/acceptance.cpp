// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Runs the four pipelines (heavy included) plus the engine-level checks.

#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "threefold/cf.hpp"
#include "threefold/character.hpp"
#include "threefold/groebner.hpp"
#include "threefold/ideal_ops.hpp"
#include "threefold/io.hpp"
#include "threefold/pipeline.hpp"

using namespace threefold;

namespace {

constexpr uint32_t p = kDefaultPrime;
const MonomialOrder grevlex = MonomialOrder::grevlex();

struct Harness {
  int failed = 0;
  void criterion(int num, const std::string& what, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", num, what.c_str());
    if (!ok) ++failed;
  }
};

long long cert_num(const PipelineReport& rep, const std::string& name) {
  for (const auto& c : rep.certificates)
    if (c.name == name) return std::stoll(c.actual);
  return -999999;
}

std::string cert_str(const PipelineReport& rep, const std::string& name) {
  for (const auto& c : rep.certificates)
    if (c.name == name) return c.actual;
  return "<missing>";
}

bool cert_pass(const PipelineReport& rep, const std::string& name) {
  for (const auto& c : rep.certificates)
    if (c.name == name) return c.pass;
  return false;
}

Ideal p3_ideal(const std::string& gens) {
  return parse_ideal_string("ring p=32003 vars=4\n" + gens);
}

}  // namespace

int main() {
  Harness h;
  std::printf("building and auditing the four cases (heavy checks included)...\n");
  auto reports = run_all(p, 1, /*heavy=*/true);
  std::map<CaseId, const PipelineReport*> rep;
  for (const auto& r : reports) rep[r.case_id] = &r;
  const PipelineReport& segre = *rep[CaseId::segre];
  const PipelineReport& dp = *rep[CaseId::delpezzo];
  const PipelineReport& cast = *rep[CaseId::castelnuovo];
  const PipelineReport& bord = *rep[CaseId::bordiga];

  // 1. Introduction-table reproduction
  {
    bool ok = true;
    int want_deg[4] = {3, 4, 5, 6};
    const PipelineReport* rs[4] = {&segre, &dp, &cast, &bord};
    for (int i = 0; i < 4; ++i) {
      ok &= cert_num(*rs[i], "image degree") == want_deg[i];
      ok &= cert_num(*rs[i], "deg Sigma") == want_deg[i] - 1;
    }
    h.criterion(1, "image degrees {3,4,5,6} and deg Sigma {2,3,4,5}", ok);
  }

  // 2. Del Pezzo
  {
    bool ok = cert_num(dp, "deg B") == 5 && cert_num(dp, "pa B") == 2 &&
              cert_num(dp, "h0(I_B(3))") == 6 && cert_num(dp, "h0(I_B(2))") == 1 &&
              cert_num(dp, "deg(Gamma ∩ B)") == 8;
    h.criterion(2, "Del Pezzo: B is (5,2), h0 = 6/1, deg(Gamma ∩ B) = 8", ok);
  }

  // 3. Castelnuovo
  {
    bool ok = cert_num(cast, "pa B2") == 3 &&
              cert_num(cast, "deg(B1 ∩ B2) (5-secancy)") == 5 &&
              cert_num(cast, "residual degree") == 2 &&
              cert_num(cast, "residual genus") == -2 &&
              cert_num(cast, "deg(Gamma ∩ B1)") == 3 &&
              cert_num(cast, "deg(Gamma ∩ B2)") == 9 &&
              cert_num(cast, "h0(I_B(4))") == 6 && cert_num(cast, "h0(I_B(3))") == 1;
    h.criterion(3,
                "Castelnuovo: B2 (7,3), 5-secant line, (G1,G2)-residual (2,-2), "
                "meets (3,9), h0 = 6/1",
                ok);
  }

  // 4. Bordiga
  {
    bool ok = cert_num(bord, "deg(B1 ∩ B2)") == 12 && cert_num(bord, "pa B") == 31 &&
              cert_str(bord, "character") == "(6,6,5,5)" &&
              cert_pass(bord, "acm_test(B)") &&
              cert_num(bord, "h0(I_B(4))") == 1 && cert_num(bord, "h0(I_B(5))") == 6 &&
              cert_num(bord, "liaison (4,5) residual degree") == 4 &&
              cert_num(bord, "liaison (4,5) residual genus") == 1 &&
              cert_num(bord, "h1(O_B(4))") == 0 &&
              cert_num(bord, "deg(Gamma ∩ B1)") == 8 &&
              cert_num(bord, "deg(Gamma ∩ B2)") == 8 &&
              cert_num(bord, "deg Gamma") == 6 && cert_pass(bord, "degree identity (d-1)·deg Gamma = d + sum mult·meets");
    h.criterion(4,
                "Bordiga: deg(B1∩B2)=12, pa(B)=31, chi=(6,6,5,5), ACM, h0 = 1/6, "
                "liaison (4,5) -> (4,1), h1(O_B(4))=0, 30 = 6 + 2*8 + 8",
                ok);
  }

  // 5. character engine
  {
    bool ok = genus_of_character(NumericalCharacter{{6, 5, 5, 5, 5}}) == 30 &&
              genus_of_character(NumericalCharacter{{6, 6, 5, 5}}) == 31;
    struct Row {
      std::vector<long long> chi;
      bool connected;
      int gap;
    };
    std::vector<Row> table{
        {{10, 4, 4, 4}, false, 0}, {{9, 5, 4, 4}, false, 0}, {{8, 6, 4, 4}, false, 0},
        {{7, 7, 4, 4}, false, 1},  {{8, 5, 5, 4}, false, 0}, {{7, 6, 5, 4}, true, -1},
        {{6, 6, 6, 4}, false, 2},  {{7, 5, 5, 5}, false, 0}, {{6, 6, 5, 5}, true, -1}};
    for (const auto& row : table) {
      auto v = is_connected(NumericalCharacter{row.chi});
      ok &= v.connected == row.connected && v.gap_after == row.gap;
    }
    h.criterion(5, "g(6,5,5,5,5) = 30, g(6,6,5,5) = 31, connectedness table rows a-g",
                ok);
  }

  // 6. CF engine
  {
    bool ok = true;
    for (CFSystem sys : {CFSystem::CF1, CFSystem::CF2, CFSystem::CF3, CFSystem::CF3p,
                         CFSystem::CF4})
      ok &= check_cf(generic_config(sys, p, 1)).passed;

    auto violated = [&](PlaneConfig config, const std::string& tag) {
      CFReport r = check_cf(config);
      if (r.passed) return false;
      for (const auto& v : r.violations)
        if (v.condition == tag) return true;
      return false;
    };
    // 3 collinear
    PlaneConfig c1 = generic_config(CFSystem::CF1, p, 2);
    c1.pts[0].x = {10, 20, 1};
    c1.pts[1].x = {11, 22, 1};
    c1.pts[2].x = {12, 24, 1};
    ok &= violated(c1, "CF1(1)");
    // 8 on a conic
    PlaneConfig c3 = generic_config(CFSystem::CF3, p, 3);
    {
      Rng rng(55);
      for (int k = 0; k < 8; ++k) {
        uint32_t t = rng.field_nonzero(p);
        c3.pts[k].x = {1, t, fp_mul(t, t, p)};
      }
    }
    ok &= violated(c3, "CF3(2)");
    // 7 on a conic including the double point (CF2 condition 3)
    PlaneConfig c2 = generic_config(CFSystem::CF2, p, 4);
    {
      Rng rng(56);
      for (int k = 0; k < 7; ++k) {  // x1 and six of the y's
        uint32_t t = rng.field_nonzero(p);
        c2.pts[k].x = {1, t, fp_mul(t, t, p)};
      }
    }
    ok &= violated(c2, "CF2(3)");
    // census
    ok &= census_lines_conics(generic_config(CFSystem::CF3, p, 5)).pair_lines == 45;
    ok &= census_lines_conics(generic_config(CFSystem::CF4, p, 6)).total() == 27;
    h.criterion(6, "CF systems pass generic configs, catch degeneracies, census 45/27",
                ok);
  }

  // 7. the full birationality audit
  {
    bool ok = true;
    for (const auto& r : reports) {
      ok &= r.map.passed && r.map.hypotheses.spanned && r.map.hypotheses.h0_dminus1 == 6 &&
            r.map.hypotheses.h0_dminus2 == 1 && r.map.hypotheses.cf_pass;
    }
    ok &= dp.map.section_cf.system == "CF1" && cast.map.section_cf.system == "CF2" &&
          bord.map.section_cf.system == "CF3'";
    h.criterion(7, "birationality audit passes for all four cases, CF on actual sections",
                ok);
  }

  // 8. heavy suite
  {
    bool ok = true;
    for (const PipelineReport* r : {&dp, &cast, &bord}) {
      int d = case_degree(r->case_id);
      ok &= r->map.sectional && r->map.sectional->first == d &&
            r->map.sectional->second == d - 3;
      ok &= r->map.sectional_smooth && *r->map.sectional_smooth;
    }
    h.criterion(8, "sectional curves are (d, d-3) for d = 4,5,6 and smooth", ok);
  }

  // 9. property suites
  {
    bool ok = true;

    // kernel identities on fixtures
    Ideal tc = p3_ideal("x0*x2 - x1^2\nx1*x3 - x2^2\nx0*x3 - x1*x2\n");
    Ideal line = p3_ideal("x0\nx1\n");
    Rng rng(2);
    Ideal quartic = saturate_irrelevant(
        Ideal(Ring{p, 4}, {random_form(Ring{p, 4}, 2, rng), random_form(Ring{p, 4}, 2, rng)}));
    for (const Ideal& I : {tc, line, quartic}) {
      ok &= ideal_contains(saturate_irrelevant(I), I);
      for (const Ideal& J : {line, tc}) {
        Ideal c = colon(I, J);
        ok &= ideal_contains(I, ideal_product(c, J));
        Ideal m = intersect(I, J);
        ok &= ideal_contains(I, m) && ideal_contains(J, m);
      }
      Ideal s1 = saturate_irrelevant(I);
      ok &= ideal_equal(saturate_irrelevant(s1), s1);
    }

    // GB determinism and reduced-basis uniqueness
    {
      auto a = buchberger(tc.gens(), grevlex);
      auto b = buchberger({tc.gens()[2], tc.gens()[0], tc.gens()[1]}, grevlex);
      ok &= a.size() == b.size();
      for (size_t i = 0; i < a.size() && ok; ++i) ok &= a[i] == b[i];
    }

    // coordinate-change invariance of Hilbert data on every fixture
    for (const Ideal& I : {tc, line, quartic})
      ok &= hilbert_data(generic_coordinate_change(I, 17)) == hilbert_data(I);

    // character round trip, all valid characters of degree <= 20
    for (const auto& chi : enumerate_characters(6, 20))
      ok &= character_from_hvector(hvector_from_character(chi)) == chi;

    // 20 random CI linkages of the twisted cubic and the elliptic quartic
    int done = 0;
    for (int trial = 0; done < 20 && trial < 80; ++trial) {
      const Ideal& target = (trial % 2 == 0) ? tc : quartic;
      long long deg = (trial % 2 == 0) ? 3 : 4;
      int s = 2 + static_cast<int>(rng.below(2));
      int t = 2 + static_cast<int>(rng.below(2));
      if (static_cast<long long>(s) * t <= deg) continue;
      auto fs = graded_piece(target, s);
      auto ft = graded_piece(target, t);
      Poly f1 = random_combination(fs, rng);
      Poly f2 = random_combination(ft, rng);
      if (hilbert_data_raw(Ideal(target.ring, {f1, f2})).dim != 1) continue;
      auto [linked, cert] = link(f1, f2, target);  // throws on formula mismatch
      ok &= cert.pass;
      ++done;
    }
    ok &= done == 20;

    h.criterion(9,
                "kernel identities, GB determinism/uniqueness, Hilbert invariance, "
                "character round-trip, 20 CI linkages",
                ok);
  }

  std::printf(h.failed == 0 ? "acceptance: all criteria passed\n"
                            : "acceptance: %d criteria FAILED\n",
              h.failed);
  return h.failed == 0 ? 0 : 1;
}
